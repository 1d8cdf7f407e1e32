#pragma once

/**
 * @file matrix.hpp
 * @brief Dense exact matrices plus the eliminations everything else rests on:
 *        reduced row echelon form, affine solving, determinants/inverses,
 *        Smith normal form and Hermite normal form.
 *
 * Key design decisions:
 * - One generic container; algorithms are free functions over
 *   Matrix<Rational> or Matrix<Int> as the math demands.
 * - rref is the canonical form used to key flats, so it must be
 *   deterministic: first-nonzero pivot selection, no pivot heuristics.
 * - Smith normal form tracks unimodular u, v with u*a*v == d and picks
 *   pivots by minimum absolute value to keep intermediate entries small.
 */

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "dissect/rational.hpp"

namespace dissect {

template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, T fill = T(0))
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
        if (rows.empty()) return Matrix();
        Matrix m(rows.size(), rows[0].size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != m.cols_) throw ValidationError("ragged matrix rows");
            for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<T> row(std::size_t i) const {
        return {data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_};
    }

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t k = 0; k < cols_; ++k) std::swap((*this)(i, k), (*this)(j, k));
    }
    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t k = 0; k < rows_; ++k) std::swap((*this)(k, i), (*this)(k, j));
    }

    void append_row(const std::vector<T>& r) {
        if (rows_ == 0 && cols_ == 0) cols_ = r.size();
        if (r.size() != cols_) throw ValidationError("appending row of wrong width");
        data_.insert(data_.end(), r.begin(), r.end());
        ++rows_;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) = default;

private:
    std::size_t rows_{0};
    std::size_t cols_{0};
    std::vector<T> data_;
};

using RationalMatrix = Matrix<Rational>;
using IntMatrix = Matrix<Int>;

template <typename T>
Matrix<T> matmul(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.cols() != b.rows()) throw ValidationError("matmul shape mismatch");
    Matrix<T> c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == T(0)) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

template <typename T>
Matrix<T> transpose(const Matrix<T>& a) {
    Matrix<T> t(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
    return t;
}

inline RationalMatrix to_rational(const IntMatrix& a) {
    RationalMatrix r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = Rational(a(i, j));
    return r;
}

// ---------------------------------------------------------------------------
// Reduced row echelon form.

struct RrefResult {
    RationalMatrix mat;
    std::vector<std::size_t> pivots;  // pivot column per pivot row
    std::size_t rank() const { return pivots.size(); }
};

inline RrefResult rref(RationalMatrix a) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t j = 0; j < a.cols() && r < a.rows(); ++j) {
        std::size_t p = r;
        while (p < a.rows() && a(p, j).is_zero()) ++p;
        if (p == a.rows()) continue;
        a.swap_rows(r, p);
        Rational scale = a(r, j);
        for (std::size_t k = j; k < a.cols(); ++k) a(r, k) /= scale;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || a(i, j).is_zero()) continue;
            Rational f = a(i, j);
            for (std::size_t k = j; k < a.cols(); ++k) a(i, k) -= f * a(r, k);
        }
        pivots.push_back(j);
        ++r;
    }
    return {std::move(a), std::move(pivots)};
}

inline std::size_t rank(const RationalMatrix& a) { return rref(a).rank(); }

// ---------------------------------------------------------------------------
// Affine systems a*x = rhs. Infeasibility is a value, not an error.

struct AffineSolution {
    std::vector<Rational> point;                   // one solution
    std::vector<std::vector<Rational>> nullspace;  // basis of the homogeneous part
    std::size_t dim() const { return nullspace.size(); }
};

inline std::optional<AffineSolution> solve_affine(const RationalMatrix& a,
                                                  const std::vector<Rational>& rhs) {
    if (rhs.size() != a.rows()) throw ValidationError("solve_affine shape mismatch");
    const std::size_t n = a.cols();
    RationalMatrix aug(a.rows(), n + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n) = rhs[i];
    }
    RrefResult red = rref(std::move(aug));
    for (std::size_t col : red.pivots)
        if (col == n) return std::nullopt;

    AffineSolution sol;
    sol.point.assign(n, Rational(0));
    std::vector<bool> is_pivot(n, false);
    for (std::size_t i = 0; i < red.pivots.size(); ++i) {
        is_pivot[red.pivots[i]] = true;
        sol.point[red.pivots[i]] = red.mat(i, n);
    }
    for (std::size_t j = 0; j < n; ++j) {
        if (is_pivot[j]) continue;
        std::vector<Rational> vec(n, Rational(0));
        vec[j] = Rational(1);
        for (std::size_t i = 0; i < red.pivots.size(); ++i) vec[red.pivots[i]] = -red.mat(i, j);
        sol.nullspace.push_back(std::move(vec));
    }
    return sol;
}

inline Rational determinant(RationalMatrix a) {
    if (a.rows() != a.cols()) throw ValidationError("determinant of non-square matrix");
    const std::size_t n = a.rows();
    Rational det(1);
    for (std::size_t j = 0; j < n; ++j) {
        std::size_t p = j;
        while (p < n && a(p, j).is_zero()) ++p;
        if (p == n) return Rational(0);
        if (p != j) {
            a.swap_rows(j, p);
            det = -det;
        }
        det *= a(j, j);
        for (std::size_t i = j + 1; i < n; ++i) {
            if (a(i, j).is_zero()) continue;
            Rational f = a(i, j) / a(j, j);
            for (std::size_t k = j; k < n; ++k) a(i, k) -= f * a(j, k);
        }
    }
    return det;
}

inline std::optional<RationalMatrix> inverse(const RationalMatrix& a) {
    if (a.rows() != a.cols()) throw ValidationError("inverse of non-square matrix");
    const std::size_t n = a.rows();
    RationalMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n + i) = Rational(1);
    }
    RrefResult red = rref(std::move(aug));
    if (red.rank() < n || red.pivots[n - 1] != n - 1) return std::nullopt;
    RationalMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = red.mat(i, n + j);
    return inv;
}

// ---------------------------------------------------------------------------
// Smith normal form: unimodular u, v with u*a*v = d, d diagonal,
// d(0,0) | d(1,1) | ... and all diagonal entries nonnegative.

struct SmithDecomposition {
    IntMatrix u, d, v;
    std::vector<Int> diagonal() const {
        std::vector<Int> out;
        for (std::size_t i = 0; i < d.rows() && i < d.cols(); ++i) out.push_back(d(i, i));
        return out;
    }
};

inline SmithDecomposition smith_normal_form(IntMatrix a) {
    const std::size_t m = a.rows(), n = a.cols();
    IntMatrix u = IntMatrix::identity(m);
    IntMatrix v = IntMatrix::identity(n);

    // Row op a_i -= q*a_t is mirrored as u_i -= q*u_t, column ops likewise on
    // v, so u*a_in*v equals the working matrix at every step.
    auto row_sub = [&](std::size_t i, std::size_t t, const Int& q) {
        if (q == 0) return;
        for (std::size_t k = 0; k < n; ++k) a(i, k) -= q * a(t, k);
        for (std::size_t k = 0; k < m; ++k) u(i, k) -= q * u(t, k);
    };
    auto col_sub = [&](std::size_t j, std::size_t t, const Int& q) {
        if (q == 0) return;
        for (std::size_t k = 0; k < m; ++k) a(k, j) -= q * a(k, t);
        for (std::size_t k = 0; k < n; ++k) v(k, j) -= q * v(k, t);
    };
    auto row_swap = [&](std::size_t i, std::size_t j) {
        a.swap_rows(i, j);
        u.swap_rows(i, j);
    };
    auto col_swap = [&](std::size_t i, std::size_t j) {
        a.swap_cols(i, j);
        v.swap_cols(i, j);
    };
    auto row_add = [&](std::size_t i, std::size_t t) {
        for (std::size_t k = 0; k < n; ++k) a(i, k) += a(t, k);
        for (std::size_t k = 0; k < m; ++k) u(i, k) += u(t, k);
    };

    for (std::size_t t = 0; t < m && t < n; ++t) {
        // Min-abs nonzero pivot from the remaining submatrix.
        std::size_t pi = t, pj = t;
        bool found = false;
        for (std::size_t i = t; i < m; ++i)
            for (std::size_t j = t; j < n; ++j) {
                if (a(i, j) == 0) continue;
                if (!found || int_abs(a(i, j)) < int_abs(a(pi, pj))) {
                    pi = i;
                    pj = j;
                    found = true;
                }
            }
        if (!found) break;
        row_swap(t, pi);
        col_swap(t, pj);

        for (;;) {
            bool restart = false;
            for (std::size_t i = t + 1; i < m && !restart; ++i) {
                if (a(i, t) == 0) continue;
                row_sub(i, t, a(i, t) / a(t, t));
                if (a(i, t) != 0) {
                    // Truncated division left a smaller remainder; promote it.
                    row_swap(t, i);
                    restart = true;
                }
            }
            if (restart) continue;
            for (std::size_t j = t + 1; j < n && !restart; ++j) {
                if (a(t, j) == 0) continue;
                col_sub(j, t, a(t, j) / a(t, t));
                if (a(t, j) != 0) {
                    col_swap(t, j);
                    restart = true;
                }
            }
            if (restart) continue;

            // Pivot must divide every remaining entry for the chain d1|d2|...
            bool fixed = false;
            for (std::size_t i = t + 1; i < m && !fixed; ++i)
                for (std::size_t j = t + 1; j < n && !fixed; ++j)
                    if (a(i, j) % a(t, t) != 0) {
                        row_add(t, i);
                        fixed = true;
                    }
            if (!fixed) break;
        }

        if (a(t, t) < 0) {
            for (std::size_t k = 0; k < n; ++k) a(t, k) = -a(t, k);
            for (std::size_t k = 0; k < m; ++k) u(t, k) = -u(t, k);
        }
    }
    return {std::move(u), std::move(a), std::move(v)};
}

// ---------------------------------------------------------------------------
// Hermite normal form of the row lattice: unique echelon basis with positive
// pivots and entries above each pivot reduced into [0, pivot). Zero rows are
// dropped, so the result has rank-many rows.

inline IntMatrix hermite_normal_form(IntMatrix a) {
    const std::size_t m = a.rows(), n = a.cols();
    std::size_t r = 0;
    for (std::size_t j = 0; j < n && r < m; ++j) {
        // Eliminate below row r in column j via gcd row reductions.
        for (;;) {
            std::size_t best = m;
            for (std::size_t i = r; i < m; ++i)
                if (a(i, j) != 0 && (best == m || int_abs(a(i, j)) < int_abs(a(best, j)))) best = i;
            if (best == m) break;
            a.swap_rows(r, best);
            bool clean = true;
            for (std::size_t i = r + 1; i < m; ++i) {
                if (a(i, j) == 0) continue;
                Int q = a(i, j) / a(r, j);
                for (std::size_t k = 0; k < n; ++k) a(i, k) -= q * a(r, k);
                if (a(i, j) != 0) clean = false;
            }
            if (clean) break;
        }
        if (a(r, j) == 0) continue;
        if (a(r, j) < 0)
            for (std::size_t k = 0; k < n; ++k) a(r, k) = -a(r, k);
        for (std::size_t i = 0; i < r; ++i) {
            Int q = floor_div(a(i, j), a(r, j));
            if (q == 0) continue;
            for (std::size_t k = 0; k < n; ++k) a(i, k) -= q * a(r, k);
        }
        ++r;
    }
    IntMatrix out(r, n);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) = a(i, j);
    return out;
}

}  // namespace dissect
