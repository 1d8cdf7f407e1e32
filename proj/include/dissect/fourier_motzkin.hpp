#pragma once

// Exact feasibility of conjunctions of affine equalities and *strict*
// inequalities. Equalities are eliminated first by solving the affine system
// and substituting its parametrization; the remaining strict system is decided
// by Fourier-Motzkin elimination over integer-normalized rows. Combining a
// strict lower and a strict upper bound yields a strict consequence, so the
// elimination is sound and complete for open polyhedra over the rationals.

#include <set>
#include <vector>

#include "dissect/matrix.hpp"
#include "dissect/rational.hpp"

namespace dissect {

struct Equality {
    std::vector<Rational> coeffs;
    Rational rhs;  // coeffs . x == rhs
};

struct StrictInequality {
    std::vector<Rational> coeffs;
    Rational rhs;
    bool greater = true;  // coeffs . x > rhs, else coeffs . x < rhs
};

namespace detail {

// One row of the integer strict system: c . y > r.
struct StrictRow {
    std::vector<Int> c;
    Int r;
};

// Scale to integers and divide out the content; returns false if the row is
// constant and violated (so the whole system is infeasible), true otherwise
// with `keep` saying whether the row is informative.
inline bool normalize_strict_row(const std::vector<Rational>& coeffs, const Rational& rhs,
                                 StrictRow& out, bool& keep) {
    Int lcm(1);
    for (const auto& q : coeffs) lcm = int_lcm(lcm, q.den());
    lcm = int_lcm(lcm, rhs.den());
    out.c.clear();
    Int content(0);
    for (const auto& q : coeffs) {
        Int v = q.num() * (lcm / q.den());
        content = int_gcd(content, int_abs(v));
        out.c.push_back(std::move(v));
    }
    out.r = rhs.num() * (lcm / rhs.den());
    bool all_zero = (content == 0);
    if (all_zero) {
        keep = false;
        return out.r < 0;  // 0 > r
    }
    Int g = int_gcd(content, int_abs(out.r));
    if (g > 1) {
        for (auto& v : out.c) v /= g;
        out.r /= g;
    }
    keep = true;
    return true;
}

// Decides whether { y : c.y > r for all rows } is nonempty.
inline bool strict_rows_feasible(std::vector<StrictRow> rows, std::size_t nvars) {
    auto reduce = [](StrictRow& row) {
        Int g(0);
        for (const auto& v : row.c) g = int_gcd(g, int_abs(v));
        if (g == 0) return;
        g = int_gcd(g, int_abs(row.r));
        if (g > 1) {
            for (auto& v : row.c) v /= g;
            row.r /= g;
        }
    };

    std::vector<bool> alive(nvars, true);
    std::size_t remaining = nvars;
    while (true) {
        // Constant rows decide immediately; duplicates are dropped.
        std::set<std::vector<Int>> seen;
        std::vector<StrictRow> active;
        for (auto& row : rows) {
            bool all_zero = true;
            for (const auto& v : row.c)
                if (v != 0) {
                    all_zero = false;
                    break;
                }
            if (all_zero) {
                if (row.r >= 0) return false;
                continue;
            }
            std::vector<Int> key = row.c;
            key.push_back(row.r);
            if (seen.insert(std::move(key)).second) active.push_back(std::move(row));
        }
        rows = std::move(active);
        if (remaining == 0 || rows.empty()) return true;

        // Pick the live variable with the cheapest pos*neg fan-out.
        std::size_t var = nvars;
        std::size_t best_cost = 0;
        for (std::size_t j = 0; j < nvars; ++j) {
            if (!alive[j]) continue;
            std::size_t pos = 0, neg = 0;
            for (const auto& row : rows) {
                if (row.c[j] > 0)
                    ++pos;
                else if (row.c[j] < 0)
                    ++neg;
            }
            std::size_t cost = pos * neg + pos + neg;
            if (var == nvars || cost < best_cost) {
                var = j;
                best_cost = cost;
            }
        }
        alive[var] = false;
        --remaining;

        std::vector<StrictRow> lowers, uppers, next;
        for (auto& row : rows) {
            if (row.c[var] > 0)
                lowers.push_back(std::move(row));
            else if (row.c[var] < 0)
                uppers.push_back(std::move(row));
            else
                next.push_back(std::move(row));
        }
        for (const auto& lo : lowers)
            for (const auto& up : uppers) {
                // lo.c[var] > 0, up.c[var] < 0; cancel the variable exactly.
                Int s = -up.c[var];
                Int t = lo.c[var];
                StrictRow combined;
                combined.c.resize(nvars, Int(0));
                for (std::size_t k = 0; k < nvars; ++k) combined.c[k] = s * lo.c[k] + t * up.c[k];
                combined.r = s * lo.r + t * up.r;
                reduce(combined);
                next.push_back(std::move(combined));
            }
        rows = std::move(next);
    }
}

}  // namespace detail

// True iff the open polyhedron cut out by the equalities and strict
// inequalities is nonempty.
inline bool fm_feasible(const std::vector<Equality>& equalities,
                        const std::vector<StrictInequality>& stricts, std::size_t nvars) {
    RationalMatrix a(equalities.size(), nvars);
    std::vector<Rational> rhs(equalities.size());
    for (std::size_t i = 0; i < equalities.size(); ++i) {
        if (equalities[i].coeffs.size() != nvars)
            throw ValidationError("equality width mismatch");
        for (std::size_t j = 0; j < nvars; ++j) a(i, j) = equalities[i].coeffs[j];
        rhs[i] = equalities[i].rhs;
    }
    auto sol = solve_affine(a, rhs);
    if (!sol) return false;

    const std::size_t f = sol->dim();
    std::vector<detail::StrictRow> rows;
    for (const auto& si : stricts) {
        if (si.coeffs.size() != nvars) throw ValidationError("inequality width mismatch");
        // Substitute x = p + N y and orient as coeffs . y > rhs.
        Rational at_point(0);
        for (std::size_t j = 0; j < nvars; ++j) at_point += si.coeffs[j] * sol->point[j];
        std::vector<Rational> c(f, Rational(0));
        for (std::size_t k = 0; k < f; ++k)
            for (std::size_t j = 0; j < nvars; ++j) c[k] += si.coeffs[j] * sol->nullspace[k][j];
        Rational r = si.rhs - at_point;
        if (!si.greater) {
            for (auto& x : c) x = -x;
            r = -r;
        }
        detail::StrictRow row;
        bool keep = true;
        if (!detail::normalize_strict_row(c, r, row, keep)) return false;
        if (keep) rows.push_back(std::move(row));
    }
    return detail::strict_rows_feasible(std::move(rows), f);
}

}  // namespace dissect
