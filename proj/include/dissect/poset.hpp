#pragma once

/**
 * @file poset.hpp
 * @brief Finite graded posets with a unique minimum, their Mobius functions,
 *        and the poset-level characteristic polynomial.
 *
 * Elements are opaque string ids. Ranks are assigned by longest chain from the
 * bottom; construction rejects cycles, multiple minimal elements, and cover
 * steps that skip a rank. mu is tabulated eagerly for all comparable pairs:
 * mu(x,x) = 1 and sum of mu(x,z) over x <= z <= y vanishes for x < y.
 */

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "dissect/errors.hpp"
#include "dissect/polynomial.hpp"
#include "dissect/rational.hpp"

namespace dissect {

class Poset {
public:
    std::size_t size() const { return ids_.size(); }
    const std::vector<std::string>& elements() const { return ids_; }
    const std::string& element(std::size_t i) const { return ids_[i]; }

    std::size_t index_of(const std::string& id) const {
        auto it = index_.find(id);
        if (it == index_.end()) throw ValidationError("unknown poset element '" + id + "'");
        return it->second;
    }
    bool contains(const std::string& id) const { return index_.count(id) != 0; }

    bool leq(std::size_t a, std::size_t b) const { return leq_[a][b]; }
    bool leq_ids(const std::string& a, const std::string& b) const {
        return leq(index_of(a), index_of(b));
    }

    int rank_of(std::size_t i) const { return rank_[i]; }
    int rank_of_id(const std::string& id) const { return rank_[index_of(id)]; }
    int height() const { return *std::max_element(rank_.begin(), rank_.end()); }

    std::size_t minimum() const { return min_; }
    const std::vector<std::pair<std::size_t, std::size_t>>& covers() const { return covers_; }

    std::vector<std::size_t> up_set(std::size_t x) const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < size(); ++i)
            if (leq_[x][i]) out.push_back(i);
        return out;
    }
    std::vector<std::size_t> down_set(std::size_t x) const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < size(); ++i)
            if (leq_[i][x]) out.push_back(i);
        return out;
    }

    friend Poset build_poset(std::vector<std::string> elements,
                             const std::vector<std::pair<std::string, std::string>>& relations);

private:
    std::vector<std::string> ids_;
    std::unordered_map<std::string, std::size_t> index_;
    std::vector<std::vector<bool>> leq_;  // reflexive transitive closure
    std::vector<int> rank_;
    std::vector<std::pair<std::size_t, std::size_t>> covers_;
    std::size_t min_{0};
};

// `relations` lists pairs (a, b) meaning a <= b; the closure is taken here.
inline Poset build_poset(std::vector<std::string> elements,
                         const std::vector<std::pair<std::string, std::string>>& relations) {
    Poset p;
    p.ids_ = std::move(elements);
    for (std::size_t i = 0; i < p.ids_.size(); ++i) {
        if (!p.index_.emplace(p.ids_[i], i).second)
            throw ValidationError("duplicate poset element '" + p.ids_[i] + "'");
    }
    const std::size_t n = p.ids_.size();
    if (n == 0) throw ValidationError("empty poset");

    std::vector<std::vector<std::size_t>> succ(n);
    for (const auto& [lo, hi] : relations) {
        std::size_t a = p.index_of(lo), b = p.index_of(hi);
        if (a != b) succ[a].push_back(b);
    }

    p.leq_.assign(n, std::vector<bool>(n, false));
    for (std::size_t s = 0; s < n; ++s) {
        // DFS reachability from s.
        std::vector<std::size_t> stack{s};
        p.leq_[s][s] = true;
        while (!stack.empty()) {
            std::size_t x = stack.back();
            stack.pop_back();
            for (std::size_t y : succ[x])
                if (!p.leq_[s][y]) {
                    p.leq_[s][y] = true;
                    stack.push_back(y);
                }
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (p.leq_[i][j] && p.leq_[j][i])
                throw CycleError("order relation has a cycle through '" + p.ids_[i] + "' and '" +
                                 p.ids_[j] + "'");

    std::size_t min_count = 0;
    for (std::size_t i = 0; i < n; ++i) {
        bool has_pred = false;
        for (std::size_t j = 0; j < n && !has_pred; ++j)
            if (j != i && p.leq_[j][i]) has_pred = true;
        if (!has_pred) {
            p.min_ = i;
            ++min_count;
        }
    }
    if (min_count != 1)
        throw NoUniqueMinimum("poset has " + std::to_string(min_count) + " minimal elements");

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j || !p.leq_[i][j]) continue;
            bool direct = true;
            for (std::size_t k = 0; k < n && direct; ++k)
                if (k != i && k != j && p.leq_[i][k] && p.leq_[k][j]) direct = false;
            if (direct) p.covers_.emplace_back(i, j);
        }

    // Longest chain from the bottom; covers must then step by exactly one.
    p.rank_.assign(n, 0);
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        std::size_t da = 0, db = 0;
        for (std::size_t k = 0; k < n; ++k) {
            if (k != a && p.leq_[k][a]) ++da;
            if (k != b && p.leq_[k][b]) ++db;
        }
        return da < db;
    });
    for (std::size_t x : order)
        for (const auto& [a, b] : p.covers_)
            if (b == x) p.rank_[x] = std::max(p.rank_[x], p.rank_[a] + 1);
    for (const auto& [a, b] : p.covers_)
        if (p.rank_[b] != p.rank_[a] + 1)
            throw NotGraded("cover " + p.ids_[a] + " < " + p.ids_[b] + " jumps from rank " +
                            std::to_string(p.rank_[a]) + " to " + std::to_string(p.rank_[b]));
    return p;
}

// ---------------------------------------------------------------------------

class MobiusTable {
public:
    explicit MobiusTable(const Poset& p) : n_(p.size()), mu_(n_ * n_, Int(0)) {
        // Process targets upward; mu(x,y) only needs values mu(x,z) for z < y.
        std::vector<std::size_t> order(n_);
        for (std::size_t i = 0; i < n_; ++i) order[i] = i;
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return p.rank_of(a) < p.rank_of(b); });
        for (std::size_t x = 0; x < n_; ++x) {
            mu_[x * n_ + x] = 1;
            for (std::size_t y : order) {
                if (y == x || !p.leq(x, y)) continue;
                Int acc(0);
                for (std::size_t z = 0; z < n_; ++z)
                    if (z != y && p.leq(x, z) && p.leq(z, y)) acc += mu_[x * n_ + z];
                mu_[x * n_ + y] = -acc;
            }
        }
    }

    // Zero for incomparable pairs and for y < x.
    const Int& mu(std::size_t x, std::size_t y) const { return mu_[x * n_ + y]; }

private:
    std::size_t n_;
    std::vector<Int> mu_;
};

inline MobiusTable mobius_table(const Poset& p) { return MobiusTable(p); }

// Given g(y) = sum of f(x) over x <= y, recovers f via
// f(y) = sum of mu(x,y) g(x) over x <= y.
inline std::map<std::string, Rational> mobius_invert(const Poset& p,
                                                     const std::map<std::string, Rational>& g) {
    MobiusTable table(p);
    std::map<std::string, Rational> f;
    std::vector<Rational> gv(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        auto it = g.find(p.element(i));
        if (it == g.end())
            throw MissingAssignment("no value for poset element '" + p.element(i) + "'");
        gv[i] = it->second;
    }
    for (std::size_t y = 0; y < p.size(); ++y) {
        Rational acc(0);
        for (std::size_t x = 0; x < p.size(); ++x)
            if (p.leq(x, y)) acc += Rational(table.mu(x, y)) * gv[x];
        f[p.element(y)] = acc;
    }
    return f;
}

// p(t) = sum over x of mu(bottom, x) t^(n - rank(x)); n must dominate the
// poset height so no exponent goes negative.
inline IntPolynomial characteristic_polynomial_of_poset(const Poset& p, int n) {
    if (n < p.height())
        throw PreconditionFailed("characteristic polynomial needs n >= poset height " +
                                 std::to_string(p.height()));
    MobiusTable table(p);
    IntPolynomial out;
    for (std::size_t x = 0; x < p.size(); ++x) {
        const Int& m = table.mu(p.minimum(), x);
        if (m == 0) continue;
        out += IntPolynomial::monomial(static_cast<std::size_t>(n - p.rank_of(x)), m);
    }
    return out;
}

inline Poset interval_subposet(const Poset& p, const std::string& x, const std::string& y) {
    std::size_t a = p.index_of(x), b = p.index_of(y);
    if (!p.leq(a, b))
        throw NotComparable("'" + x + "' is not below '" + y + "'");
    std::vector<std::string> elems;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p.leq(a, i) && p.leq(i, b)) elems.push_back(p.element(i));
    std::vector<std::pair<std::string, std::string>> rels;
    for (const auto& lo : elems)
        for (const auto& hi : elems)
            if (lo != hi && p.leq_ids(lo, hi)) rels.emplace_back(lo, hi);
    return build_poset(std::move(elems), rels);
}

namespace detail {

// Unique minimal common upper bound, if it exists.
inline std::optional<std::size_t> join(const Poset& p, std::size_t a, std::size_t b) {
    std::vector<std::size_t> ub;
    for (std::size_t z = 0; z < p.size(); ++z)
        if (p.leq(a, z) && p.leq(b, z)) ub.push_back(z);
    std::optional<std::size_t> best;
    for (std::size_t z : ub) {
        bool minimal = true;
        for (std::size_t w : ub)
            if (w != z && p.leq(w, z)) minimal = false;
        if (minimal) {
            if (best) return std::nullopt;
            best = z;
        }
    }
    return best;
}

inline std::optional<std::size_t> meet(const Poset& p, std::size_t a, std::size_t b) {
    std::vector<std::size_t> lb;
    for (std::size_t z = 0; z < p.size(); ++z)
        if (p.leq(z, a) && p.leq(z, b)) lb.push_back(z);
    std::optional<std::size_t> best;
    for (std::size_t z : lb) {
        bool maximal = true;
        for (std::size_t w : lb)
            if (w != z && p.leq(z, w)) maximal = false;
        if (maximal) {
            if (best) return std::nullopt;
            best = z;
        }
    }
    return best;
}

inline bool is_cover(const Poset& p, std::size_t a, std::size_t b) {
    for (const auto& [x, y] : p.covers())
        if (x == a && y == b) return true;
    return false;
}

}  // namespace detail

// Lattice + atomic + the semimodular cover law (if x and y both cover their
// meet, their join covers x and y).
inline bool is_geometric_lattice(const Poset& p) {
    const std::size_t n = p.size();
    std::vector<std::vector<std::size_t>> joins(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            auto j = detail::join(p, a, b);
            auto m = detail::meet(p, a, b);
            if (!j || !m) return false;
            joins[a][b] = *j;
        }

    std::vector<std::size_t> atoms;
    for (const auto& [a, b] : p.covers())
        if (a == p.minimum()) atoms.push_back(b);
    for (std::size_t x = 0; x < n; ++x) {
        std::size_t acc = p.minimum();
        for (std::size_t at : atoms)
            if (p.leq(at, x)) acc = joins[acc][at];
        if (acc != x) return false;
    }

    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = x + 1; y < n; ++y) {
            auto m = detail::meet(p, x, y);
            if (!detail::is_cover(p, *m, x) || !detail::is_cover(p, *m, y)) continue;
            std::size_t j = joins[x][y];
            if (!detail::is_cover(p, x, j) || !detail::is_cover(p, y, j)) return false;
        }
    return true;
}

// True iff [x, y] is order-isomorphic to the Boolean lattice on its atoms.
inline bool is_boolean_interval(const Poset& p, const std::string& x, const std::string& y) {
    Poset iv = interval_subposet(p, x, y);
    std::vector<std::size_t> atoms;
    for (const auto& [a, b] : iv.covers())
        if (a == iv.minimum()) atoms.push_back(b);
    const std::size_t k = atoms.size();
    if (iv.size() != (std::size_t(1) << k)) return false;
    // Each element must be determined by, and ordered like, its atom support.
    std::set<std::vector<bool>> supports;
    for (std::size_t e = 0; e < iv.size(); ++e) {
        std::vector<bool> sup(k);
        for (std::size_t i = 0; i < k; ++i) sup[i] = iv.leq(atoms[i], e);
        if (!supports.insert(sup).second) return false;
        for (std::size_t f = 0; f < iv.size(); ++f) {
            if (!iv.leq(e, f)) continue;
            for (std::size_t i = 0; i < k; ++i)
                if (iv.leq(atoms[i], e) && !iv.leq(atoms[i], f)) return false;
        }
    }
    return true;
}

// All chains (totally ordered subsets), smallest first, with at least
// `min_size` elements; each chain is reported in increasing order.
inline std::vector<std::vector<std::string>> enumerate_chains(const Poset& p,
                                                              std::size_t min_size) {
    std::vector<std::vector<std::string>> out;
    std::vector<std::size_t> current;
    auto emit = [&]() {
        if (current.size() < min_size) return;
        std::vector<std::string> chain;
        for (std::size_t i : current) chain.push_back(p.element(i));
        out.push_back(std::move(chain));
    };
    // Chains extend upward from their largest element, so each set is built once.
    auto dfs = [&](auto&& self, std::size_t last) -> void {
        emit();
        for (std::size_t nxt = 0; nxt < p.size(); ++nxt)
            if (nxt != last && p.leq(last, nxt)) {
                current.push_back(nxt);
                self(self, nxt);
                current.pop_back();
            }
    };
    for (std::size_t s = 0; s < p.size(); ++s) {
        current.push_back(s);
        dfs(dfs, s);
        current.pop_back();
    }
    return out;
}

// Debug rendering: one line per element, "rank k: id (covers: a, b)".
inline std::string hasse_text(const Poset& p) {
    std::vector<std::size_t> order(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (p.rank_of(a) != p.rank_of(b)) return p.rank_of(a) < p.rank_of(b);
        return p.element(a) < p.element(b);
    });
    std::string out;
    for (std::size_t x : order) {
        out += "rank " + std::to_string(p.rank_of(x)) + ": " + p.element(x);
        std::vector<std::string> below;
        for (const auto& [a, b] : p.covers())
            if (b == x) below.push_back(p.element(a));
        std::sort(below.begin(), below.end());
        if (!below.empty()) {
            out += " (covers: ";
            for (std::size_t i = 0; i < below.size(); ++i) {
                if (i) out += ", ";
                out += below[i];
            }
            out += ")";
        }
        out += "\n";
    }
    return out;
}

}  // namespace dissect
