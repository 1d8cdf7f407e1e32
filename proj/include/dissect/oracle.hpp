#pragma once

/**
 * @file oracle.hpp
 * @brief Brute-force geometric checks that never touch the Mobius layer.
 *
 * Faces of a hyperplane arrangement are enumerated as sign vectors: each
 * candidate in {-1,0,+1}^n is tested for realizability with exact
 * Fourier-Motzkin elimination. Everything else (f-vectors, chamber counts,
 * chain fibers, sphere/projective cell counts) is derived from that list by
 * counting, so agreement with the formula side is meaningful evidence.
 *
 * Enumeration is 3^n; the cap keeps accidental blowups at bay and can be
 * raised through the DISSECT_CAP environment variable.
 */

#include <cstdlib>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "dissect/arrangement.hpp"
#include "dissect/builders.hpp"
#include "dissect/errors.hpp"
#include "dissect/fourier_motzkin.hpp"

namespace dissect {

inline std::size_t oracle_cap() {
    const char* s = std::getenv("DISSECT_CAP");
    if (s == nullptr || *s == '\0') return 12;
    std::string v(s);
    for (char c : v)
        if (c < '0' || c > '9')
            throw ValidationError("DISSECT_CAP must be a positive integer, got '" + v + "'");
    return static_cast<std::size_t>(std::stoul(v));
}

struct FaceEnumeration {
    int ambient_dim = 0;
    std::size_t n = 0;                    // number of hyperplanes
    std::vector<std::vector<int>> faces;  // sign vectors, one entry per hyperplane
    std::vector<int> dims;
    std::vector<std::string> flat_ids;    // smallest flat containing the face

    // Is face i contained in the closure of face j?
    bool in_closure(std::size_t i, std::size_t j) const {
        for (std::size_t h = 0; h < n; ++h)
            if (faces[i][h] != 0 && faces[i][h] != faces[j][h]) return false;
        return true;
    }
};

inline FaceEnumeration enumerate_faces(const HyperplaneSpec& spec) {
    const int l = spec.ambient_dim;
    if (l < 0) throw ValidationError("negative ambient dimension");
    const std::size_t n = spec.hyperplanes.size();
    if (n > oracle_cap())
        throw CapExceeded("face enumeration over " + std::to_string(n) +
                          " hyperplanes exceeds the cap of " + std::to_string(oracle_cap()));
    for (std::size_t h = 0; h < n; ++h) {
        const auto& hp = spec.hyperplanes[h];
        if (static_cast<int>(hp.normal.size()) != l)
            throw ValidationError("hyperplane " + std::to_string(h) + " has a normal of length " +
                                  std::to_string(hp.normal.size()) + ", expected " +
                                  std::to_string(l));
        if (std::all_of(hp.normal.begin(), hp.normal.end(),
                        [](const Rational& r) { return r.is_zero(); }))
            throw ValidationError("hyperplane " + std::to_string(h) + " has a zero normal");
    }

    // Per zero set: the flat it cuts out and every remaining hyperplane
    // rewritten in the flat's own coordinates x = p + N y.
    struct ZeroSet {
        bool feasible = false;
        int dim = 0;
        std::string slug;
        std::vector<std::vector<Rational>> rows;  // [coeffs | rhs] per hyperplane, empty inside the set
    };
    std::unordered_map<unsigned long, ZeroSet> cache;

    auto zero_set = [&](unsigned long mask) -> const ZeroSet& {
        auto it = cache.find(mask);
        if (it != cache.end()) return it->second;
        ZeroSet z;
        RationalMatrix a(0, static_cast<std::size_t>(l));
        std::vector<Rational> b;
        RationalMatrix aug(0, static_cast<std::size_t>(l) + 1);
        for (std::size_t h = 0; h < n; ++h) {
            if (!(mask >> h & 1)) continue;
            a.append_row(spec.hyperplanes[h].normal);
            b.push_back(spec.hyperplanes[h].offset);
            auto row = spec.hyperplanes[h].normal;
            row.push_back(spec.hyperplanes[h].offset);
            aug.append_row(row);
        }
        auto sol = solve_affine(a, b);
        if (sol) {
            z.feasible = true;
            z.dim = static_cast<int>(sol->dim());
            RrefResult red = rref(aug);
            for (std::size_t i = 0; i < red.rank(); ++i) {
                if (i) z.slug += ";";
                z.slug += detail::equation_slug(red.mat.row(i));
            }
            if (z.slug.empty()) z.slug = "X";
            z.rows.resize(n);
            for (std::size_t h = 0; h < n; ++h) {
                if (mask >> h & 1) continue;
                const auto& normal = spec.hyperplanes[h].normal;
                std::vector<Rational> row(sol->dim() + 1, Rational(0));
                for (std::size_t j = 0; j < sol->dim(); ++j)
                    for (std::size_t k = 0; k < normal.size(); ++k)
                        row[j] += normal[k] * sol->nullspace[j][k];
                row[sol->dim()] = spec.hyperplanes[h].offset;
                for (std::size_t k = 0; k < normal.size(); ++k)
                    row[sol->dim()] -= normal[k] * sol->point[k];
                z.rows[h] = std::move(row);
            }
        }
        return cache.emplace(mask, std::move(z)).first->second;
    };

    FaceEnumeration out;
    out.ambient_dim = l;
    out.n = n;
    std::vector<int> sigma(n, -1);
    for (;;) {
        unsigned long mask = 0;
        for (std::size_t h = 0; h < n; ++h)
            if (sigma[h] == 0) mask |= 1ul << h;
        const ZeroSet& z = zero_set(mask);
        if (z.feasible) {
            const std::size_t d = static_cast<std::size_t>(z.dim);
            bool ok = true;
            std::vector<detail::StrictRow> rows;
            for (std::size_t h = 0; h < n && ok; ++h) {
                if (sigma[h] == 0) continue;
                std::vector<Rational> coeffs(z.rows[h].begin(), z.rows[h].begin() + d);
                Rational rhs = z.rows[h][d];
                if (sigma[h] < 0) {
                    for (auto& c : coeffs) c = -c;
                    rhs = -rhs;
                }
                detail::StrictRow row;
                bool keep = false;
                ok = detail::normalize_strict_row(coeffs, rhs, row, keep);
                if (ok && keep) rows.push_back(std::move(row));
            }
            if (ok && detail::strict_rows_feasible(std::move(rows), d)) {
                out.faces.push_back(sigma);
                out.dims.push_back(z.dim);
                out.flat_ids.push_back(z.slug);
            }
        }
        std::size_t pos = 0;
        while (pos < n && sigma[pos] == 1) sigma[pos++] = -1;
        if (pos == n) break;
        ++sigma[pos];
    }
    return out;
}

inline std::vector<Int> oracle_f_vector(const FaceEnumeration& e) {
    std::vector<Int> f(static_cast<std::size_t>(e.ambient_dim) + 1, Int(0));
    for (int d : e.dims) f[static_cast<std::size_t>(d)] += 1;
    return f;
}

inline Int oracle_chamber_count(const FaceEnumeration& e) {
    Int count(0);
    for (const auto& sigma : e.faces)
        if (std::all_of(sigma.begin(), sigma.end(), [](int s) { return s != 0; })) count += 1;
    return count;
}

// Counts face chains F_1 >= F_2 >= ... (each face in the closure of the one
// before) whose flats are exactly the given chain of flat ids.
inline Int chain_fiber_direct(const FaceEnumeration& e, const std::vector<std::string>& chain) {
    if (chain.empty()) throw NotAChain("empty chain");
    std::vector<std::vector<std::size_t>> layer(chain.size());
    for (std::size_t i = 0; i < chain.size(); ++i) {
        for (std::size_t f = 0; f < e.faces.size(); ++f)
            if (e.flat_ids[f] == chain[i]) layer[i].push_back(f);
        if (layer[i].empty())
            throw ValidationError("'" + chain[i] + "' is not a flat of the enumeration");
    }
    std::map<std::size_t, Int> cnt;
    for (std::size_t f : layer.back()) cnt[f] = Int(1);
    for (std::size_t i = chain.size() - 1; i-- > 0;) {
        std::map<std::size_t, Int> next;
        for (std::size_t f : layer[i]) {
            Int acc(0);
            for (const auto& [g, c] : cnt)
                if (e.in_closure(g, f)) acc += c;
            if (acc != 0) next[f] = std::move(acc);
        }
        cnt = std::move(next);
    }
    Int total(0);
    for (const auto& [f, c] : cnt) total += c;
    return total;
}

// ---------------------------------------------------------------------------
// Euler bookkeeping for toric models on the 2-torus: vertices and edges come
// straight from the flat list and its incidences, chambers from V - E + F = 0.

struct ToricCellCounts {
    Int vertices, edges, chambers;
};

inline ToricCellCounts toric_cell_counts(const ArrangementModel& m) {
    if (m.family != Family::toric || m.ambient_dim != 2)
        throw ValidationError("cell counts need a toric model of dimension 2");
    ToricCellCounts out{Int(0), Int(0), Int(0)};
    for (std::size_t i = 0; i < m.poset.size(); ++i) {
        if (m.flat(i).dim == 0) out.vertices += 1;
        if (m.flat(i).dim != 1) continue;
        // A circle through k vertices is divided into k arcs.
        for (std::size_t j = 0; j < m.poset.size(); ++j)
            if (m.flat(j).dim == 0 && m.poset.leq(i, j)) out.edges += 1;
    }
    out.chambers = out.edges - out.vertices;
    return out;
}

// ---------------------------------------------------------------------------
// Cell counts on the sphere and projective space obtained from a central
// hyperplane arrangement in R^(l+1) by intersecting its cones with the unit
// sphere and then identifying antipodes.

struct QuotientCounts {
    std::vector<Int> sphere_f;
    std::vector<Int> projective_f;
    int common_dim = 0;  // dimension of the intersection of all the hyperplanes
};

inline QuotientCounts quotient_counts(const HyperplaneSpec& spec) {
    for (std::size_t h = 0; h < spec.hyperplanes.size(); ++h)
        if (!spec.hyperplanes[h].offset.is_zero())
            throw NotCentral("hyperplane " + std::to_string(h) + " has a nonzero offset");
    FaceEnumeration e = enumerate_faces(spec);
    const int s = spec.ambient_dim - 1;  // dimension of the sphere
    if (s < 0) throw ValidationError("quotient counts need ambient dimension at least 1");

    std::size_t center = e.faces.size();
    for (std::size_t f = 0; f < e.faces.size(); ++f)
        if (std::all_of(e.faces[f].begin(), e.faces[f].end(), [](int v) { return v == 0; }))
            center = f;
    if (center == e.faces.size())
        throw ValidationError("central arrangement has no all-zero face");
    QuotientCounts out;
    out.common_dim = e.dims[center];
    if (out.common_dim >= 2)
        throw NotCellular("the hyperplanes share a subspace of dimension " +
                          std::to_string(out.common_dim) + ", so cone sections are not cells");

    out.sphere_f.assign(static_cast<std::size_t>(s) + 1, Int(0));
    out.projective_f.assign(static_cast<std::size_t>(s) + 1, Int(0));
    std::map<std::vector<int>, std::size_t> index;
    for (std::size_t f = 0; f < e.faces.size(); ++f) index[e.faces[f]] = f;

    for (std::size_t f = 0; f < e.faces.size(); ++f) {
        if (f == center) continue;
        std::vector<int> anti = e.faces[f];
        for (int& v : anti) v = -v;
        auto it = index.find(anti);
        if (it == index.end())
            throw OddPairing("face without an antipodal partner");
        // A cone of dimension d meets the sphere in a cell of dimension d-1.
        out.sphere_f[static_cast<std::size_t>(e.dims[f] - 1)] += 1;
        if (e.faces[f] < anti)  // count each antipodal pair once
            out.projective_f[static_cast<std::size_t>(e.dims[f] - 1)] += 1;
    }
    if (out.common_dim == 1) {
        // The common line meets the sphere in two points, identified to one.
        out.sphere_f[0] += 2;
        out.projective_f[0] += 1;
    }
    return out;
}

}  // namespace dissect
