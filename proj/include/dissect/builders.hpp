#pragma once

/**
 * @file builders.hpp
 * @brief Constructs arrangement models from geometric input: affine
 *        hyperplanes in R^l, great subspheres of S^l, hyperplanes in RP^l,
 *        and point sets on the circle R/Z.
 *
 * All builders share the same skeleton: canonicalize the input hypersurfaces,
 * enumerate flats by closing the set under pairwise intersection, key each
 * flat by the reduced row echelon form of its defining equations (unique per
 * affine subspace), then hand flats plus containment relations to make_model,
 * which rebuilds the poset and cross-checks rank against codimension.
 *
 * Ids never contain ',' because the CLI uses it to separate chain elements.
 */

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dissect/arrangement.hpp"
#include "dissect/errors.hpp"
#include "dissect/matrix.hpp"

namespace dissect {

struct HyperplaneSpec {
    int ambient_dim = 0;
    struct Hyperplane {
        std::vector<Rational> normal;
        Rational offset;  // the set { x : normal . x = offset }
    };
    std::vector<Hyperplane> hyperplanes;
};

// Great subspheres of S^l: each normal a in R^(l+1) contributes
// { x in S^l : a . x = 0 }.
struct SphereSpec {
    int ambient_dim = 0;  // the sphere's own dimension l
    std::vector<std::vector<Rational>> normals;
};

// Hyperplanes in RP^l, same input shape as spheres.
struct ProjectiveSpec {
    int ambient_dim = 0;
    std::vector<std::vector<Rational>> normals;
};

struct CircleSpec {
    std::vector<Rational> points;  // coordinates on R/Z, reduced mod 1
};

// Input-size guard; flat enumeration is exponential in the worst case.
inline constexpr std::size_t kBuilderCap = 20;

namespace detail {

// Scales a rational row to coprime integers; optionally flips sign so the
// first nonzero entry is positive. All-zero rows come back as zeros.
inline std::vector<Int> primitive_row(const std::vector<Rational>& row, bool sign_normalize = true) {
    Int scale(1);
    for (const auto& r : row) scale = int_lcm(scale, r.den());
    std::vector<Int> z;
    z.reserve(row.size());
    for (const auto& r : row) z.push_back(r.num() * (scale / r.den()));
    Int g(0);
    for (const auto& v : z) g = int_gcd(g, int_abs(v));
    if (g > 1)
        for (auto& v : z) v /= g;
    if (sign_normalize)
        for (const auto& v : z) {
            if (v == 0) continue;
            if (v < 0)
                for (auto& w : z) w = -w;
            break;
        }
    return z;
}

// Renders one equation row [coeffs | rhs] as e.g. "2x0-3x1=5".
inline std::string equation_slug(const std::vector<Rational>& row) {
    std::vector<Int> z = primitive_row(row);
    const std::size_t n = row.size() - 1;
    std::string lhs;
    for (std::size_t j = 0; j < n; ++j) {
        if (z[j] == 0) continue;
        if (z[j] > 0 && !lhs.empty()) lhs += "+";
        if (z[j] == -1)
            lhs += "-";
        else if (z[j] != 1)
            lhs += z[j].str();
        lhs += "x" + std::to_string(j);
    }
    if (lhs.empty()) lhs = "0";
    return lhs + "=" + z[n].str();
}

struct ProtoFlat {
    RationalMatrix eqs;  // rref'd [A | b], nonzero rows only
    AffineSolution sol;
    int dim = 0;
};

inline std::string system_key(const RationalMatrix& eqs) {
    std::string key;
    for (std::size_t i = 0; i < eqs.rows(); ++i)
        for (std::size_t j = 0; j < eqs.cols(); ++j) key += eqs(i, j).str() + " ";
    return key;
}

// Closes the given hypersurface equations under intersection. Rows are
// [A | b] of width nvars+1; the ambient flat (empty system) is index 0.
// Empty intersections are dropped, coincident ones merged by rref key.
inline std::vector<ProtoFlat> close_under_intersection(
    const std::vector<std::vector<Rational>>& rows, std::size_t nvars) {
    std::vector<ProtoFlat> flats;
    std::map<std::string, std::size_t> seen;

    auto try_add = [&](RationalMatrix candidate) -> void {
        RrefResult red = rref(std::move(candidate));
        for (std::size_t col : red.pivots)
            if (col == nvars) return;  // inconsistent system, empty flat
        RationalMatrix trimmed(red.rank(), nvars + 1);
        for (std::size_t i = 0; i < red.rank(); ++i)
            for (std::size_t j = 0; j <= nvars; ++j) trimmed(i, j) = red.mat(i, j);
        std::string key = system_key(trimmed);
        if (seen.count(key)) return;

        RationalMatrix a(trimmed.rows(), nvars);
        std::vector<Rational> b(trimmed.rows());
        for (std::size_t i = 0; i < trimmed.rows(); ++i) {
            for (std::size_t j = 0; j < nvars; ++j) a(i, j) = trimmed(i, j);
            b[i] = trimmed(i, nvars);
        }
        auto sol = solve_affine(a, b);
        seen.emplace(std::move(key), flats.size());
        flats.push_back({std::move(trimmed), std::move(*sol),
                         static_cast<int>(nvars - trimmed.rows())});
    };

    try_add(RationalMatrix(0, nvars + 1));
    std::size_t scanned = 0;
    while (scanned < flats.size()) {
        // Copy, since try_add may reallocate the vector.
        RationalMatrix base = flats[scanned].eqs;
        ++scanned;
        for (const auto& row : rows) {
            RationalMatrix candidate = base;
            candidate.append_row(row);
            try_add(std::move(candidate));
        }
    }
    return flats;
}

// Do the rows of `small` lie in the row space of the rref'd `big`? With both
// systems feasible this decides solution-set containment: the flat cut out by
// `small` contains the flat cut out by `big`.
inline bool rows_in_rowspace(const RationalMatrix& small, const RationalMatrix& big) {
    if (small.rows() == 0) return true;
    RationalMatrix stacked = big;
    for (std::size_t i = 0; i < small.rows(); ++i) stacked.append_row(small.row(i));
    return rank(stacked) == big.rows();
}

struct NamedFlat {
    FlatNode node;
    RationalMatrix eqs;
};

// Sorts flats, derives all containment relations, and assembles the model.
inline ArrangementModel assemble(Family family, int ambient_dim, std::vector<NamedFlat> flats,
                                 Cellularity cellularity) {
    std::sort(flats.begin(), flats.end(), [&](const NamedFlat& a, const NamedFlat& b) {
        int ca = ambient_dim - a.node.dim, cb = ambient_dim - b.node.dim;
        return ca != cb ? ca < cb : a.node.id < b.node.id;
    });
    std::vector<std::pair<std::string, std::string>> relations;
    for (std::size_t i = 0; i < flats.size(); ++i)
        for (std::size_t j = 0; j < flats.size(); ++j) {
            if (i == j || flats[i].node.dim <= flats[j].node.dim) continue;
            if (rows_in_rowspace(flats[i].eqs, flats[j].eqs))
                relations.emplace_back(flats[i].node.id, flats[j].node.id);
        }
    std::vector<FlatNode> nodes;
    nodes.reserve(flats.size());
    for (auto& f : flats) nodes.push_back(std::move(f.node));
    return make_model(family, ambient_dim, std::move(nodes), relations, cellularity);
}

}  // namespace detail

// ---------------------------------------------------------------------------

inline ArrangementModel build_hyperplane(const HyperplaneSpec& spec) {
    const int l = spec.ambient_dim;
    if (l < 0) throw ValidationError("negative ambient dimension");
    if (spec.hyperplanes.size() > kBuilderCap)
        throw CapExceeded("more than " + std::to_string(kBuilderCap) + " hyperplanes");

    std::vector<std::vector<Rational>> rows;
    std::map<std::vector<Int>, std::size_t> canon;
    for (std::size_t i = 0; i < spec.hyperplanes.size(); ++i) {
        const auto& h = spec.hyperplanes[i];
        if (static_cast<int>(h.normal.size()) != l)
            throw ValidationError("hyperplane " + std::to_string(i) + " has a normal of length " +
                                  std::to_string(h.normal.size()) + ", expected " +
                                  std::to_string(l));
        std::vector<Rational> row = h.normal;
        row.push_back(h.offset);
        std::vector<Int> key = detail::primitive_row(row);
        if (std::all_of(key.begin(), key.end() - 1, [](const Int& v) { return v == 0; }))
            throw ValidationError("hyperplane " + std::to_string(i) + " has a zero normal");
        auto [it, fresh] = canon.emplace(std::move(key), i);
        if (!fresh)
            throw DuplicateHyperplane("hyperplanes " + std::to_string(it->second) + " and " +
                                      std::to_string(i) + " describe the same set");
        rows.push_back(std::move(row));
    }

    auto protos = detail::close_under_intersection(rows, static_cast<std::size_t>(l));
    std::vector<detail::NamedFlat> flats;
    for (auto& p : protos) {
        FlatNode node;
        if (p.eqs.rows() == 0) {
            node.id = "X";
        } else {
            for (std::size_t i = 0; i < p.eqs.rows(); ++i) {
                if (i) node.id += ";";
                node.id += detail::equation_slug(p.eqs.row(i));
            }
        }
        node.dim = p.dim;
        node.poin_c = IntPolynomial::monomial(static_cast<std::size_t>(p.dim));
        node.witness = p.sol.point;
        flats.push_back({std::move(node), std::move(p.eqs)});
    }
    return detail::assemble(Family::hyperplane, l, std::move(flats), Cellularity::validated);
}

inline ArrangementModel build_sphere(const SphereSpec& spec) {
    const int l = spec.ambient_dim;
    if (l < 1) throw ValidationError("sphere models need ambient dimension at least 1");
    if (spec.normals.empty()) throw EmptySpec("sphere models need at least one great subsphere");
    if (spec.normals.size() > kBuilderCap)
        throw CapExceeded("more than " + std::to_string(kBuilderCap) + " great subspheres");

    std::vector<std::vector<Rational>> rows;
    std::map<std::vector<Int>, std::size_t> canon;
    for (std::size_t i = 0; i < spec.normals.size(); ++i) {
        const auto& a = spec.normals[i];
        if (static_cast<int>(a.size()) != l + 1)
            throw ValidationError("normal " + std::to_string(i) + " has length " +
                                  std::to_string(a.size()) + ", expected " + std::to_string(l + 1));
        std::vector<Int> key = detail::primitive_row(a);
        if (std::all_of(key.begin(), key.end(), [](const Int& v) { return v == 0; }))
            throw ValidationError("normal " + std::to_string(i) + " is zero");
        auto [it, fresh] = canon.emplace(std::move(key), i);
        if (!fresh)
            throw ParallelNormals("normals " + std::to_string(it->second) + " and " +
                                  std::to_string(i) + " cut the same great subsphere");
        std::vector<Rational> row = a;
        row.push_back(Rational(0));
        rows.push_back(std::move(row));
    }

    auto protos = detail::close_under_intersection(rows, static_cast<std::size_t>(l) + 1);
    std::vector<detail::NamedFlat> flats;
    for (auto& p : protos) {
        const int d = p.dim;  // linear dimension of the subspace
        if (d == 0) continue; // meets the sphere in the empty set
        if (d == 1) {
            // The subspace is a line; it meets the sphere in two antipodal
            // points, which are separate flats.
            std::vector<Int> dir = detail::primitive_row(p.sol.nullspace[0]);
            for (int s : {1, -1}) {
                FlatNode node;
                node.id = "pt(";
                node.witness.reserve(dir.size());
                for (std::size_t j = 0; j < dir.size(); ++j) {
                    Int c = s * dir[j];
                    if (j) node.id += " ";
                    node.id += c.str();
                    node.witness.push_back(Rational(c));
                }
                node.id += ")";
                node.dim = 0;
                node.poin_c = IntPolynomial::monomial(0);
                flats.push_back({std::move(node), p.eqs});
            }
            continue;
        }
        FlatNode node;
        if (p.eqs.rows() == 0) {
            node.id = "X";
        } else {
            for (std::size_t i = 0; i < p.eqs.rows(); ++i) {
                if (i) node.id += ";";
                node.id += detail::equation_slug(p.eqs.row(i));
            }
        }
        node.dim = d - 1;
        node.poin_c = IntPolynomial::monomial(0) +
                      IntPolynomial::monomial(static_cast<std::size_t>(d - 1));
        flats.push_back({std::move(node), std::move(p.eqs)});
    }

    // Cells are only guaranteed when the common intersection of the cutting
    // hyperplanes is the origin or a single line (antipodal point pair).
    RationalMatrix all(0, static_cast<std::size_t>(l) + 2);
    for (const auto& row : rows) all.append_row(row);
    std::size_t common_dim = static_cast<std::size_t>(l) + 1 - rank(all);
    Cellularity cellularity =
        common_dim <= 1 ? Cellularity::validated : Cellularity::asserted;
    return detail::assemble(Family::sphere, l, std::move(flats), cellularity);
}

inline ArrangementModel build_projective(const ProjectiveSpec& spec) {
    const int l = spec.ambient_dim;
    if (l < 1) throw ValidationError("projective models need ambient dimension at least 1");
    if (spec.normals.empty()) throw EmptySpec("projective models need at least one hyperplane");
    if (spec.normals.size() > kBuilderCap)
        throw CapExceeded("more than " + std::to_string(kBuilderCap) + " hyperplanes");

    std::vector<std::vector<Rational>> rows;
    std::map<std::vector<Int>, std::size_t> canon;
    for (std::size_t i = 0; i < spec.normals.size(); ++i) {
        const auto& a = spec.normals[i];
        if (static_cast<int>(a.size()) != l + 1)
            throw ValidationError("normal " + std::to_string(i) + " has length " +
                                  std::to_string(a.size()) + ", expected " + std::to_string(l + 1));
        std::vector<Int> key = detail::primitive_row(a);
        if (std::all_of(key.begin(), key.end(), [](const Int& v) { return v == 0; }))
            throw ValidationError("normal " + std::to_string(i) + " is zero");
        auto [it, fresh] = canon.emplace(std::move(key), i);
        if (!fresh)
            throw ParallelNormals("normals " + std::to_string(it->second) + " and " +
                                  std::to_string(i) + " cut the same hyperplane");
        std::vector<Rational> row = a;
        row.push_back(Rational(0));
        rows.push_back(std::move(row));
    }

    auto protos = detail::close_under_intersection(rows, static_cast<std::size_t>(l) + 1);
    std::vector<detail::NamedFlat> flats;
    for (auto& p : protos) {
        const int d = p.dim;
        if (d == 0) continue;
        FlatNode node;
        if (p.eqs.rows() == 0) {
            node.id = "X";
        } else {
            for (std::size_t i = 0; i < p.eqs.rows(); ++i) {
                if (i) node.id += ";";
                node.id += detail::equation_slug(p.eqs.row(i));
            }
        }
        node.dim = d - 1;  // projective dimension
        node.poin_c = IntPolynomial::monomial(0);
        if ((d - 1) % 2 == 1)
            node.poin_c += IntPolynomial::monomial(static_cast<std::size_t>(d - 1));
        flats.push_back({std::move(node), std::move(p.eqs)});
    }

    RationalMatrix all(0, static_cast<std::size_t>(l) + 2);
    for (const auto& row : rows) all.append_row(row);
    std::size_t common_dim = static_cast<std::size_t>(l) + 1 - rank(all);
    Cellularity cellularity =
        common_dim <= 1 ? Cellularity::validated : Cellularity::asserted;
    return detail::assemble(Family::projective, l, std::move(flats), cellularity);
}

inline ArrangementModel build_circle(const CircleSpec& spec) {
    if (spec.points.empty())
        throw EmptySpec("circle models need at least one point");
    if (spec.points.size() > kBuilderCap)
        throw CapExceeded("more than " + std::to_string(kBuilderCap) + " points");

    std::vector<Rational> pts;
    for (const auto& p : spec.points) {
        Rational r = p.mod1();
        if (std::find(pts.begin(), pts.end(), r) != pts.end())
            throw Duplicate("point " + r.str() + " appears twice on the circle");
        pts.push_back(r);
    }
    std::sort(pts.begin(), pts.end());

    std::vector<FlatNode> flats;
    std::vector<std::pair<std::string, std::string>> relations;
    FlatNode ambient;
    ambient.id = "X";
    ambient.dim = 1;
    ambient.poin_c = one_plus_t_power(1);
    flats.push_back(std::move(ambient));
    for (const auto& p : pts) {
        FlatNode node;
        node.id = p.str();
        node.dim = 0;
        node.poin_c = IntPolynomial::monomial(0);
        node.witness = {p};
        relations.emplace_back("X", node.id);
        flats.push_back(std::move(node));
    }
    return make_model(Family::circle, 1, std::move(flats), relations, Cellularity::validated);
}

}  // namespace dissect
