#pragma once

/**
 * @file toric.hpp
 * @brief Arrangement models on the torus R^l / Z^l cut out by hypersurfaces
 *        { x : c . x = b (mod 1) } with integer covector c.
 *
 * Intersections of such hypersurfaces are disjoint unions of translated
 * subtori, and each connected component is its own flat. A system A x = b
 * (mod 1) is solved through the Smith normal form u*A*v = d: in the
 * coordinates y = v^-1 x the equations decouple into d_i y_i = (u b)_i,
 * giving prod(d_i) components of dimension l - rank. Zero rows are the
 * feasibility conditions (u b)_i integral.
 *
 * A component is keyed by the pair (C, gamma): C is the Hermite normal form
 * basis of the saturated covector lattice vanishing on its direction subtorus
 * (the first rank rows of v^-1), and gamma = C x0 mod 1 for any point x0 of
 * the component. Both are independent of the choice of x0, so the key is
 * canonical and deduplicates components reached through different subsets.
 */

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dissect/arrangement.hpp"
#include "dissect/builders.hpp"
#include "dissect/errors.hpp"
#include "dissect/matrix.hpp"

namespace dissect {

struct ToricSpec {
    int ambient_dim = 0;
    struct Hypersurface {
        std::vector<Int> covector;
        Rational offset;
    };
    std::vector<Hypersurface> hypersurfaces;
};

inline constexpr std::size_t kToricFlatCap = 4096;

namespace detail {

struct TorusFlat {
    IntMatrix cov;                  // HNF basis of the annihilator lattice
    std::vector<Rational> gamma;    // cov * witness, reduced mod 1
    std::vector<Rational> witness;  // coordinates in [0, 1)
    int dim = 0;
};

inline std::string torus_key(const TorusFlat& f) {
    std::string key;
    for (std::size_t i = 0; i < f.cov.rows(); ++i)
        for (std::size_t j = 0; j < f.cov.cols(); ++j) key += f.cov(i, j).str() + " ";
    key += "|";
    for (const auto& g : f.gamma) key += g.str() + " ";
    return key;
}

inline std::string torus_slug(const TorusFlat& f) {
    std::string id;
    for (std::size_t i = 0; i < f.cov.rows(); ++i) {
        if (i) id += ";";
        std::string lhs;
        for (std::size_t j = 0; j < f.cov.cols(); ++j) {
            const Int& c = f.cov(i, j);
            if (c == 0) continue;
            if (c > 0 && !lhs.empty()) lhs += "+";
            if (c == -1)
                lhs += "-";
            else if (c != 1)
                lhs += c.str();
            lhs += "x" + std::to_string(j);
        }
        id += lhs + "=" + f.gamma[i].str() + "(mod1)";
    }
    return id;
}

// Is vec an integer combination of the rows of lat? lat has full row rank, so
// the rational solution is unique; membership is its integrality.
inline bool in_row_lattice(const IntMatrix& lat, const std::vector<Int>& vec) {
    std::vector<Rational> rhs;
    rhs.reserve(vec.size());
    for (const auto& v : vec) rhs.push_back(Rational(v));
    auto sol = solve_affine(to_rational(transpose(lat)), rhs);
    if (!sol) return false;
    return std::all_of(sol->point.begin(), sol->point.end(),
                       [](const Rational& r) { return r.is_integer(); });
}

// Reverse-inclusion order on torus flats: f contains g iff f's covector
// lattice sits inside g's and one point of g satisfies f's congruences.
inline bool torus_flat_contains(const TorusFlat& f, const TorusFlat& g) {
    for (std::size_t i = 0; i < f.cov.rows(); ++i) {
        std::vector<Int> row(f.cov.cols());
        for (std::size_t j = 0; j < f.cov.cols(); ++j) row[j] = f.cov(i, j);
        if (!in_row_lattice(g.cov, row)) return false;
    }
    for (std::size_t i = 0; i < f.cov.rows(); ++i) {
        Rational acc(0);
        for (std::size_t j = 0; j < f.cov.cols(); ++j)
            acc += Rational(f.cov(i, j)) * g.witness[j];
        if (acc.mod1() != f.gamma[i]) return false;
    }
    return true;
}

struct ModOneSolution {
    IntMatrix saturation;                         // rank x l, not yet HNF'd
    std::vector<std::vector<Rational>> witnesses;  // one per component
    int dim = 0;
};

// All solutions of a*x = b (mod 1) on the torus, or nullopt if empty.
inline std::optional<ModOneSolution> solve_mod1(const IntMatrix& a,
                                                const std::vector<Rational>& b) {
    const std::size_t m = a.rows(), l = a.cols();
    SmithDecomposition snf = smith_normal_form(a);
    std::vector<Rational> ub(m, Rational(0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t k = 0; k < m; ++k) ub[i] += Rational(snf.u(i, k)) * b[k];

    std::vector<Int> diag = snf.diagonal();
    std::size_t r = 0;
    while (r < diag.size() && diag[r] != 0) ++r;
    for (std::size_t i = r; i < m; ++i)
        if (!ub[i].is_integer()) return std::nullopt;

    Int ncomp(1);
    for (std::size_t i = 0; i < r; ++i) ncomp *= diag[i];
    if (ncomp > Int(static_cast<long>(kToricFlatCap)))
        throw CapExceeded("a single intersection has " + ncomp.str() + " components");

    ModOneSolution out;
    out.dim = static_cast<int>(l - r);
    RationalMatrix vrat = to_rational(snf.v);

    auto vinv = inverse(vrat);
    out.saturation = IntMatrix(r, l);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < l; ++j) out.saturation(i, j) = (*vinv)(i, j).as_integer();

    std::vector<Int> k(r, Int(0));
    for (;;) {
        std::vector<Rational> y(l, Rational(0));
        for (std::size_t i = 0; i < r; ++i) y[i] = (ub[i] + Rational(k[i])) / Rational(diag[i]);
        std::vector<Rational> x(l, Rational(0));
        for (std::size_t i = 0; i < l; ++i) {
            for (std::size_t j = 0; j < l; ++j) x[i] += vrat(i, j) * y[j];
            x[i] = x[i].mod1();
        }
        out.witnesses.push_back(std::move(x));
        std::size_t pos = 0;
        while (pos < r && ++k[pos] == diag[pos]) k[pos++] = 0;
        if (pos == r) break;
    }
    return out;
}

}  // namespace detail

inline ArrangementModel build_toric(const ToricSpec& spec) {
    const int l = spec.ambient_dim;
    if (l < 1) throw ValidationError("toric models need ambient dimension at least 1");
    if (spec.hypersurfaces.empty())
        throw EmptySpec("toric models need at least one hypersurface");
    if (spec.hypersurfaces.size() > kBuilderCap)
        throw CapExceeded("more than " + std::to_string(kBuilderCap) + " hypersurfaces");

    // Canonical form of a hypersurface: covector sign-normalized so its first
    // nonzero entry is positive, offset folded into [0, 1).
    std::vector<std::pair<std::vector<Int>, Rational>> surfaces;
    std::map<std::string, std::size_t> canon;
    for (std::size_t i = 0; i < spec.hypersurfaces.size(); ++i) {
        std::vector<Int> c = spec.hypersurfaces[i].covector;
        Rational b = spec.hypersurfaces[i].offset;
        if (static_cast<int>(c.size()) != l)
            throw ValidationError("hypersurface " + std::to_string(i) + " has a covector of length " +
                                  std::to_string(c.size()) + ", expected " + std::to_string(l));
        if (std::all_of(c.begin(), c.end(), [](const Int& v) { return v == 0; }))
            throw ValidationError("hypersurface " + std::to_string(i) + " has a zero covector");
        for (const auto& v : c) {
            if (v == 0) continue;
            if (v < 0) {
                for (auto& w : c) w = -w;
                b = -b;
            }
            break;
        }
        b = b.mod1();
        std::string key;
        for (const auto& v : c) key += v.str() + " ";
        key += "|" + b.str();
        auto [it, fresh] = canon.emplace(std::move(key), i);
        if (!fresh)
            throw Duplicate("hypersurfaces " + std::to_string(it->second) + " and " +
                            std::to_string(i) + " describe the same set");
        surfaces.emplace_back(std::move(c), std::move(b));
    }

    std::vector<detail::TorusFlat> flats;
    std::map<std::string, std::size_t> seen;
    detail::TorusFlat ambient;
    ambient.cov = IntMatrix(0, static_cast<std::size_t>(l));
    ambient.witness.assign(static_cast<std::size_t>(l), Rational(0));
    ambient.dim = l;
    seen.emplace(detail::torus_key(ambient), 0);
    flats.push_back(std::move(ambient));

    std::size_t scanned = 0;
    while (scanned < flats.size()) {
        const std::size_t base = scanned++;
        for (const auto& [c, b] : surfaces) {
            IntMatrix a(flats[base].cov.rows() + 1, static_cast<std::size_t>(l));
            std::vector<Rational> rhs;
            for (std::size_t i = 0; i < flats[base].cov.rows(); ++i) {
                for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = flats[base].cov(i, j);
                rhs.push_back(flats[base].gamma[i]);
            }
            for (std::size_t j = 0; j < a.cols(); ++j) a(a.rows() - 1, j) = c[j];
            rhs.push_back(b);

            auto sol = detail::solve_mod1(a, rhs);
            if (!sol) continue;
            IntMatrix hnf = hermite_normal_form(sol->saturation);
            for (auto& w : sol->witnesses) {
                detail::TorusFlat f;
                f.cov = hnf;
                f.dim = sol->dim;
                f.gamma.reserve(hnf.rows());
                for (std::size_t i = 0; i < hnf.rows(); ++i) {
                    Rational acc(0);
                    for (std::size_t j = 0; j < hnf.cols(); ++j)
                        acc += Rational(hnf(i, j)) * w[j];
                    f.gamma.push_back(acc.mod1());
                }
                f.witness = std::move(w);
                std::string key = detail::torus_key(f);
                if (seen.count(key)) continue;
                if (flats.size() >= kToricFlatCap)
                    throw CapExceeded("flat enumeration exceeded " +
                                      std::to_string(kToricFlatCap) + " flats");
                seen.emplace(std::move(key), flats.size());
                flats.push_back(std::move(f));
            }
        }
    }

    std::sort(flats.begin(), flats.end(),
              [](const detail::TorusFlat& a, const detail::TorusFlat& b) {
                  if (a.dim != b.dim) return a.dim > b.dim;
                  return detail::torus_slug(a) < detail::torus_slug(b);
              });

    std::vector<std::pair<std::string, std::string>> relations;
    std::vector<std::vector<std::size_t>> above(flats.size());
    for (std::size_t i = 0; i < flats.size(); ++i)
        for (std::size_t j = 0; j < flats.size(); ++j) {
            if (flats[i].dim <= flats[j].dim) continue;
            if (detail::torus_flat_contains(flats[i], flats[j])) {
                above[i].push_back(j);
                relations.emplace_back(i == 0 ? "X" : detail::torus_slug(flats[i]),
                                       detail::torus_slug(flats[j]));
            }
        }

    Cellularity cellularity = Cellularity::validated;
    if (l == 2) {
        // Chambers of a 2-torus arrangement are cells iff some vertex exists:
        // a vertex forces two non-parallel circle directions, which rules out
        // essential loops inside chambers, and then every circle meets a
        // non-parallel one, so no circle is left vertex-free either.
        bool any_vertex = std::any_of(flats.begin(), flats.end(),
                                      [](const detail::TorusFlat& f) { return f.dim == 0; });
        if (!any_vertex)
            throw NotCellular2D("the hypersurfaces leave no vertices, so chambers are not cells");
        for (std::size_t i = 0; i < flats.size(); ++i) {
            if (flats[i].dim != 1) continue;
            bool has_vertex = std::any_of(above[i].begin(), above[i].end(),
                                          [&](std::size_t j) { return flats[j].dim == 0; });
            if (!has_vertex)
                throw NotCellular2D("circle " + detail::torus_slug(flats[i]) +
                                    " carries no vertex, so its arcs are not cells");
        }
    } else if (l >= 3) {
        cellularity = Cellularity::asserted;
    }

    std::vector<FlatNode> nodes;
    nodes.reserve(flats.size());
    for (std::size_t i = 0; i < flats.size(); ++i) {
        FlatNode node;
        node.id = i == 0 ? "X" : detail::torus_slug(flats[i]);
        node.dim = flats[i].dim;
        node.poin_c = one_plus_t_power(static_cast<std::size_t>(flats[i].dim));
        node.witness = flats[i].witness;
        nodes.push_back(std::move(node));
    }
    return make_model(Family::toric, l, std::move(nodes), relations, cellularity);
}

}  // namespace dissect
