#pragma once

/**
 * @file closedforms.hpp
 * @brief Census-based closed forms for the face counts of simple models.
 *
 * For a simple model every interval of the flat poset is Boolean and the
 * f-polynomial collapses to sum over flats Z of kappa(Z) (-1)^dim(Z)
 * (x+1)^(l-dim Z). Grouping flats of equal dimension turns that into
 *     f_k = sum over j of w_j * a_j * C(l-j, l-k),
 * where a_j counts dimension-j flats and the weight w_j = kappa_j * (-1)^j
 * depends only on the family: 1 for every j in the affine case, nonzero only
 * for vertices on the torus, supported on even dimensions for spheres and
 * projective spaces. For generic projective arrangements the census itself is
 * a row of binomials, so the f-vector needs no model at all.
 */

#include <string>
#include <vector>

#include "dissect/arrangement.hpp"
#include "dissect/errors.hpp"

namespace dissect {

inline Int binomial(long long n, long long k) {
    if (k < 0 || k > n) return Int(0);
    if (k > n - k) k = n - k;
    Int out(1);
    for (long long i = 1; i <= k; ++i) {
        out *= Int(n - k + i);
        out /= Int(i);
    }
    return out;
}

struct RankCensus {
    int ambient_dim = 0;
    std::vector<Int> by_dim;  // by_dim[j] = number of flats of dimension j
};

inline RankCensus census_of(const ArrangementModel& m) {
    RankCensus c;
    c.ambient_dim = m.ambient_dim;
    c.by_dim.assign(static_cast<std::size_t>(m.ambient_dim) + 1, Int(0));
    for (const auto& f : m.flats) c.by_dim[static_cast<std::size_t>(f.dim)] += 1;
    return c;
}

namespace detail {

template <typename WeightFn>
std::vector<Int> simple_f_from_census(const RankCensus& c, WeightFn weight) {
    const long long l = c.ambient_dim;
    std::vector<Int> f(static_cast<std::size_t>(l) + 1, Int(0));
    for (long long k = 0; k <= l; ++k)
        for (long long j = 0; j <= l; ++j) {
            Int w = weight(static_cast<int>(j));
            if (w == 0) continue;
            f[static_cast<std::size_t>(k)] +=
                w * c.by_dim[static_cast<std::size_t>(j)] * binomial(l - j, l - k);
        }
    return f;
}

}  // namespace detail

inline std::vector<Int> f_simple_hyperplane(const RankCensus& c) {
    return detail::simple_f_from_census(c, [](int) { return Int(1); });
}

inline std::vector<Int> f_simple_toric(const RankCensus& c) {
    return detail::simple_f_from_census(c, [](int j) { return Int(j == 0 ? 1 : 0); });
}

inline std::vector<Int> f_simple_sphere(const RankCensus& c) {
    return detail::simple_f_from_census(
        c, [](int j) { return Int(j == 0 ? 1 : (j % 2 == 0 ? 2 : 0)); });
}

inline std::vector<Int> f_simple_projective(const RankCensus& c) {
    return detail::simple_f_from_census(c, [](int j) { return Int(j % 2 == 0 ? 1 : 0); });
}

// Cell counts for n hyperplanes of RP^l in general position; the census of
// such an arrangement is a_j = C(n, l-j).
inline std::vector<Int> projective_generic_f(std::size_t n, int l) {
    RankCensus c;
    c.ambient_dim = l;
    for (int j = 0; j <= l; ++j) c.by_dim.push_back(binomial(static_cast<long long>(n), l - j));
    return f_simple_projective(c);
}

// Family dispatch. Refuses non-simple models unless forced, since the
// grouping by dimension is only valid with Boolean intervals.
inline std::vector<Int> closed_form_f(const ArrangementModel& m, bool force = false) {
    if (!force && !is_simple(m))
        throw PreconditionFailed("model is not simple; closed forms need Boolean intervals");
    RankCensus c = census_of(m);
    switch (m.family) {
        case Family::hyperplane: return f_simple_hyperplane(c);
        case Family::toric:
        case Family::circle: return f_simple_toric(c);
        case Family::sphere: return f_simple_sphere(c);
        case Family::projective: return f_simple_projective(c);
        case Family::abstract: break;
    }
    throw PreconditionFailed("no closed form for abstract models");
}

}  // namespace dissect
