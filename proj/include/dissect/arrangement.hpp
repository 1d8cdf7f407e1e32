#pragma once

/**
 * @file arrangement.hpp
 * @brief Intersection posets annotated with compactly supported Poincare
 *        polynomials, and the counting formulas built on them: characteristic
 *        polynomial, chamber count, f-vector, chain fiber cardinalities, and
 *        the valuation/simple-function layer.
 *
 * A model is a graded poset of flats ordered by reverse inclusion. Each flat
 * carries poin_c, whose value at -1 is the combinatorial Euler characteristic
 * kappa used by all counting formulas. Ranks must equal codimension; the
 * counting formulas assume the flats dissect the ambient space into cells and
 * surface NegativeCount rather than clamping when that assumption is broken.
 */

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "dissect/errors.hpp"
#include "dissect/polynomial.hpp"
#include "dissect/poset.hpp"

namespace dissect {

enum class Family { hyperplane, toric, sphere, projective, circle, abstract };

inline std::string family_name(Family f) {
    switch (f) {
        case Family::hyperplane: return "hyperplane";
        case Family::toric: return "toric";
        case Family::sphere: return "sphere";
        case Family::projective: return "projective";
        case Family::circle: return "circle";
        case Family::abstract: return "abstract";
    }
    return "?";
}

struct FlatNode {
    std::string id;
    int dim = 0;
    IntPolynomial poin_c;
    Int kappa;                      // always poin_c evaluated at -1
    std::vector<Rational> witness;  // family-specific; empty for abstract models
};

// Whether the cell-dissection assumption was actually checked by the builder
// or is only asserted (toric in dimension >= 3, degenerate sphere inputs).
enum class Cellularity { validated, asserted };

struct ArrangementModel {
    Family family = Family::abstract;
    int ambient_dim = 0;
    Poset poset;
    std::vector<FlatNode> flats;  // index-aligned with poset elements
    Cellularity cellularity = Cellularity::validated;
    std::shared_ptr<const MobiusTable> mobius;

    const FlatNode& flat(std::size_t i) const { return flats[i]; }
    const FlatNode& flat_by_id(const std::string& id) const {
        return flats[poset.index_of(id)];
    }
    const FlatNode& ambient() const { return flats[poset.minimum()]; }
    const Int& mu(std::size_t x, std::size_t y) const { return mobius->mu(x, y); }
};

// Assembles and validates a model. `relations` are (lower, higher) pairs in
// the reverse-inclusion order; the ambient flat must end up as the minimum.
inline ArrangementModel make_model(Family family, int ambient_dim, std::vector<FlatNode> flats,
                                   const std::vector<std::pair<std::string, std::string>>& relations,
                                   Cellularity cellularity = Cellularity::validated) {
    ArrangementModel m;
    m.family = family;
    m.ambient_dim = ambient_dim;
    m.cellularity = cellularity;

    std::vector<std::string> ids;
    ids.reserve(flats.size());
    for (const auto& f : flats) ids.push_back(f.id);
    m.poset = build_poset(std::move(ids), relations);
    m.flats = std::move(flats);

    for (std::size_t i = 0; i < m.flats.size(); ++i) {
        FlatNode& f = m.flats[i];
        if (f.dim < 0 || f.dim > ambient_dim)
            throw ValidationError("flat '" + f.id + "' has dimension " + std::to_string(f.dim) +
                                  " outside [0, " + std::to_string(ambient_dim) + "]");
        if (f.poin_c.degree() > f.dim)
            throw ValidationError("flat '" + f.id + "' has poin_c of degree above its dimension");
        if (m.poset.rank_of(i) != ambient_dim - f.dim)
            throw ValidationError("flat '" + f.id + "' has rank " +
                                  std::to_string(m.poset.rank_of(i)) + " but codimension " +
                                  std::to_string(ambient_dim - f.dim));
        f.kappa = f.poin_c.evaluate(Int(-1));
    }
    m.mobius = std::make_shared<MobiusTable>(m.poset);
    return m;
}

// ---------------------------------------------------------------------------
// Counting formulas.

// p(t) = sum over flats Y of mu(X, Y) poin_c(Y, t).
inline IntPolynomial characteristic_polynomial(const ArrangementModel& m) {
    IntPolynomial p;
    const std::size_t x = m.poset.minimum();
    for (std::size_t y = 0; y < m.poset.size(); ++y) {
        const Int& mu = m.mu(x, y);
        if (mu == 0) continue;
        p += mu * m.flat(y).poin_c;
    }
    return p;
}

// Number of chambers: (-1)^l sum over Y of mu(X, Y) kappa(Y).
inline Int chamber_count(const ArrangementModel& m) {
    Int acc(0);
    const std::size_t x = m.poset.minimum();
    for (std::size_t y = 0; y < m.poset.size(); ++y) acc += m.mu(x, y) * m.flat(y).kappa;
    if (m.ambient_dim % 2 != 0) acc = -acc;
    if (acc < 0)
        throw NegativeCount("chamber formula returned " + acc.str() +
                            "; the model does not dissect into cells");
    return acc;
}

// Faces with smallest enclosing flat Y, i.e. chambers of the restriction to Y.
inline Int face_count_over(const ArrangementModel& m, std::size_t y) {
    Int acc(0);
    for (std::size_t z = 0; z < m.poset.size(); ++z) {
        if (!m.poset.leq(y, z)) continue;
        acc += m.mobius->mu(y, z) * m.flat(z).kappa;
    }
    if (m.flat(y).dim % 2 != 0) acc = -acc;
    if (acc < 0)
        throw NegativeCount("face count over flat '" + m.flat(y).id + "' is " + acc.str() +
                            "; the model does not dissect into cells");
    return acc;
}

// f_k = number of k-dimensional faces of the dissection, k = 0..l.
inline std::vector<Int> f_vector(const ArrangementModel& m) {
    std::vector<Int> f(static_cast<std::size_t>(m.ambient_dim) + 1, Int(0));
    for (std::size_t y = 0; y < m.poset.size(); ++y)
        f[static_cast<std::size_t>(m.flat(y).dim)] += face_count_over(m, y);
    return f;
}

// f-polynomial: sum of f_k x^(l-k).
inline IntPolynomial f_polynomial(const std::vector<Int>& f) {
    std::vector<Int> coeffs(f.size());
    for (std::size_t k = 0; k < f.size(); ++k) coeffs[f.size() - 1 - k] = f[k];
    return IntPolynomial(std::move(coeffs));
}

// Same polynomial computed through the geometric-lattice form:
// sum over Z of kappa(Z) sum over Y <= Z of (-1)^dim(Z) |mu(Y,Z)| x^(l-dim Y).
inline IntPolynomial f_polynomial_geometric(const ArrangementModel& m) {
    IntPolynomial out;
    for (std::size_t z = 0; z < m.poset.size(); ++z) {
        if (m.flat(z).kappa == 0) continue;
        IntPolynomial inner;
        for (std::size_t y = 0; y < m.poset.size(); ++y) {
            if (!m.poset.leq(y, z)) continue;
            inner += IntPolynomial::monomial(
                static_cast<std::size_t>(m.ambient_dim - m.flat(y).dim),
                int_abs(m.mobius->mu(y, z)));
        }
        Int sign = (m.flat(z).dim % 2 == 0) ? Int(1) : Int(-1);
        out += (m.flat(z).kappa * sign) * inner;
    }
    return out;
}

// Every interval of the flat poset is a Boolean lattice.
inline bool is_simple(const ArrangementModel& m) {
    for (std::size_t x = 0; x < m.poset.size(); ++x)
        for (std::size_t y = 0; y < m.poset.size(); ++y) {
            if (!m.poset.leq(x, y)) continue;
            if (!is_boolean_interval(m.poset, m.poset.element(x), m.poset.element(y)))
                return false;
        }
    return true;
}

// Simple-arrangement specialization. Boolean intervals collapse the inner sum
// of the geometric form to a rank generating function, leaving
// sum over Z of kappa(Z) (-1)^dim(Z) (x+1)^(l - dim Z).
inline IntPolynomial f_polynomial_simple(const ArrangementModel& m, bool force = false) {
    if (!force && !is_simple(m))
        throw PreconditionFailed("model is not simple; pass force to evaluate anyway");
    IntPolynomial out;
    for (std::size_t z = 0; z < m.poset.size(); ++z) {
        if (m.flat(z).kappa == 0) continue;
        Int sign = (m.flat(z).dim % 2 == 0) ? Int(1) : Int(-1);
        out += (m.flat(z).kappa * sign) *
               one_plus_t_power(static_cast<std::size_t>(m.ambient_dim - m.flat(z).dim));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Simple functions and valuations.

struct SimpleFunction {
    std::map<std::string, Rational> terms;  // generator id -> coefficient, zeros dropped

    SimpleFunction& add(const std::string& id, const Rational& coeff) {
        if (coeff.is_zero()) return *this;
        auto [it, fresh] = terms.emplace(id, coeff);
        if (!fresh) {
            it->second += coeff;
            if (it->second.is_zero()) terms.erase(it);
        }
        return *this;
    }

    friend SimpleFunction operator+(SimpleFunction a, const SimpleFunction& b) {
        for (const auto& [id, c] : b.terms) a.add(id, c);
        return a;
    }
    friend SimpleFunction operator-(SimpleFunction a, const SimpleFunction& b) {
        for (const auto& [id, c] : b.terms) a.add(id, -c);
        return a;
    }
    friend SimpleFunction operator*(const Rational& s, const SimpleFunction& f) {
        SimpleFunction out;
        for (const auto& [id, c] : f.terms) out.add(id, s * c);
        return out;
    }
    friend bool operator==(const SimpleFunction&, const SimpleFunction&) = default;
};

struct PolynomialValuation {
    std::map<std::string, IntPolynomial> assign;
};

struct ScalarValuation {
    std::map<std::string, Int> assign;
};

inline RationalPolynomial integrate(const SimpleFunction& f, const PolynomialValuation& v) {
    RationalPolynomial out;
    for (const auto& [id, coeff] : f.terms) {
        auto it = v.assign.find(id);
        if (it == v.assign.end())
            throw MissingAssignment("valuation has no value for generator '" + id + "'");
        out += RationalPolynomial({coeff}) * to_rational_poly(it->second);
    }
    return out;
}

inline Rational integrate(const SimpleFunction& f, const ScalarValuation& v) {
    Rational out(0);
    for (const auto& [id, coeff] : f.terms) {
        auto it = v.assign.find(id);
        if (it == v.assign.end())
            throw MissingAssignment("valuation has no value for generator '" + id + "'");
        out += coeff * Rational(it->second);
    }
    return out;
}

// nu assigns each flat its poin_c; kappa the value at -1.
inline PolynomialValuation poincare_valuation(const ArrangementModel& m) {
    PolynomialValuation v;
    for (const auto& f : m.flats) v.assign[f.id] = f.poin_c;
    return v;
}

inline ScalarValuation kappa_valuation(const ArrangementModel& m) {
    ScalarValuation v;
    for (const auto& f : m.flats) v.assign[f.id] = f.kappa;
    return v;
}

// Indicator of the complement of the arrangement, written over flat
// indicators by Mobius inversion: sum over Y of mu(X, Y) I_Y.
inline SimpleFunction complement_indicator(const ArrangementModel& m) {
    SimpleFunction f;
    const std::size_t x = m.poset.minimum();
    for (std::size_t y = 0; y < m.poset.size(); ++y)
        f.add(m.flat(y).id, Rational(m.mu(x, y)));
    return f;
}

// ---------------------------------------------------------------------------
// Fiber cardinality of the flat-assignment map over a chain of flats
// Y_1 < ... < Y_k: the number of face chains mapping onto it equals
//   prod over i < k of ( sum over Y_i <= Z <= Y_{i+1} of |mu(Y_i, Z)| )
//   times the number of faces over Y_k.
inline Int chain_fiber_count(const ArrangementModel& m, const std::vector<std::string>& chain) {
    if (chain.size() < 2)
        throw NotAChain("fiber chains need at least two flats");
    std::vector<std::size_t> idx;
    for (const auto& id : chain) idx.push_back(m.poset.index_of(id));
    for (std::size_t i = 0; i + 1 < idx.size(); ++i)
        if (idx[i] == idx[i + 1] || !m.poset.leq(idx[i], idx[i + 1]))
            throw NotAChain("'" + chain[i] + "' is not strictly below '" + chain[i + 1] + "'");

    Int out(1);
    for (std::size_t i = 0; i + 1 < idx.size(); ++i) {
        Int factor(0);
        for (std::size_t z = 0; z < m.poset.size(); ++z)
            if (m.poset.leq(idx[i], z) && m.poset.leq(z, idx[i + 1]))
                factor += int_abs(m.mobius->mu(idx[i], z));
        out *= factor;
    }
    return out * face_count_over(m, idx.back());
}

}  // namespace dissect
