#pragma once

/**
 * @file io.hpp
 * @brief JSON input for the model families and JSON rendering of results.
 *
 * Every exact value crosses the boundary as a string: rationals as "p/q" (or
 * "p"), big integers as their decimal digits. Integer JSON numbers are
 * accepted on input for convenience; floats never are, since they cannot be
 * trusted to be exact. Parse failures carry the JSON path of the offending
 * value.
 */

#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "dissect/arrangement.hpp"
#include "dissect/builders.hpp"
#include "dissect/errors.hpp"
#include "dissect/toric.hpp"

namespace dissect {

using Json = nlohmann::json;

namespace detail {

inline const Json& member(const Json& j, const char* key, const std::string& path) {
    if (!j.is_object()) throw ParseError(path + ": expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(path + ": missing key '" + key + "'");
    return *it;
}

inline const Json& element_list(const Json& j, const std::string& path) {
    if (!j.is_array()) throw ParseError(path + ": expected an array");
    return j;
}

inline Int int_value(const Json& j, const std::string& path) {
    if (j.is_number_integer()) return Int(j.get<long long>());
    if (j.is_string()) {
        try {
            Rational r = Rational::parse(j.get<std::string>());
            if (!r.is_integer()) throw ValidationError("not an integer");
            return r.num();
        } catch (const ValidationError&) {
            throw ParseError(path + ": bad integer literal '" + j.get<std::string>() + "'");
        }
    }
    throw ParseError(path + ": expected an integer (number or decimal string)");
}

inline Rational rational_value(const Json& j, const std::string& path) {
    if (j.is_number_integer()) return Rational(Int(j.get<long long>()));
    if (j.is_string()) {
        try {
            return Rational::parse(j.get<std::string>());
        } catch (const ValidationError&) {
            throw ParseError(path + ": bad rational literal '" + j.get<std::string>() + "'");
        }
    }
    throw ParseError(path + ": expected a rational (\"p/q\" string or integer)");
}

inline int dim_value(const Json& j, const std::string& path) {
    if (!j.is_number_integer()) throw ParseError(path + ": expected an integer");
    long long v = j.get<long long>();
    if (v < 0 || v > 64) throw ParseError(path + ": dimension " + std::to_string(v) + " out of range");
    return static_cast<int>(v);
}

inline std::vector<Rational> rational_vector(const Json& j, const std::string& path) {
    element_list(j, path);
    std::vector<Rational> out;
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(rational_value(j[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

}  // namespace detail

// A parsed input: the model plus, for geometric families, the raw spec the
// oracles re-enumerate independently.
struct LoadedInput {
    ArrangementModel model;
    std::optional<HyperplaneSpec> hyperplane;
    std::optional<ToricSpec> toric;
    std::optional<SphereSpec> sphere;
    std::optional<ProjectiveSpec> projective;
    std::optional<CircleSpec> circle;
};

inline LoadedInput load_input(const Json& j) {
    std::string type = detail::member(j, "type", "$").is_string()
                           ? detail::member(j, "type", "$").get<std::string>()
                           : throw ParseError("$.type: expected a string");
    LoadedInput in;
    if (type == "hyperplane") {
        HyperplaneSpec spec;
        spec.ambient_dim = detail::dim_value(detail::member(j, "ambient_dim", "$"), "$.ambient_dim");
        const Json& hs = detail::element_list(detail::member(j, "hyperplanes", "$"), "$.hyperplanes");
        for (std::size_t i = 0; i < hs.size(); ++i) {
            std::string path = "$.hyperplanes[" + std::to_string(i) + "]";
            HyperplaneSpec::Hyperplane h;
            h.normal = detail::rational_vector(detail::member(hs[i], "normal", path), path + ".normal");
            h.offset = detail::rational_value(detail::member(hs[i], "offset", path), path + ".offset");
            spec.hyperplanes.push_back(std::move(h));
        }
        in.model = build_hyperplane(spec);
        in.hyperplane = std::move(spec);
    } else if (type == "toric") {
        ToricSpec spec;
        spec.ambient_dim = detail::dim_value(detail::member(j, "ambient_dim", "$"), "$.ambient_dim");
        const Json& hs =
            detail::element_list(detail::member(j, "hypersurfaces", "$"), "$.hypersurfaces");
        for (std::size_t i = 0; i < hs.size(); ++i) {
            std::string path = "$.hypersurfaces[" + std::to_string(i) + "]";
            ToricSpec::Hypersurface h;
            const Json& cov =
                detail::element_list(detail::member(hs[i], "covector", path), path + ".covector");
            for (std::size_t k = 0; k < cov.size(); ++k)
                h.covector.push_back(
                    detail::int_value(cov[k], path + ".covector[" + std::to_string(k) + "]"));
            h.offset = detail::rational_value(detail::member(hs[i], "offset", path), path + ".offset");
            spec.hypersurfaces.push_back(std::move(h));
        }
        in.model = build_toric(spec);
        in.toric = std::move(spec);
    } else if (type == "sphere" || type == "projective") {
        int ambient = detail::dim_value(detail::member(j, "ambient_dim", "$"), "$.ambient_dim");
        const Json& ns = detail::element_list(detail::member(j, "normals", "$"), "$.normals");
        std::vector<std::vector<Rational>> normals;
        for (std::size_t i = 0; i < ns.size(); ++i)
            normals.push_back(detail::rational_vector(ns[i], "$.normals[" + std::to_string(i) + "]"));
        if (type == "sphere") {
            SphereSpec spec{ambient, std::move(normals)};
            in.model = build_sphere(spec);
            in.sphere = std::move(spec);
        } else {
            ProjectiveSpec spec{ambient, std::move(normals)};
            in.model = build_projective(spec);
            in.projective = std::move(spec);
        }
    } else if (type == "circle") {
        CircleSpec spec;
        spec.points = detail::rational_vector(detail::member(j, "points", "$"), "$.points");
        in.model = build_circle(spec);
        in.circle = std::move(spec);
    } else if (type == "abstract") {
        int ambient = detail::dim_value(detail::member(j, "ambient_dim", "$"), "$.ambient_dim");
        const Json& fs = detail::element_list(detail::member(j, "flats", "$"), "$.flats");
        std::vector<FlatNode> flats;
        for (std::size_t i = 0; i < fs.size(); ++i) {
            std::string path = "$.flats[" + std::to_string(i) + "]";
            FlatNode node;
            const Json& id = detail::member(fs[i], "id", path);
            if (!id.is_string()) throw ParseError(path + ".id: expected a string");
            node.id = id.get<std::string>();
            if (node.id.empty() || node.id.find(',') != std::string::npos)
                throw ParseError(path + ".id: ids must be nonempty and must not contain ','");
            node.dim = detail::dim_value(detail::member(fs[i], "dim", path), path + ".dim");
            const Json& pc = detail::element_list(detail::member(fs[i], "poin_c", path), path + ".poin_c");
            std::vector<Int> coeffs;
            for (std::size_t k = 0; k < pc.size(); ++k)
                coeffs.push_back(detail::int_value(pc[k], path + ".poin_c[" + std::to_string(k) + "]"));
            node.poin_c = IntPolynomial(std::move(coeffs));
            flats.push_back(std::move(node));
        }
        const Json& order = detail::element_list(detail::member(j, "order", "$"), "$.order");
        std::vector<std::pair<std::string, std::string>> relations;
        for (std::size_t i = 0; i < order.size(); ++i) {
            std::string path = "$.order[" + std::to_string(i) + "]";
            detail::element_list(order[i], path);
            if (order[i].size() != 2 || !order[i][0].is_string() || !order[i][1].is_string())
                throw ParseError(path + ": expected a pair of flat ids");
            relations.emplace_back(order[i][0].get<std::string>(), order[i][1].get<std::string>());
        }
        // Nothing geometric to check cellularity against.
        in.model = make_model(Family::abstract, ambient, std::move(flats), relations,
                              Cellularity::asserted);
    } else {
        throw ParseError("$.type: unknown model type '" + type +
                         "' (expected hyperplane, toric, sphere, projective, circle or abstract)");
    }
    return in;
}

inline LoadedInput load_input_file(const std::string& path) {
    std::ifstream stream(path);
    if (!stream) throw ParseError("cannot open '" + path + "'");
    Json j;
    try {
        j = Json::parse(stream);
    } catch (const Json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
    return load_input(j);
}

// ---------------------------------------------------------------------------
// Rendering. Counts and coefficients become decimal strings so nothing is
// ever squeezed through a double.

inline Json poly_json(const IntPolynomial& p) {
    Json arr = Json::array();
    if (p.degree() < 0) {
        arr.push_back("0");
        return arr;
    }
    for (int k = 0; k <= p.degree(); ++k)
        arr.push_back(p.coefficient(static_cast<std::size_t>(k)).str());
    return arr;
}

inline Json ints_json(const std::vector<Int>& v) {
    Json arr = Json::array();
    for (const auto& x : v) arr.push_back(x.str());
    return arr;
}

inline Json describe_json(const ArrangementModel& m) {
    Json out;
    out["family"] = family_name(m.family);
    out["ambient_dim"] = m.ambient_dim;
    out["cellularity"] = m.cellularity == Cellularity::validated ? "validated" : "asserted";
    out["simple"] = is_simple(m);
    Json flats = Json::array();
    for (std::size_t i = 0; i < m.poset.size(); ++i) {
        Json f;
        f["id"] = m.flat(i).id;
        f["dim"] = m.flat(i).dim;
        f["rank"] = m.poset.rank_of(i);
        f["poin_c"] = poly_json(m.flat(i).poin_c);
        f["kappa"] = m.flat(i).kappa.str();
        flats.push_back(std::move(f));
    }
    out["flats"] = std::move(flats);
    Json covers = Json::array();
    for (const auto& [lo, hi] : m.poset.covers())
        covers.push_back(Json::array({m.poset.element(lo), m.poset.element(hi)}));
    out["covers"] = std::move(covers);
    return out;
}

}  // namespace dissect
