#pragma once

/**
 * @file cli.hpp
 * @brief Command line front end. Kept in the library so tests can drive it
 *        in-process through run() with captured streams.
 *
 * Exit codes: 0 success, 1 oracle mismatch from `verify`, 2 bad input
 * (files, JSON, ids, flags), 3 unmet precondition (caps, non-cellular input,
 * non-simple model without --force, negative counts).
 */

#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "dissect/arrangement.hpp"
#include "dissect/closedforms.hpp"
#include "dissect/errors.hpp"
#include "dissect/io.hpp"
#include "dissect/oracle.hpp"

namespace dissect {
namespace cli {

namespace detail {

inline std::string join_ints(const std::vector<Int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += " ";
        s += v[i].str();
    }
    return s;
}

inline std::vector<std::string> split_chain(const std::string& arg) {
    std::vector<std::string> ids;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = arg.find(',', start);
        std::string id = arg.substr(start, comma - start);
        while (!id.empty() && id.front() == ' ') id.erase(id.begin());
        while (!id.empty() && id.back() == ' ') id.pop_back();
        if (id.empty()) throw ValidationError("chain '" + arg + "' has an empty id");
        ids.push_back(std::move(id));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return ids;
}

struct Check {
    std::string name, formula, oracle;
    bool match() const { return formula == oracle; }
};

inline std::vector<Check> oracle_checks(const LoadedInput& in) {
    const ArrangementModel& m = in.model;
    std::vector<Check> checks;
    auto add = [&](const std::string& name, const std::string& formula, const std::string& oracle) {
        checks.push_back({name, formula, oracle});
    };
    switch (m.family) {
        case Family::hyperplane: {
            FaceEnumeration e = enumerate_faces(*in.hyperplane);
            add("chambers", chamber_count(m).str(), oracle_chamber_count(e).str());
            add("f_vector", join_ints(f_vector(m)), join_ints(oracle_f_vector(e)));
            break;
        }
        case Family::toric: {
            if (m.ambient_dim != 2)
                throw PreconditionFailed("toric verification is only available in dimension 2");
            ToricCellCounts c = toric_cell_counts(m);
            add("chambers", chamber_count(m).str(), c.chambers.str());
            add("f_vector", join_ints(f_vector(m)),
                join_ints({c.vertices, c.edges, c.chambers}));
            break;
        }
        case Family::sphere:
        case Family::projective: {
            const auto& normals =
                m.family == Family::sphere ? in.sphere->normals : in.projective->normals;
            HyperplaneSpec central;
            central.ambient_dim = m.ambient_dim + 1;
            for (const auto& n : normals) central.hyperplanes.push_back({n, Rational(0)});
            QuotientCounts q = quotient_counts(central);
            const auto& oracle_f =
                m.family == Family::sphere ? q.sphere_f : q.projective_f;
            add("chambers", chamber_count(m).str(), oracle_f.back().str());
            add("f_vector", join_ints(f_vector(m)), join_ints(oracle_f));
            break;
        }
        case Family::circle: {
            Int n(static_cast<long>(in.circle->points.size()));
            add("chambers", chamber_count(m).str(), n.str());
            add("f_vector", join_ints(f_vector(m)), join_ints({n, n}));
            break;
        }
        case Family::abstract:
            throw PreconditionFailed("abstract models have no geometric oracle to verify against");
    }
    return checks;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact chamber, face and fiber counts for arrangement models"};
    app.require_subcommand(1);

    std::string input;
    std::string format = "text";
    bool force = false;
    std::vector<std::string> chain_args;

    auto common = [&](CLI::App* c) {
        c->add_option("input", input, "model JSON file")->required();
        c->add_option("--format", format, "output format: text or json")
            ->check(CLI::IsMember({"text", "json"}));
        return c;
    };
    CLI::App* describe =
        common(app.add_subcommand("describe", "flats, their invariants and the cover relations"));
    CLI::App* charpoly =
        common(app.add_subcommand("charpoly", "generalized characteristic polynomial"));
    CLI::App* chambers = common(app.add_subcommand("chambers", "number of chambers"));
    CLI::App* faces = common(app.add_subcommand("faces", "f-vector and f-polynomial"));
    CLI::App* fiber =
        common(app.add_subcommand("fiber", "number of face chains over a chain of flats"));
    fiber
        ->add_option("--chain", chain_args,
                     "comma-separated flat ids, lowest first; repeatable")
        ->required()
        ->allow_extra_args(false);
    CLI::App* verify =
        common(app.add_subcommand("verify", "compare the formulas against a geometric oracle"));
    CLI::App* closedform =
        common(app.add_subcommand("closedform", "census-based closed-form f-vector"));
    closedform->add_flag("--force", force, "evaluate even if the model is not simple");
    CLI::App* poset = common(app.add_subcommand("poset", "Hasse diagram of the flat poset"));

    {
        std::vector<const char*> argv;
        argv.push_back("dissect");
        for (const auto& a : args) argv.push_back(a.c_str());
        try {
            app.parse(static_cast<int>(argv.size()), argv.data());
        } catch (const CLI::ParseError& e) {
            return app.exit(e, out, err) == 0 ? 0 : 2;
        }
    }

    const bool as_json = format == "json";
    try {
        LoadedInput in = load_input_file(input);
        const ArrangementModel& m = in.model;

        if (describe->parsed()) {
            if (as_json) {
                out << describe_json(m).dump(2) << "\n";
            } else {
                out << "family: " << family_name(m.family) << "\n";
                out << "ambient_dim: " << m.ambient_dim << "\n";
                out << "cellularity: "
                    << (m.cellularity == Cellularity::validated ? "validated" : "asserted") << "\n";
                out << "simple: " << (is_simple(m) ? "yes" : "no") << "\n";
                out << "census: " << detail::join_ints(census_of(m).by_dim) << "\n";
                for (std::size_t i = 0; i < m.poset.size(); ++i)
                    out << "flat " << m.flat(i).id << ": dim " << m.flat(i).dim << ", poin_c "
                        << m.flat(i).poin_c.str("t") << ", kappa " << m.flat(i).kappa.str() << "\n";
            }
        } else if (charpoly->parsed()) {
            IntPolynomial p = characteristic_polynomial(m);
            if (as_json) {
                Json o;
                o["char_poly"] = poly_json(p);
                out << o.dump(2) << "\n";
            } else {
                out << p.str("t") << "\n";
            }
        } else if (chambers->parsed()) {
            Int c = chamber_count(m);
            if (as_json) {
                Json o;
                o["chambers"] = c.str();
                out << o.dump(2) << "\n";
            } else {
                out << c.str() << "\n";
            }
        } else if (faces->parsed()) {
            std::vector<Int> f = f_vector(m);
            IntPolynomial fp = f_polynomial(f);
            if (as_json) {
                Json o;
                o["f_vector"] = ints_json(f);
                o["f_polynomial"] = poly_json(fp);
                out << o.dump(2) << "\n";
            } else {
                out << "f_vector: " << detail::join_ints(f) << "\n";
                out << "f_polynomial: " << fp.str("x") << "\n";
            }
        } else if (fiber->parsed()) {
            Json fibers = Json::object();
            for (const auto& arg : chain_args) {
                std::vector<std::string> ids = detail::split_chain(arg);
                // A single flat is allowed and counts the faces over it.
                Int count = ids.size() == 1 ? face_count_over(m, m.poset.index_of(ids[0]))
                                            : chain_fiber_count(m, ids);
                if (as_json)
                    fibers[arg] = count.str();
                else
                    out << arg << ": " << count.str() << "\n";
            }
            if (as_json) {
                Json o;
                o["fibers"] = std::move(fibers);
                out << o.dump(2) << "\n";
            }
        } else if (verify->parsed()) {
            std::vector<detail::Check> checks = detail::oracle_checks(in);
            bool all = true;
            for (const auto& c : checks) all = all && c.match();
            if (as_json) {
                Json o;
                Json arr = Json::array();
                for (const auto& c : checks) {
                    Json one;
                    one["name"] = c.name;
                    one["formula"] = c.formula;
                    one["oracle"] = c.oracle;
                    one["match"] = c.match();
                    arr.push_back(std::move(one));
                }
                o["checks"] = std::move(arr);
                o["match"] = all;
                out << o.dump(2) << "\n";
            } else {
                for (const auto& c : checks)
                    out << c.name << ": formula " << c.formula << ", oracle " << c.oracle << " -> "
                        << (c.match() ? "PASS" : "FAIL") << "\n";
                out << "result: " << (all ? "PASS" : "FAIL") << "\n";
            }
            return all ? 0 : 1;
        } else if (closedform->parsed()) {
            std::vector<Int> f = closed_form_f(m, force);
            if (as_json) {
                Json o;
                o["closed_form_f"] = ints_json(f);
                out << o.dump(2) << "\n";
            } else {
                out << "closed_form_f: " << detail::join_ints(f) << "\n";
            }
        } else if (poset->parsed()) {
            if (as_json) {
                Json o;
                Json elements = Json::array();
                for (std::size_t i = 0; i < m.poset.size(); ++i)
                    elements.push_back(m.poset.element(i));
                o["elements"] = std::move(elements);
                Json covers = Json::array();
                for (const auto& [lo, hi] : m.poset.covers())
                    covers.push_back(Json::array({m.poset.element(lo), m.poset.element(hi)}));
                o["covers"] = std::move(covers);
                out << o.dump(2) << "\n";
            } else {
                out << hasse_text(m.poset);
            }
        }
        return 0;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace cli
}  // namespace dissect
