#include <catch2/catch_amalgamated.hpp>

#include "dissect/poset.hpp"

using namespace dissect;

namespace {

// Boolean lattice of subsets of {0..n-1}, ids like "{0 2}" and "{}".
Poset boolean_lattice(int n) {
    std::vector<std::string> elems;
    std::vector<std::pair<std::string, std::string>> rels;
    auto name = [](unsigned mask) {
        std::string s = "{";
        bool first = true;
        for (int i = 0; i < 8; ++i)
            if (mask & (1u << i)) {
                if (!first) s += ' ';
                s += std::to_string(i);
                first = false;
            }
        return s + "}";
    };
    const unsigned top = 1u << n;
    for (unsigned m = 0; m < top; ++m) elems.push_back(name(m));
    for (unsigned a = 0; a < top; ++a)
        for (unsigned b = 0; b < top; ++b)
            if (a != b && (a & b) == a) rels.emplace_back(name(a), name(b));
    return build_poset(elems, rels);
}

}  // namespace

TEST_CASE("build_poset ranks and comparability", "[poset]") {
    // Diamond: bot < a, b < top.
    Poset p = build_poset({"bot", "a", "b", "top"},
                          {{"bot", "a"}, {"bot", "b"}, {"a", "top"}, {"b", "top"}});
    REQUIRE(p.size() == 4);
    CHECK(p.element(p.minimum()) == "bot");
    CHECK(p.rank_of_id("bot") == 0);
    CHECK(p.rank_of_id("a") == 1);
    CHECK(p.rank_of_id("b") == 1);
    CHECK(p.rank_of_id("top") == 2);
    CHECK(p.height() == 2);
    CHECK(p.leq_ids("bot", "top"));
    CHECK(p.leq_ids("a", "a"));
    CHECK_FALSE(p.leq_ids("a", "b"));
    CHECK_FALSE(p.leq_ids("top", "bot"));
    CHECK(p.covers().size() == 4);
    CHECK(p.up_set(p.index_of("a")) == std::vector<std::size_t>{p.index_of("a"), p.index_of("top")});
    CHECK(p.down_set(p.index_of("a")).size() == 2);
    CHECK(p.contains("a"));
    CHECK_FALSE(p.contains("zz"));
    CHECK_THROWS_AS(p.index_of("zz"), ValidationError);
}

TEST_CASE("build_poset input validation", "[poset]") {
    CHECK_THROWS_AS(build_poset({"a", "b"}, {{"a", "b"}, {"b", "a"}}), CycleError);
    CHECK_THROWS_AS(build_poset({"a", "b", "c"}, {{"a", "c"}, {"b", "c"}}), NoUniqueMinimum);
    // Relation mentions an element missing from the list.
    CHECK_THROWS_AS(build_poset({"bot", "top"}, {{"bot", "x"}}), ValidationError);
    // Chains of length 3 and 1 into the same top: the short cover jumps ranks.
    CHECK_THROWS_AS(build_poset({"bot", "a", "b", "c", "top"},
                                {{"bot", "a"}, {"a", "b"}, {"b", "top"}, {"bot", "c"},
                                 {"c", "top"}}),
                    NotGraded);
    CHECK_THROWS_AS(build_poset({"a", "a"}, {}), ValidationError);
    CHECK_THROWS_AS(build_poset({}, {}), ValidationError);
}

TEST_CASE("Mobius values on Boolean lattices", "[poset][mobius]") {
    for (int n : {1, 2, 3, 4}) {
        Poset p = boolean_lattice(n);
        REQUIRE(p.size() == (std::size_t(1) << n));
        MobiusTable t = mobius_table(p);
        // mu on a Boolean interval is (-1)^(rank difference); check through
        // the minimum against every element.
        for (std::size_t b = 0; b < p.size(); ++b) {
            int r = p.rank_of(b);
            CHECK(t.mu(p.minimum(), b) == (r % 2 == 0 ? 1 : -1));
        }
        auto idx = [&](const std::string& s) { return p.index_of(s); };
        if (n == 3) {
            CHECK(t.mu(idx("{}"), idx("{}")) == 1);
            CHECK(t.mu(idx("{}"), idx("{0}")) == -1);
            CHECK(t.mu(idx("{}"), idx("{0 1}")) == 1);
            CHECK(t.mu(idx("{}"), idx("{0 1 2}")) == -1);
            CHECK(t.mu(idx("{0}"), idx("{0 1 2}")) == 1);
            CHECK(t.mu(idx("{0}"), idx("{1 2}")) == 0);   // incomparable
            CHECK(t.mu(idx("{0 1}"), idx("{0}")) == 0);   // reversed
        }
        // Full law: sum over [a, b] of mu is zero unless a == b.
        for (std::size_t a = 0; a < p.size(); ++a)
            for (std::size_t b = 0; b < p.size(); ++b) {
                if (!p.leq(a, b)) continue;
                Int acc(0);
                for (std::size_t z = 0; z < p.size(); ++z)
                    if (p.leq(a, z) && p.leq(z, b)) acc += t.mu(a, z);
                CHECK(acc == (a == b ? 1 : 0));
            }
    }
}

TEST_CASE("mobius_invert undoes summation over down-sets", "[poset][mobius]") {
    Poset p = boolean_lattice(3);
    // Pick an arbitrary f, accumulate g, invert, compare.
    std::map<std::string, Rational> f;
    int k = 1;
    for (std::size_t i = 0; i < p.size(); ++i) f[p.element(i)] = Rational(k++, 3);
    std::map<std::string, Rational> g;
    for (std::size_t y = 0; y < p.size(); ++y) {
        Rational acc(0);
        for (std::size_t x = 0; x < p.size(); ++x)
            if (p.leq(x, y)) acc += f[p.element(x)];
        g[p.element(y)] = acc;
    }
    auto back = mobius_invert(p, g);
    REQUIRE(back.size() == f.size());
    for (const auto& [id, v] : f) CHECK(back.at(id) == v);

    g.erase(p.element(0));
    CHECK_THROWS_AS(mobius_invert(p, g), MissingAssignment);
}

TEST_CASE("characteristic polynomial of a poset", "[poset]") {
    // B_3 with ambient exponent 3: (t-1)^3.
    Poset p = boolean_lattice(3);
    IntPolynomial cp = characteristic_polynomial_of_poset(p, 3);
    CHECK(cp.str("t") == "t^3 - 3t^2 + 3t - 1");
    // Exponent can exceed the height; then the polynomial just shifts.
    IntPolynomial cp5 = characteristic_polynomial_of_poset(p, 5);
    CHECK(cp5.coefficient(5) == 1);
    CHECK(cp5.coefficient(2) == -1);
    CHECK_THROWS_AS(characteristic_polynomial_of_poset(p, 2), PreconditionFailed);
}

TEST_CASE("interval subposets", "[poset]") {
    Poset p = boolean_lattice(3);
    Poset iv = interval_subposet(p, "{0}", "{0 1 2}");
    CHECK(iv.size() == 4);  // {0}, {0 1}, {0 2}, {0 1 2}
    CHECK(iv.element(iv.minimum()) == "{0}");
    CHECK(iv.height() == 2);
    CHECK(iv.leq_ids("{0 1}", "{0 1 2}"));
    CHECK_FALSE(iv.contains("{1}"));
    CHECK_THROWS_AS(interval_subposet(p, "{0}", "{1 2}"), NotComparable);
    // Degenerate interval has one element.
    CHECK(interval_subposet(p, "{1}", "{1}").size() == 1);
}

TEST_CASE("join and meet detection", "[poset]") {
    Poset p = boolean_lattice(2);
    auto idx = [&](const std::string& s) { return p.index_of(s); };
    auto j = detail::join(p, idx("{0}"), idx("{1}"));
    REQUIRE(j.has_value());
    CHECK(p.element(*j) == "{0 1}");
    auto m = detail::meet(p, idx("{0}"), idx("{1}"));
    REQUIRE(m.has_value());
    CHECK(p.element(*m) == "{}");

    // N-shaped poset: two maximal elements with two common lower bounds that
    // are incomparable, so the meet of the tops fails to be unique.
    Poset np = build_poset({"bot", "a", "b", "x", "y"},
                           {{"bot", "a"},
                            {"bot", "b"},
                            {"a", "x"},
                            {"b", "x"},
                            {"a", "y"},
                            {"b", "y"}});
    CHECK_FALSE(detail::join(np, np.index_of("a"), np.index_of("b")).has_value());
    CHECK_FALSE(detail::meet(np, np.index_of("x"), np.index_of("y")).has_value());
}

TEST_CASE("geometric lattice recognition", "[poset]") {
    CHECK(is_geometric_lattice(boolean_lattice(1)));
    CHECK(is_geometric_lattice(boolean_lattice(2)));
    CHECK(is_geometric_lattice(boolean_lattice(3)));

    // Lattice that is not atomic: a chain of length 2.
    Poset chain = build_poset({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
    CHECK_FALSE(is_geometric_lattice(chain));

    // Not a lattice at all (no top).
    Poset vee = build_poset({"bot", "a", "b"}, {{"bot", "a"}, {"bot", "b"}});
    CHECK_FALSE(is_geometric_lattice(vee));
}

TEST_CASE("boolean interval recognition", "[poset]") {
    Poset p = boolean_lattice(3);
    CHECK(is_boolean_interval(p, "{}", "{0 1 2}"));
    CHECK(is_boolean_interval(p, "{0}", "{0 1}"));
    CHECK(is_boolean_interval(p, "{2}", "{2}"));

    // Three coatoms under one top but only after collapsing: the face lattice
    // of a triangle interval [bot, top] has 3 atoms yet 8 != 2^3 elements is
    // false here, so build one directly: bot < a,b,c < top has 5 elements.
    Poset tri = build_poset({"bot", "a", "b", "c", "top"},
                            {{"bot", "a"},
                             {"bot", "b"},
                             {"bot", "c"},
                             {"a", "top"},
                             {"b", "top"},
                             {"c", "top"}});
    CHECK_FALSE(is_boolean_interval(tri, "bot", "top"));
    CHECK(is_boolean_interval(tri, "bot", "a"));
}

TEST_CASE("chain enumeration", "[poset]") {
    Poset p = build_poset({"bot", "a", "b", "top"},
                          {{"bot", "a"}, {"bot", "b"}, {"a", "top"}, {"b", "top"}});
    auto all = enumerate_chains(p, 1);
    // Chains: 4 singletons, 5 pairs (bot<a, bot<b, bot<top, a<top, b<top),
    // 2 triples (bot<a<top, bot<b<top).
    CHECK(all.size() == 11);
    auto pairs = enumerate_chains(p, 2);
    CHECK(pairs.size() == 7);
    auto triples = enumerate_chains(p, 3);
    REQUIRE(triples.size() == 2);
    for (const auto& c : triples) {
        REQUIRE(c.size() == 3);
        CHECK(c.front() == "bot");
        CHECK(c.back() == "top");
        CHECK(p.leq_ids(c[0], c[1]));
        CHECK(p.leq_ids(c[1], c[2]));
    }
    CHECK(enumerate_chains(p, 4).empty());
}

TEST_CASE("hasse_text rendering", "[poset]") {
    Poset p = build_poset({"bot", "a", "b", "top"},
                          {{"bot", "a"}, {"bot", "b"}, {"a", "top"}, {"b", "top"}});
    std::string expected =
        "rank 0: bot\n"
        "rank 1: a (covers: bot)\n"
        "rank 1: b (covers: bot)\n"
        "rank 2: top (covers: a, b)\n";
    CHECK(hasse_text(p) == expected);
}
