#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "dissect/toric.hpp"
#include "support/corpus.hpp"

using namespace dissect;

namespace {

std::set<std::string> flat_ids(const ArrangementModel& m) {
    std::set<std::string> ids;
    for (const auto& f : m.flats) ids.insert(f.id);
    return ids;
}

std::size_t count_dim(const ArrangementModel& m, int d) {
    std::size_t n = 0;
    for (const auto& f : m.flats)
        if (f.dim == d) ++n;
    return n;
}

ToricSpec::Hypersurface surf(std::vector<Int> c, Rational b) {
    return {std::move(c), std::move(b)};
}

}  // namespace

TEST_CASE("three circle classes through a common triple point", "[toric]") {
    ArrangementModel m = build_toric(corpus::tri_torus_spec());
    CHECK(m.cellularity == Cellularity::validated);
    CHECK(flat_ids(m) == std::set<std::string>{"X",
                                               "x0+2x1=0(mod1)",
                                               "2x0+x1=0(mod1)",
                                               "x0-x1=0(mod1)",
                                               "x0=0(mod1);x1=0(mod1)",
                                               "x0=1/3(mod1);x1=1/3(mod1)",
                                               "x0=2/3(mod1);x1=2/3(mod1)"});
    // All three circles pass through all three points.
    for (const auto& pt : {"x0=0(mod1);x1=0(mod1)", "x0=1/3(mod1);x1=1/3(mod1)",
                           "x0=2/3(mod1);x1=2/3(mod1)"})
        for (const auto& c : {"x0+2x1=0(mod1)", "2x0+x1=0(mod1)", "x0-x1=0(mod1)"})
            CHECK(m.poset.leq_ids(c, pt));
    CHECK(m.ambient().poin_c == one_plus_t_power(2));
    CHECK(chamber_count(m) == 6);
}

TEST_CASE("vertex count of two circle classes equals the covector determinant",
          "[toric]") {
    auto vertices = [](std::vector<Int> c1, std::vector<Int> c2) {
        ToricSpec s;
        s.ambient_dim = 2;
        s.hypersurfaces = {surf(std::move(c1), Rational(0)),
                           surf(std::move(c2), Rational(0))};
        return count_dim(build_toric(s), 0);
    };
    CHECK(vertices({Int(1), Int(0)}, {Int(0), Int(1)}) == 1);
    CHECK(vertices({Int(1), Int(2)}, {Int(2), Int(1)}) == 3);
    CHECK(vertices({Int(1), Int(3)}, {Int(2), Int(1)}) == 5);
    CHECK(vertices({Int(2), Int(1)}, {Int(1), Int(-2)}) == 5);
}

TEST_CASE("imprimitive covectors split into parallel components", "[toric]") {
    // 2 x0 = 0 gives the two circles x0 = 0 and x0 = 1/2; x0 + 2 x1 = 0 is
    // one of the components of 2 x0 + 4 x1 = 0, so the flats overlap.
    ToricSpec s;
    s.ambient_dim = 2;
    s.hypersurfaces = {surf({Int(1), Int(2)}, Rational(0)),
                       surf({Int(2), Int(4)}, Rational(0)),
                       surf({Int(0), Int(1)}, Rational(0))};
    ArrangementModel m = build_toric(s);
    CHECK(count_dim(m, 1) == 3);
    CHECK(m.poset.contains("x0+2x1=0(mod1)"));
    CHECK(m.poset.contains("x0+2x1=1/2(mod1)"));
    CHECK(m.poset.contains("x1=0(mod1)"));
    CHECK(count_dim(m, 0) == 2);
    CHECK(chamber_count(m) == 2);
}

TEST_CASE("one-dimensional torus splits into point flats", "[toric]") {
    ToricSpec s;
    s.ambient_dim = 1;
    s.hypersurfaces = {surf({Int(2)}, Rational(0))};
    ArrangementModel m = build_toric(s);
    CHECK(m.cellularity == Cellularity::validated);
    CHECK(flat_ids(m) == std::set<std::string>{"X", "x0=0(mod1)", "x0=1/2(mod1)"});
    CHECK(chamber_count(m) == 2);
    CHECK(f_vector(m) == std::vector<Int>{2, 2});
    CHECK(characteristic_polynomial(m).str("t") == "t - 1");
}

TEST_CASE("counts are invariant under a unimodular change of coordinates", "[toric]") {
    ArrangementModel base = build_toric(corpus::tri_torus_spec());
    // Substituting x = U y with U = [[1,1],[0,1]] turns covector c into c U.
    ToricSpec s;
    s.ambient_dim = 2;
    s.hypersurfaces = {surf({Int(1), Int(3)}, Rational(0)),
                       surf({Int(2), Int(3)}, Rational(0)),
                       surf({Int(1), Int(0)}, Rational(0))};
    ArrangementModel moved = build_toric(s);
    CHECK(characteristic_polynomial(moved) == characteristic_polynomial(base));
    CHECK(f_vector(moved) == f_vector(base));
    CHECK(chamber_count(moved) == chamber_count(base));
}

TEST_CASE("2-torus models without vertices are rejected", "[toric]") {
    ToricSpec s;
    s.ambient_dim = 2;
    s.hypersurfaces = {surf({Int(1), Int(0)}, Rational(0))};
    CHECK_THROWS_AS(build_toric(s), NotCellular2D);
    s.hypersurfaces.push_back(surf({Int(1), Int(0)}, Rational(1, 2)));
    CHECK_THROWS_AS(build_toric(s), NotCellular2D);
}

TEST_CASE("3-torus models build but are only asserted cellular", "[toric]") {
    ToricSpec s;
    s.ambient_dim = 3;
    s.hypersurfaces = {surf({Int(1), Int(0), Int(0)}, Rational(0)),
                       surf({Int(0), Int(1), Int(0)}, Rational(0)),
                       surf({Int(0), Int(0), Int(1)}, Rational(0))};
    ArrangementModel m = build_toric(s);
    CHECK(m.cellularity == Cellularity::asserted);
    CHECK(chamber_count(m) == 1);
    CHECK(f_vector(m) == std::vector<Int>{1, 3, 3, 1});
}

TEST_CASE("toric input rejection", "[toric]") {
    ToricSpec s;
    s.ambient_dim = 0;
    CHECK_THROWS_AS(build_toric(s), ValidationError);
    s.ambient_dim = 2;
    CHECK_THROWS_AS(build_toric(s), EmptySpec);
    s.hypersurfaces = {surf({Int(0), Int(0)}, Rational(0))};
    CHECK_THROWS_AS(build_toric(s), ValidationError);
    s.hypersurfaces = {surf({Int(1)}, Rational(0))};
    CHECK_THROWS_AS(build_toric(s), ValidationError);
    // Sign flip plus offset negation lands on the same canonical form.
    s.hypersurfaces = {surf({Int(1), Int(2)}, Rational(1, 3)),
                       surf({Int(-1), Int(-2)}, Rational(-1, 3))};
    CHECK_THROWS_AS(build_toric(s), Duplicate);

    ToricSpec many;
    many.ambient_dim = 1;
    for (int k = 0; k <= static_cast<int>(kBuilderCap); ++k)
        many.hypersurfaces.push_back(surf({Int(1)}, Rational(k, 30)));
    CHECK_THROWS_AS(build_toric(many), CapExceeded);

    ToricSpec burst;
    burst.ambient_dim = 1;
    burst.hypersurfaces = {surf({Int(5000)}, Rational(0))};
    CHECK_THROWS_AS(build_toric(burst), CapExceeded);
}

TEST_CASE("solve_mod1 components and saturation", "[toric]") {
    IntMatrix a(1, 2);
    a(0, 0) = 2;
    a(0, 1) = 0;
    auto sol = detail::solve_mod1(a, {Rational(0)});
    REQUIRE(sol.has_value());
    CHECK(sol->dim == 1);
    REQUIRE(sol->witnesses.size() == 2);
    std::set<Rational> x0s;
    for (const auto& w : sol->witnesses) {
        REQUIRE(w.size() == 2);
        x0s.insert(w[0]);
    }
    CHECK(x0s == std::set<Rational>{Rational(0), Rational(1, 2)});
    IntMatrix hnf = hermite_normal_form(sol->saturation);
    REQUIRE(hnf.rows() == 1);
    CHECK(hnf(0, 0) == 1);
    CHECK(hnf(0, 1) == 0);

    // Incompatible congruences on the same circle class.
    IntMatrix b(2, 2);
    b(0, 0) = 1;
    b(0, 1) = 1;
    b(1, 0) = 1;
    b(1, 1) = 1;
    CHECK_FALSE(detail::solve_mod1(b, {Rational(0), Rational(1, 2)}).has_value());
}
