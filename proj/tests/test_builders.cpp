#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "dissect/builders.hpp"
#include "support/corpus.hpp"

using namespace dissect;

namespace {

std::set<std::string> flat_ids(const ArrangementModel& m) {
    std::set<std::string> ids;
    for (const auto& f : m.flats) ids.insert(f.id);
    return ids;
}

std::vector<Rational> rrow(std::initializer_list<int> xs) {
    std::vector<Rational> out;
    for (int x : xs) out.push_back(Rational(x));
    return out;
}

}  // namespace

TEST_CASE("hyperplane flats and ids", "[builders][hyperplane]") {
    ArrangementModel m = build_hyperplane(corpus::axes_spec());
    CHECK(flat_ids(m) == std::set<std::string>{"X", "x0=0", "x1=0", "x0=0;x1=0"});
    CHECK(m.ambient().dim == 2);
    CHECK(m.flat_by_id("x0=0").dim == 1);
    CHECK(m.flat_by_id("x0=0").poin_c == IntPolynomial::monomial(1));
    CHECK(m.flat_by_id("x0=0;x1=0").witness == std::vector<Rational>{Rational(0), Rational(0)});
    CHECK(m.poset.leq_ids("X", "x0=0;x1=0"));
    CHECK(m.poset.leq_ids("x1=0", "x0=0;x1=0"));
    CHECK_FALSE(m.poset.leq_ids("x0=0", "x1=0"));
}

TEST_CASE("hyperplane ids are scale and sign invariant", "[builders][hyperplane]") {
    HyperplaneSpec s;
    s.ambient_dim = 2;
    s.hyperplanes = {{{Rational(-2), Rational(3)}, Rational(-5)},
                     {{Rational(1, 2), Rational(0)}, Rational(1, 4)}};
    ArrangementModel m = build_hyperplane(s);
    CHECK(m.poset.contains("2x0-3x1=5"));
    CHECK(m.poset.contains("2x0=1"));
}

TEST_CASE("hyperplane input rejection", "[builders][hyperplane]") {
    auto one = [](std::vector<Rational> n, Rational b) {
        HyperplaneSpec s;
        s.ambient_dim = static_cast<int>(n.size());
        s.hyperplanes = {{std::move(n), std::move(b)}};
        return s;
    };
    CHECK_THROWS_AS(build_hyperplane(one(rrow({0, 0}), Rational(1))), ValidationError);

    HyperplaneSpec dup = corpus::axes_spec();
    dup.hyperplanes.push_back({rrow({3, 0}), Rational(0)});  // scaled copy of x0=0
    CHECK_THROWS_AS(build_hyperplane(dup), DuplicateHyperplane);

    HyperplaneSpec wrong;
    wrong.ambient_dim = 2;
    wrong.hyperplanes = {{rrow({1}), Rational(0)}};
    CHECK_THROWS_AS(build_hyperplane(wrong), ValidationError);

    HyperplaneSpec neg;
    neg.ambient_dim = -1;
    CHECK_THROWS_AS(build_hyperplane(neg), ValidationError);

    HyperplaneSpec many;
    many.ambient_dim = 1;
    for (int k = 0; k <= static_cast<int>(kBuilderCap); ++k)
        many.hyperplanes.push_back({rrow({1}), Rational(k)});
    CHECK_THROWS_AS(build_hyperplane(many), CapExceeded);
}

TEST_CASE("hyperplane arrangements may be empty", "[builders][hyperplane]") {
    HyperplaneSpec s;
    s.ambient_dim = 2;
    ArrangementModel m = build_hyperplane(s);
    CHECK(m.poset.size() == 1);
    CHECK(chamber_count(m) == 1);
    CHECK(f_vector(m) == std::vector<Int>{0, 0, 1});

    s.ambient_dim = 0;  // a single point still has one chamber
    ArrangementModel pt = build_hyperplane(s);
    CHECK(chamber_count(pt) == 1);
    CHECK(f_vector(pt) == std::vector<Int>{1});
}

TEST_CASE("parallel hyperplanes produce no vertices", "[builders][hyperplane]") {
    HyperplaneSpec s;
    s.ambient_dim = 2;
    s.hyperplanes = {{rrow({1, 0}), Rational(0)}, {rrow({1, 0}), Rational(1, 2)}};
    ArrangementModel m = build_hyperplane(s);
    CHECK(m.poset.size() == 3);
    CHECK(chamber_count(m) == 3);
    CHECK(f_vector(m) == std::vector<Int>{0, 2, 3});
}

TEST_CASE("great circles on the 2-sphere", "[builders][sphere]") {
    SphereSpec s;
    s.ambient_dim = 2;
    s.normals = {rrow({1, 0, 0}), rrow({0, 1, 0})};
    ArrangementModel m = build_sphere(s);
    CHECK(m.cellularity == Cellularity::validated);
    // The two cutting planes share the x2 axis, which meets the sphere in an
    // antipodal pair; each point is its own flat.
    CHECK(flat_ids(m) == std::set<std::string>{"X", "x0=0", "x1=0", "pt(0 0 1)", "pt(0 0 -1)"});
    CHECK(m.flat_by_id("x0=0").poin_c == one_plus_t_power(1));
    CHECK(m.flat_by_id("pt(0 0 1)").dim == 0);
    CHECK(m.ambient().poin_c == IntPolynomial::monomial(0) + IntPolynomial::monomial(2));
    CHECK(characteristic_polynomial(m).str("t") == "t^2 - 2t + 1");
    CHECK(chamber_count(m) == 4);
    CHECK(f_vector(m) == std::vector<Int>{2, 4, 4});

    s.normals.push_back(rrow({0, 0, 1}));
    ArrangementModel oct = build_sphere(s);
    CHECK(oct.cellularity == Cellularity::validated);
    CHECK(chamber_count(oct) == 8);
    CHECK(f_vector(oct) == std::vector<Int>{6, 12, 8});
}

TEST_CASE("one great circle is not a cell structure", "[builders][sphere]") {
    SphereSpec s;
    s.ambient_dim = 2;
    s.normals = {rrow({0, 0, 1})};
    ArrangementModel m = build_sphere(s);
    // Chambers are the two open hemispheres, but the single edge is a full
    // circle, so the counts only apply to the chamber level.
    CHECK(m.cellularity == Cellularity::asserted);
    CHECK(chamber_count(m) == 2);
}

TEST_CASE("antipodal point flats on the 1-sphere", "[builders][sphere]") {
    SphereSpec s;
    s.ambient_dim = 1;
    s.normals = {rrow({1, 0}), rrow({0, 1})};
    ArrangementModel m = build_sphere(s);
    CHECK(flat_ids(m) ==
          std::set<std::string>{"X", "pt(0 1)", "pt(0 -1)", "pt(1 0)", "pt(-1 0)"});
    CHECK(chamber_count(m) == 4);
    CHECK(f_vector(m) == std::vector<Int>{4, 4});
    CHECK(characteristic_polynomial(m).str("t") == "t - 3");
}

TEST_CASE("sphere input rejection", "[builders][sphere]") {
    SphereSpec s;
    s.ambient_dim = 2;
    CHECK_THROWS_AS(build_sphere(s), EmptySpec);
    s.normals = {rrow({1, 0, 0}), rrow({-2, 0, 0})};
    CHECK_THROWS_AS(build_sphere(s), ParallelNormals);
    s.normals = {rrow({0, 0, 0})};
    CHECK_THROWS_AS(build_sphere(s), ValidationError);
    s.normals = {rrow({1, 0})};
    CHECK_THROWS_AS(build_sphere(s), ValidationError);
    s.ambient_dim = 0;
    s.normals = {rrow({1})};
    CHECK_THROWS_AS(build_sphere(s), ValidationError);
}

TEST_CASE("lines in the projective plane", "[builders][projective]") {
    ProjectiveSpec s;
    s.ambient_dim = 2;
    s.normals = {rrow({1, 0, 0}), rrow({0, 1, 0}), rrow({0, 0, 1})};
    ArrangementModel m = build_projective(s);
    CHECK(m.cellularity == Cellularity::validated);
    CHECK(m.poset.size() == 7);  // plane, 3 lines, 3 points
    CHECK(m.ambient().poin_c == IntPolynomial::monomial(0));  // even dimension
    CHECK(m.flat_by_id("x0=0").poin_c == one_plus_t_power(1));
    CHECK(characteristic_polynomial(m).str("t") == "-3t + 1");
    CHECK(chamber_count(m) == 4);
    CHECK(f_vector(m) == std::vector<Int>{3, 6, 4});

    // Two lines meet in one point (not an antipodal pair).
    ProjectiveSpec two;
    two.ambient_dim = 2;
    two.normals = {rrow({1, 0, 0}), rrow({0, 1, 0})};
    ArrangementModel m2 = build_projective(two);
    CHECK(m2.poset.size() == 4);
    CHECK(chamber_count(m2) == 2);
    CHECK(f_vector(m2) == std::vector<Int>{1, 2, 2});
}

TEST_CASE("projective input rejection", "[builders][projective]") {
    ProjectiveSpec s;
    s.ambient_dim = 2;
    CHECK_THROWS_AS(build_projective(s), EmptySpec);
    s.normals = {rrow({1, 1, 0}), rrow({2, 2, 0})};
    CHECK_THROWS_AS(build_projective(s), ParallelNormals);
    s.normals = {rrow({1, 0})};
    CHECK_THROWS_AS(build_projective(s), ValidationError);
}

TEST_CASE("points on a circle", "[builders][circle]") {
    CircleSpec s;
    s.points = {Rational(4, 3), Rational(-1, 2), Rational(0)};  // folded into [0,1)
    ArrangementModel m = build_circle(s);
    CHECK(flat_ids(m) == std::set<std::string>{"X", "0", "1/3", "1/2"});
    CHECK(m.flat_by_id("1/3").witness == std::vector<Rational>{Rational(1, 3)});
    CHECK(chamber_count(m) == 3);
    CHECK(f_vector(m) == std::vector<Int>{3, 3});
    CHECK(characteristic_polynomial(m).str("t") == "t - 2");

    CircleSpec one;
    one.points = {Rational(1, 3)};
    ArrangementModel m1 = build_circle(one);
    CHECK(chamber_count(m1) == 1);
    CHECK(f_vector(m1) == std::vector<Int>{1, 1});
}

TEST_CASE("circle input rejection", "[builders][circle]") {
    CircleSpec s;
    CHECK_THROWS_AS(build_circle(s), EmptySpec);
    s.points = {Rational(1, 3), Rational(4, 3)};  // same point mod 1
    CHECK_THROWS_AS(build_circle(s), Duplicate);
    s.points.clear();
    for (int k = 0; k <= static_cast<int>(kBuilderCap); ++k)
        s.points.push_back(Rational(k, 25));
    CHECK_THROWS_AS(build_circle(s), CapExceeded);
}
