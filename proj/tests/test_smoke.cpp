#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "dissect/cli.hpp"
#include "dissect/dissect.hpp"
#include "dissect/io.hpp"

using namespace dissect;

TEST_CASE("two coordinate lines in the plane", "[smoke]") {
    HyperplaneSpec spec;
    spec.ambient_dim = 2;
    spec.hyperplanes.push_back({{Rational(1), Rational(0)}, Rational(0)});
    spec.hyperplanes.push_back({{Rational(0), Rational(1)}, Rational(0)});
    ArrangementModel m = build_hyperplane(spec);

    CHECK(m.poset.size() == 4);
    CHECK(characteristic_polynomial(m).str("t") == "t^2 - 2t + 1");
    CHECK(chamber_count(m) == 4);
    CHECK(f_vector(m) == std::vector<Int>{Int(1), Int(4), Int(4)});

    FaceEnumeration e = enumerate_faces(spec);
    CHECK(oracle_chamber_count(e) == 4);
    CHECK(oracle_f_vector(e) == f_vector(m));
}
