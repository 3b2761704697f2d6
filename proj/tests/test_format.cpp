#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "alexsum/format.hpp"
#include "alexsum/state_sum.hpp"

#include <stdexcept>

using namespace alexsum;

namespace {

LaurentPoly v_pow(int e) { return LaurentPoly::monomial(1, e); }

}  // namespace

TEST_CASE("text rendering") {
    CHECK(render(LaurentPoly()) == "0");
    CHECK(render(LaurentPoly(1L)) == "1");
    CHECK(render(LaurentPoly(-7L)) == "-7");
    CHECK(render(-v_pow(2) + LaurentPoly(3L) - v_pow(-2)) == "-v^2 + 3 - v^-2");
    CHECK(render(v_pow(1) - v_pow(-1)) == "v - v^-1");
    CHECK(render(LaurentPoly(2L) * v_pow(3)) == "2v^3");
    CHECK(render(v_pow(1) - v_pow(-1), 't') == "t - t^-1");

    ConwayPoly fig8 = to_conway(-v_pow(2) + LaurentPoly(3L) - v_pow(-2));
    CHECK(render(fig8) == "1 - z^2");
    ConwayPoly torus;
    torus.set(0, 1);
    torus.set(2, 3);
    torus.set(4, 1);
    CHECK(render(torus) == "1 + 3z^2 + z^4");
    CHECK(render(ConwayPoly()) == "0");

    HalfTPoly hopf;
    hopf.doubled.set(1, 1);
    hopf.doubled.set(-1, -1);
    CHECK(render(hopf) == "t^1/2 - t^-1/2");
    HalfTPoly knot;
    knot.doubled.set(2, 1);
    knot.doubled.set(0, -1);
    knot.doubled.set(-2, 1);
    CHECK(render(knot) == "t - 1 + t^-1");
    HalfTPoly shifted;
    shifted.doubled.set(3, 2);
    CHECK(render(shifted) == "2t^3/2");

    CHECK(render(RationalFn(v_pow(2) + LaurentPoly(1L))) == "v^2 + 1");
    CHECK(render(RationalFn(quantum_integer(3), quantum_integer(2))) ==
          "(v^3 + v + v^-1) / (v^2 + 1)");
}

TEST_CASE("json round trips") {
    LaurentPoly p = -v_pow(2) + LaurentPoly(3L) - v_pow(-2);
    nlohmann::json jp = poly_to_json(p, "v");
    CHECK(jp["variable"] == "v");
    CHECK(jp["terms"].size() == 3);
    CHECK(jp["terms"][0][0] == -2);  // ascending exponents
    CHECK(laurent_from_json(jp, "v") == p);
    CHECK_THROWS_AS(laurent_from_json(jp, "t"), std::invalid_argument);

    CHECK(laurent_from_json(poly_to_json(LaurentPoly(), "v"), "v").is_zero());

    ConwayPoly c = to_conway(p);
    CHECK(conway_from_json(poly_to_json(c)) == c);

    // Half-integer exponents serialize as "k/2" strings, integers as "k".
    HalfTPoly h;
    h.doubled.set(1, 1);
    h.doubled.set(-1, -1);
    h.doubled.set(4, 5);
    nlohmann::json jh = poly_to_json(h);
    CHECK(jh["terms"][0][0] == "-1/2");
    CHECK(jh["terms"][1][0] == "1/2");
    CHECK(jh["terms"][2][0] == "2");
    CHECK(half_t_from_json(jh) == h);

    // Coefficients beyond 64 bits travel as strings.
    LaurentPoly big = LaurentPoly(Int("123456789012345678901234567890"));
    nlohmann::json jbig = poly_to_json(big, "v");
    CHECK(jbig["terms"][0][1].is_string());
    CHECK(laurent_from_json(jbig, "v") == big);

    RationalFn f(quantum_integer(3), quantum_integer(2));
    nlohmann::json jf = rational_to_json(f, "v");
    CHECK(laurent_from_json(jf["num"], "v") == f.num());
    CHECK(laurent_from_json(jf["den"], "v") == f.den());

    CHECK_THROWS_AS(laurent_from_json(nlohmann::json::object(), "v"), std::invalid_argument);
    CHECK_THROWS_AS(laurent_from_json(nlohmann::json{{"variable", "v"}, {"terms", 3}}, "v"),
                    std::invalid_argument);
}
