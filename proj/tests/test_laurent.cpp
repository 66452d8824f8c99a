#include "doctest.h"

#include "tkmoves/laurent.hpp"

#include <cmath>
#include <random>

using namespace tkm;

namespace {

LaurentPoly az(std::initializer_list<std::tuple<int, int, long>> terms) {
    LaurentPoly p({"a", "z"});
    for (auto& [ae, ze, c] : terms) p.add_term({ae, ze}, c);
    return p;
}

// P_{3_1}(a,z) = -a^-4 - 2a^-2 + z^2 a^-2
LaurentPoly trefoil_poly() { return az({{-4, 0, -1}, {-2, 0, -2}, {-2, 2, 1}}); }
// P_{4_1}(a,z) = -a^-2 - 1 - a^2 + z^2
LaurentPoly fig8_poly() { return az({{-2, 0, -1}, {0, 0, -1}, {2, 0, -1}, {0, 2, 1}}); }

LaurentPoly random_poly(std::mt19937_64& rng, int nterms) {
    std::uniform_int_distribution<int> exp(-3, 3), coeff(-5, 5);
    LaurentPoly p({"a", "z"});
    for (int i = 0; i < nterms; ++i) p.add_term({exp(rng), exp(rng)}, coeff(rng));
    return p;
}

}  // namespace

TEST_CASE("poly_add basics") {
    LaurentPoly a({"a"});
    a.add_term({1}, 1);
    a.add_term({-1}, 1);
    LaurentPoly b({"a"});
    b.add_term({-1}, -1);
    LaurentPoly sum = a + b;
    CHECK(sum == LaurentPoly::monomial({"a"}, {1}, 1));

    // additive identity
    CHECK(a + LaurentPoly({"a"}) == a);

    // (z^2 a^-2 - 2a^-2) + (-a^-4) = P_{3_1}
    LaurentPoly p = az({{-2, 2, 1}, {-2, 0, -2}});
    LaurentPoly q = az({{-4, 0, -1}});
    CHECK(p + q == trefoil_poly());

    CHECK_THROWS_AS(a + LaurentPoly::constant({"z"}, 1), std::invalid_argument);
}

TEST_CASE("poly_mul basics") {
    LaurentPoly a({"a"});
    a.add_term({1}, 1);
    a.add_term({-1}, 1);
    CHECK(a * LaurentPoly::constant({"a"}, 1) == a);

    LaurentPoly x = LaurentPoly::monomial({"a"}, {1}, 1);
    LaurentPoly xi = LaurentPoly::monomial({"a"}, {-1}, 1);
    CHECK(x * xi == LaurentPoly::constant({"a"}, 1));

    // (z - a - a^-1)(z + a + a^-1) = z^2 - a^2 - 2 - a^-2, by hand expansion
    LaurentPoly l = az({{0, 1, 1}, {1, 0, -1}, {-1, 0, -1}});
    LaurentPoly r = az({{0, 1, 1}, {1, 0, 1}, {-1, 0, 1}});
    CHECK(l * r == az({{0, 2, 1}, {2, 0, -1}, {0, 0, -2}, {-2, 0, -1}}));
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937_64 rng(12345);
    for (int it = 0; it < 50; ++it) {
        LaurentPoly p = random_poly(rng, 4), q = random_poly(rng, 4), r = random_poly(rng, 3);
        CHECK(p + q == q + p);
        CHECK(p * q == q * p);
        CHECK((p + q) + r == p + (q + r));
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
    }
}

TEST_CASE("substitute") {
    // P_{3_1}(a, a+a^-1) = 1
    LaurentPoly img({"a"});
    img.add_term({1}, 1);
    img.add_term({-1}, 1);
    CHECK(trefoil_poly().substitute("z", img) == LaurentPoly::constant({"a"}, 1));

    // identity substitution
    LaurentPoly z = LaurentPoly::monomial({"z"}, {1}, 1);
    CHECK(fig8_poly().substitute("z", z) == fig8_poly());

    // P_{4_1}(1, z) = z^2 - 3
    LaurentPoly one = LaurentPoly::constant({"a"}, 1);
    LaurentPoly expect({"z"});
    expect.add_term({2}, 1);
    expect.add_term({0}, -3);
    CHECK(fig8_poly().substitute("a", one) == expect);

    // non-invertible image into a negative exponent
    LaurentPoly hopfish = az({{-1, 1, 1}, {-1, -1, -1}});
    CHECK_THROWS_AS(hopfish.substitute("z", img), std::invalid_argument);
    // but a unit monomial image is fine
    CHECK_NOTHROW(hopfish.substitute("z", LaurentPoly::monomial({"a"}, {2}, -1)));
}

TEST_CASE("eval_complex") {
    ComplexPoint pt;
    pt.assignments["a"] = 1.0;
    pt.assignments["z"] = 1.0;
    CHECK(approx_equal(trefoil_poly().eval(pt), Complex(-2.0, 0.0)));

    ComplexPoint golden;
    golden.assignments["a"] = 1.0;
    golden.assignments["z"] = (1.0 + std::sqrt(5.0)) / 2.0;
    CHECK(approx_equal(trefoil_poly().eval(golden), Complex((-3 + std::sqrt(5.0)) / 2, 0.0)));
    CHECK(approx_equal(fig8_poly().eval(golden), Complex((-3 + std::sqrt(5.0)) / 2, 0.0)));

    CHECK(approx_equal(LaurentPoly::constant({"a"}, 1).eval(pt), Complex(1.0, 0.0)));

    ComplexPoint zero;
    zero.assignments["a"] = 0.0;
    zero.assignments["z"] = 1.0;
    CHECK_THROWS_AS(trefoil_poly().eval(zero), std::invalid_argument);
}

TEST_CASE("eval distributes over mul and substitute composes") {
    std::mt19937_64 rng(777);
    std::uniform_real_distribution<double> ang(0.0, 2 * M_PI);
    for (int it = 0; it < 20; ++it) {
        LaurentPoly p = random_poly(rng, 4), q = random_poly(rng, 4);
        ComplexPoint pt;
        pt.assignments["a"] = std::polar(1.0, ang(rng));
        pt.assignments["z"] = std::polar(1.0, ang(rng));
        CHECK(approx_equal((p * q).eval(pt), p.eval(pt) * q.eval(pt)));

        // substitute z -> a + a^-1, then eval == eval with composed assignment
        if (p.min_exp("z") >= 0) {
            LaurentPoly img({"a"});
            img.add_term({1}, 1);
            img.add_term({-1}, 1);
            LaurentPoly ps = p.substitute("z", img);
            ComplexPoint pt2;
            pt2.assignments["a"] = pt.assignments["a"];
            ComplexPoint composed;
            composed.assignments["a"] = pt.assignments["a"];
            composed.assignments["z"] = pt.assignments["a"] + 1.0 / pt.assignments["a"];
            CHECK(approx_equal(ps.eval(pt2), p.eval(composed)));
        }
    }
}

TEST_CASE("canonical text and json rendering") {
    CHECK(trefoil_poly().str() == "-a^-4 - 2a^-2 + a^-2 z^2");
    CHECK(LaurentPoly({"a"}).str() == "0");
    LaurentPoly p = az({{-2, 2, 1}});
    CHECK(p.json() == "{\"vars\":[\"a\",\"z\"],\"terms\":[{\"exps\":[-2,2],\"coeff\":\"1\"}]}");
}
