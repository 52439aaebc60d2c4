#include <doctest.h>

#include "curves.hpp"
#include "oracles.hpp"
#include "qhelix/curveforms.hpp"
#include "qhelix/errors.hpp"
#include "qhelix/generators.hpp"

using namespace qhelix;

TEST_SUITE("quaternion") {
    TEST_CASE("hamilton product") {
        const Quaternion i(0, 1, 0, 0), j(0, 0, 1, 0), k(0, 0, 0, 1);
        CHECK(i * j == k);
        CHECK(j * i == -k);
        CHECK(j * k == i);
        CHECK(k * i == j);
        CHECK(i * i == Quaternion(Rat(-1)));
        const Quaternion q(1, 2, 3, 4);
        CHECK(q * q.conj() == Quaternion(q.norm()));
    }
}

TEST_SUITE("hodograph from quaternion") {
    TEST_CASE("constants") {
        CHECK(hodograph_from_quaternion(QuaternionPolynomial{Quaternion(1)}) == Hodograph(RatPoly{1}, {}, {}));
        CHECK(hodograph_from_quaternion(QuaternionPolynomial{Quaternion(0, 1, 0, 0)}) ==
              Hodograph(RatPoly{1}, {}, {}));
        CHECK_THROWS_AS(hodograph_from_quaternion(QuaternionPolynomial{}), DegenerateInput);
        CHECK_THROWS_AS(Hodograph({}, {}, {}), DegenerateInput);
    }

    TEST_CASE("first example expansion") {
        const Hodograph h = hodograph_from_quaternion(testdata::example1());
        CHECK(h.dx == RatPoly{-25, 50, -36, 14, -3});
        CHECK(h.dy == RatPoly{100, -50, 14, 2, -2});
        CHECK(h.dz == RatPoly{200, -250, 138, -46, 6});
        CHECK(h == oracle::hodograph_by_quaternion_product(testdata::example1()));
        const RatPoly s = sigma_poly(testdata::example1());
        CHECK(h.dx * h.dx + h.dy * h.dy + h.dz * h.dz == s * s);
    }

    TEST_CASE("property: agrees with A i A*") {
        RationalSampler rng(17);
        for (int i = 0; i < 200; ++i) {
            const auto a = random_quaternion_polynomial(rng, static_cast<std::size_t>(i % 4));
            CHECK(hodograph_from_quaternion(a) == oracle::hodograph_by_quaternion_product(a));
        }
    }
}

TEST_SUITE("hopf") {
    TEST_CASE("reassembly") {
        const HopfPair unit = hopf_from_quaternion(QuaternionPolynomial{Quaternion(1)});
        CHECK(unit.z1 == GaussPoly{GaussRat(1)});
        CHECK(unit.z2.is_zero());

        const HopfPair h1 = hopf_from_quaternion(testdata::example1());
        CHECK(h1.z1 == GaussPoly{GaussRat(Rat(0), Rat(10)), GaussRat(Rat(-3), Rat(-5)), GaussRat(Rat(1), Rat(1))});
        CHECK(h1.z2 == GaussPoly{GaussRat(Rat(10), Rat(5)), GaussRat(Rat(-9), Rat(3)), GaussRat(Rat(1), Rat(-2))});

        const HopfPair h2 = hopf_from_quaternion(testdata::example2());
        CHECK(h2.z1 == GaussPoly{GaussRat(Rat(5), Rat(1)), GaussRat(Rat(12), Rat(18)), GaussRat(Rat(-19), Rat(-22))});
        CHECK(h2.z2 == GaussPoly{GaussRat(Rat(3), Rat(-1)), GaussRat(Rat(24), Rat(-12)), GaussRat(Rat(-31), Rat(15))});

        CHECK(quaternion_from_hopf(h2) == testdata::example2());
        CHECK_THROWS_AS(HopfPair({}, {}), DegenerateInput);
    }

    TEST_CASE("hopf map") {
        CHECK(hodograph_from_hopf(HopfPair(GaussPoly{GaussRat(1)}, {})) == Hodograph(RatPoly{1}, {}, {}));
        CHECK(hodograph_from_hopf(HopfPair({}, GaussPoly{GaussRat(1)})) == Hodograph(RatPoly{-1}, {}, {}));
        const auto a = testdata::example1();
        CHECK(hodograph_from_hopf(hopf_from_quaternion(a)) == hodograph_from_quaternion(a));
    }

    TEST_CASE("property: representation commutation and Pythagorean identity") {
        RationalSampler rng(23);
        for (int i = 0; i < 300; ++i) {
            const auto a = random_quaternion_polynomial(rng, 2);
            const HopfPair h = hopf_from_quaternion(a);
            const Hodograph via_q = hodograph_from_quaternion(a);
            CHECK(hodograph_from_hopf(h) == via_q);
            CHECK(quaternion_from_hopf(h) == a);
            const RatPoly s = sigma_poly(a);
            CHECK(s == sigma_poly(h));
            CHECK(via_q.dx * via_q.dx + via_q.dy * via_q.dy + via_q.dz * via_q.dz == s * s);
        }
    }
}

TEST_SUITE("bezier") {
    TEST_CASE("basis change") {
        const Quaternion q(1, -2, Rat(1, 3), 4);
        const std::vector<Quaternion> same{q, q, q};
        CHECK(bezier_to_power(same) == QuaternionPolynomial{q});

        const Quaternion c1(2, 0, 1, -1);
        const std::vector<Quaternion> middle{Quaternion(), c1, Quaternion()};
        CHECK(bezier_to_power(middle) == QuaternionPolynomial{Quaternion(), c1 * Rat(2), c1 * Rat(-2)});

        const Quaternion c0(1, 2, 3, 4), c2(-5, 0, 7, 1);
        const std::vector<Quaternion> general{c0, c1, c2};
        CHECK(bezier_to_power(general) ==
              QuaternionPolynomial{c0, (c1 - c0) * Rat(2), c0 - c1 * Rat(2) + c2});

        const std::vector<Quaternion> linear{c0, c2};
        CHECK(bezier_to_power(linear) == QuaternionPolynomial{c0, c2 - c0});

        CHECK_THROWS_AS(bezier_to_power(std::vector<Quaternion>{}), PreconditionError);
        CHECK_THROWS_AS(bezier_to_power(std::vector<Quaternion>(4, q)), UnsupportedDegree);
    }

    TEST_CASE("property: round trip at random parameters") {
        RationalSampler rng(41);
        for (int i = 0; i < 100; ++i) {
            std::vector<Quaternion> ctrl(static_cast<std::size_t>(1 + i % 3));
            for (auto& c : ctrl) c = rng.quaternion();
            const auto power = bezier_to_power(ctrl);
            for (int k = 0; k < 10; ++k) {
                const Rat t = rng.rational();
                CHECK(power.evaluate(t) == oracle::de_casteljau(ctrl, t));
            }
            CHECK(power.evaluate(Rat(0)) == ctrl.front());
            CHECK(power.evaluate(Rat(1)) == ctrl.back());
        }
    }
}

TEST_SUITE("integrate") {
    TEST_CASE("examples") {
        CHECK(integrate(Hodograph(RatPoly{1}, {}, {})) == PolynomialCurve{RatPoly{0, 1}, {}, {}});
        CHECK(integrate(Hodograph(RatPoly{0, 2}, {}, {}), {Rat(1), Rat(1), Rat(1)}) ==
              PolynomialCurve{RatPoly{1, 0, 1}, RatPoly{1}, RatPoly{1}});

        const PolynomialCurve alpha = integrate(testdata::remark_hodograph());
        CHECK(alpha.x == RatPoly{Rat(0), Rat(-3), Rat(0), Rat(1), Rat(0), Rat(1, 5), Rat(0), Rat(1, 21)});
        CHECK(alpha.y == RatPoly{Rat(0), Rat(0), Rat(3), Rat(0), Rat(-1, 2)});
        CHECK(alpha.z == RatPoly{0, 0, 0, -2});
        CHECK(alpha.evaluate(Rat(0)) == Point3{});
        // −3 + 1 + 1/5 + 1/21 = −184/105
        CHECK(alpha.evaluate(Rat(1)) == Point3{Rat(-184, 105), Rat(5, 2), Rat(-2)});
    }

    TEST_CASE("property: integrate after derivative recovers the curve") {
        RationalSampler rng(43);
        for (int i = 0; i < 100; ++i) {
            PolynomialCurve c{oracle::random_rat_poly(rng, 4), oracle::random_rat_poly(rng, 3),
                              oracle::random_rat_poly(rng, 5)};
            const Point3 origin{c.x.coeff(0), c.y.coeff(0), c.z.coeff(0)};
            CHECK(integrate(c.hodograph(), origin) == c);
            CHECK(integrate(c.hodograph(), origin).hodograph() == c.hodograph());
        }
    }
}

TEST_SUITE("sigma") {
    TEST_CASE("examples") {
        CHECK(sigma_poly(QuaternionPolynomial{Quaternion(1)}) == RatPoly{1});
        CHECK(sigma_poly(testdata::example1()).evaluate(Rat(0)) == Rat(225));
        CHECK(sigma_poly(HopfPair(GaussPoly{GaussRat(0), GaussRat(1)}, GaussPoly{GaussRat(1)})) == RatPoly{1, 0, 1});
    }
}
