#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "supersol/errors.hpp"
#include "supersol/yv.hpp"
#include "util.hpp"

using namespace supersol;
using namespace testutil;

TEST_CASE("cubic field arithmetic") {
    CubicScalar c = CubicScalar::cbrt3();
    CHECK(c * c * c == CubicScalar::fromInt(3));
    CHECK(c * CubicScalar::cbrt3Inv() == CubicScalar::fromInt(1));
    for (int k = 0; k < 100; ++k) {
        CubicScalar x{Rat(randInt(-5, 5)), Rat(randInt(-5, 5), randInt(1, 3)),
                      Rat(randInt(-5, 5))};
        if (x.isZero()) continue;
        CHECK(x * x.inverse() == CubicScalar::fromInt(1));
    }
    CHECK(std::abs(c.toDouble() - std::cbrt(3.0)) < 1e-14);
}

TEST_CASE("polynomial arithmetic and exact division") {
    ZPolynomial z = ZPolynomial::z();
    ZPolynomial p = (z * z + ZPolynomial::constant(CubicScalar::fromInt(2))) *
                    (z - ZPolynomial::constant(CubicScalar::cbrt3()));
    CHECK(p.divideExact(z - ZPolynomial::constant(CubicScalar::cbrt3())) ==
          z * z + ZPolynomial::constant(CubicScalar::fromInt(2)));
    CHECK_THROWS_AS(p.divideExact(z + ZPolynomial::constant(CubicScalar::fromInt(1))),
                    IntegrityError);
    CHECK(p.deriv().degree() == 2);
    // evaluation consistency
    CubicScalar at = CubicScalar::fromRat(Rat(3, 2));
    CHECK(std::abs(p.evalExact(at).toDouble() - p.evalDouble(1.5)) < 1e-12);
}

TEST_CASE("recurrence table") {
    auto seq = yv_sequence(8);
    // degrees n(n+1)/2
    for (int n = 0; n <= 8; ++n) CHECK(seq[n].degree() == n * (n + 1) / 2);
    CHECK(seq[0] == ZPolynomial::constant(CubicScalar::cbrt3Inv()));
    CHECK(seq[1] == ZPolynomial::z());
    // Q2 = z^3 + 12
    ZPolynomial z = ZPolynomial::z();
    ZPolynomial q2 = z * z * z + ZPolynomial::constant(CubicScalar::fromInt(12));
    CHECK(seq[2] == q2);
    // Q3 = 3^(-1/3) (z^6 + 60 z^3 - 720)
    ZPolynomial inner =
        z * z * z * z * z * z + CubicScalar::fromInt(60) * (z * z * z) -
        ZPolynomial::constant(CubicScalar::fromInt(720));
    CHECK(seq[3] == CubicScalar::cbrt3Inv() * inner);
}

TEST_CASE("recurrence integrity guard") {
    auto seq = yv_sequence(2);
    // corrupt the divisor so the division cannot be exact
    ZPolynomial corrupted = seq[1] + ZPolynomial::constant(CubicScalar::fromInt(1));
    CHECK_THROWS_AS(yv_next(seq[2], corrupted), IntegrityError);
}

TEST_CASE("similarity tau descriptors") {
    for (int n = 0; n <= 5; ++n) {
        SimilarityTau tau = similarity_tau(n);
        CHECK(tau.n == n);
        CHECK(tau.prefactorExp == Rat(n * (n + 1), 6));
        CHECK(tau.q.degree() == n * (n + 1) / 2);
    }
}
