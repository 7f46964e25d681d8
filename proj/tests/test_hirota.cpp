#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "supersol/hirota.hpp"
#include "supersol/solutions.hpp"
#include "util.hpp"

using namespace supersol;
using namespace testutil;

TEST_CASE("first order bilinear derivative is the Wronskian combination") {
    for (int k = 0; k < 20; ++k) {
        SuperExpr f = randSuperExpr(Backend::Exact);
        SuperExpr g = randSuperExpr(Backend::Exact);
        CHECK(hirota_d(f, g, {1, 0}) == f.dx() * g - f * g.dx());
        CHECK(hirota_d(f, g, {0, 1}) == f.dt() * g - f * g.dt());
        CHECK(hirota_d(f, g, {2, 0}) ==
              f.dx().dx() * g - Scalar::fromInt(2) * (f.dx() * g.dx()) + f * g.dx().dx());
    }
}

TEST_CASE("odd orders vanish on equal even arguments") {
    for (int k = 0; k < 10; ++k) {
        SuperExpr f = randSuperExpr(Backend::Exact).parityPart(0);
        CHECK(hirota_d(f, f, {1, 0}).isZero());
        CHECK(hirota_d(f, f, {3, 0}).isZero());
        CHECK(hirota_d(f, f, {1, 1}) == hirota_d(f, f, {1, 1}));  // well defined
    }
}

TEST_CASE("exponential eigenvalue identity") {
    // D_x^n (e^{k1 x} . e^{k2 x}) = (k1-k2)^n e^{(k1+k2) x}
    Backend be = Backend::Exact;
    Scalar k1 = Scalar::rational(5, 3), k2 = Scalar::rational(1, 2);
    SuperExpr e1 = SuperExpr::exponential({k1, Scalar::zero(be)});
    SuperExpr e2 = SuperExpr::exponential({k2, Scalar::zero(be)});
    SuperExpr sum = SuperExpr::exponential({k1 + k2, Scalar::zero(be)});
    for (int n = 0; n <= 4; ++n) {
        Scalar c = (k1 - k2).pow(n);
        CHECK(hirota_d(e1, e2, {n, 0}) == c * sum);
    }
}

TEST_CASE("one soliton tau pair satisfies the bilinear system") {
    EquationSpec spec = EquationSpec::smkdv(Backend::Exact);
    SolitonParams p = SolitonParams::exactSolitons({Rat(4, 3)});
    auto [t1, t2] = make_tau_pair(spec, p);
    auto [r1, r2] = mkdv_bilinear_residuals(t1, t2);
    CHECK(r1.isZero());
    CHECK(r2.isZero());
}

TEST_CASE("bilinear system fails off shell") {
    // wrong dispersion: omega = +kappa^3
    Backend be = Backend::Exact;
    Scalar kappa = Scalar::fromInt(1);
    SuperExpr psi = chiralBlock(be, kappa, kappa.pow(3), 0);
    SuperExpr t1 = SuperExpr::one(be) + sf_exp(psi);
    SuperExpr t2 = SuperExpr::one(be) - sf_exp(psi);
    auto [r1, r2] = mkdv_bilinear_residuals(t1, t2);
    CHECK_FALSE(r1.isZero());
    CHECK(r2.isZero());  // D_x^2 does not see the time dependence
}

TEST_CASE("z-domain bilinear derivative on polynomials") {
    ZPolynomial z = ZPolynomial::z();
    ZPolynomial z2 = z * z;
    // D_z(z . z^2) = z'. z^2 - z . 2z = z^2 - 2z^2 = -z^2
    CHECK(hirota_dz(z, z2, 1) == -CubicScalar::fromInt(1) * z2);
    // D_z^2(f.f) = 2(f'' f - f'^2): for f = z^2 it is 2(2z^2 - 4z^2) = -4z^2
    CHECK(hirota_dz(z2, z2, 2) == -CubicScalar::fromInt(4) * z2);
}

TEST_CASE("consecutive polynomial pairs satisfy their bilinear identities") {
    auto seq = yv_sequence(4);
    for (int n = 0; n + 1 <= 4; ++n) {
        auto [r1, r2] = yv_bilinear_residuals(seq[n], seq[n + 1], n);
        CHECK(r1.isZero());
        CHECK(r2.isZero());
    }
    // negative control: a non-consecutive pair fails
    auto [b1, b2] = yv_bilinear_residuals(seq[0], seq[2], 0);
    CHECK_FALSE(b1.isZero());
}
