#ifndef TESTS_UTIL_HPP
#define TESTS_UTIL_HPP

#include <random>
#include <vector>

#include "supersol/solutions.hpp"
#include "supersol/superfield.hpp"

namespace testutil {

using namespace supersol;

inline std::mt19937& rng() {
    static std::mt19937 gen(20250825);
    return gen;
}

inline long randInt(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng());
}

inline double randReal(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng());
}

// small exact scalar, occasionally with imaginary or sqrt2 parts
inline Scalar randExactScalar() {
    Scalar s = Scalar::rational(randInt(-4, 4), randInt(1, 4));
    if (randInt(0, 2) == 0) s = s + Scalar::gaussian(Rat(0), Rat(randInt(-2, 2)));
    if (randInt(0, 3) == 0)
        s = s + Scalar::sqrt2Times(CRat{Rat(randInt(-2, 2)), Rat(0)});
    return s;
}

inline Scalar randScalar(Backend be) {
    if (be == Backend::Exact) return randExactScalar();
    return Scalar::fromDouble(randReal(-2.0, 2.0), randReal(-2.0, 2.0));
}

// generator pool of at most 6 distinct generators
inline std::vector<GeneratorId> genPool() {
    return {GeneratorId::thetaPlus(),  GeneratorId::thetaMinus(), GeneratorId::zeta(0),
            GeneratorId::zeta(1),      GeneratorId::thetaHatPlus(), GeneratorId::zetaHat(0)};
}

inline GrassmannNumber randGrassmann(Backend be, int maxTerms = 5, bool withBody = true) {
    auto pool = genPool();
    GrassmannNumber g(be);
    if (withBody) g = GrassmannNumber::fromScalar(randScalar(be));
    int terms = static_cast<int>(randInt(1, maxTerms));
    for (int t = 0; t < terms; ++t) {
        MonomialMask m = 0;
        int k = static_cast<int>(randInt(1, 3));
        for (int j = 0; j < k; ++j)
            m |= MonomialMask(1) << pool[randInt(0, static_cast<long>(pool.size()) - 1)].bit();
        g.addTerm(m, randScalar(be));
    }
    return g;
}

// random exponential-polynomial superfield over the theta/zeta pool
inline SuperExpr randSuperExpr(Backend be, int blocks = 2) {
    SuperExpr e = SuperExpr::zero(be);
    for (int b = 0; b < blocks; ++b) {
        LinearExponent ex{randScalar(be), randScalar(be)};
        e.addTerm(ex, static_cast<int>(randInt(0, 2)), static_cast<int>(randInt(0, 1)),
                  randGrassmann(be, 3));
    }
    return e;
}

// chiral exponent block kappa x + omega t + theta+ zeta_i + kappa theta+ theta-
inline SuperExpr chiralBlock(Backend be, const Scalar& kappa, const Scalar& omega, int zetaIdx) {
    SuperExpr e = SuperExpr::zero(be);
    LinearExponent zero{Scalar::zero(be), Scalar::zero(be)};
    e.addTerm(zero, 1, 0, GrassmannNumber::fromScalar(kappa));
    e.addTerm(zero, 0, 1, GrassmannNumber::fromScalar(omega));
    GrassmannNumber tp = GrassmannNumber::generator(GeneratorId::thetaPlus(), be);
    GrassmannNumber tm = GrassmannNumber::generator(GeneratorId::thetaMinus(), be);
    if (zetaIdx >= 0)
        e.addTerm(zero, 0, 0, tp * GrassmannNumber::generator(GeneratorId::zeta(zetaIdx), be));
    e.addTerm(zero, 0, 0, kappa * (tp * tm));
    return e;
}

// random D+-chiral rational field: P / (1 + Q) with P, Q sums of
// exponentials of chiral blocks (even coefficients in the denominator).
inline SuperRational randChiralField(Backend be) {
    SuperExpr num = SuperExpr::zero(be);
    SuperExpr den = SuperExpr::one(be);
    int nb = static_cast<int>(randInt(1, 2));
    for (int b = 0; b < nb; ++b) {
        Scalar kappa = be == Backend::Exact ? Scalar::rational(randInt(1, 3), randInt(1, 2))
                                            : Scalar::fromDouble(randReal(0.5, 2.0));
        Scalar omega = randScalar(be);
        SuperExpr blk = sf_exp(chiralBlock(be, kappa, omega, b));
        num += randScalar(be) * blk;
        den += (be == Backend::Exact ? Scalar::rational(randInt(1, 2), randInt(2, 3))
                                     : Scalar::fromDouble(randReal(0.1, 0.9))) *
               blk;
    }
    return SuperRational(num, {{den, 1}});
}

// hat-sector analogue (no plain or check generators), for the N=4 checks
inline SuperRational randHatChiralField(Backend be) {
    SuperExpr num = SuperExpr::zero(be);
    SuperExpr den = SuperExpr::one(be);
    LinearExponent zero{Scalar::zero(be), Scalar::zero(be)};
    int nb = static_cast<int>(randInt(1, 2));
    for (int b = 0; b < nb; ++b) {
        Scalar kappa = be == Backend::Exact ? Scalar::rational(randInt(1, 3), randInt(1, 2))
                                            : Scalar::fromDouble(randReal(0.5, 2.0));
        SuperExpr e = SuperExpr::zero(be);
        e.addTerm(zero, 1, 0, GrassmannNumber::fromScalar(kappa));
        e.addTerm(zero, 0, 1, GrassmannNumber::fromScalar(randScalar(be)));
        GrassmannNumber hp = GrassmannNumber::generator(GeneratorId::thetaHatPlus(), be);
        GrassmannNumber hm = GrassmannNumber::generator(GeneratorId::thetaHatMinus(), be);
        e.addTerm(zero, 0, 0, hp * GrassmannNumber::generator(GeneratorId::zetaHat(b), be));
        e.addTerm(zero, 0, 0, kappa * (hp * hm));
        SuperExpr blk = sf_exp(e);
        num += randScalar(be) * blk;
        den += (be == Backend::Exact ? Scalar::rational(randInt(1, 2), randInt(2, 3))
                                     : Scalar::fromDouble(randReal(0.1, 0.9))) *
               blk;
    }
    return SuperRational(num, {{den, 1}});
}

}  // namespace testutil

#endif
