#include "supersol/pde.hpp"

#include <cmath>
#include <iostream>

#include "supersol/errors.hpp"

namespace supersol {

namespace {

Scalar mkInt(Backend be, long n) {
    return be == Backend::Exact ? Scalar::fromInt(n)
                                : Scalar::fromDouble(static_cast<double>(n));
}

Scalar mkI(Backend be) {
    return be == Backend::Exact ? Scalar::i() : Scalar::fromDouble(0.0, 1.0);
}

SuperRational fd(const Field& f, Deriv d) { return f.derive(d).value(); }

SuperRational srd(const SuperRational& r, Deriv d) { return r.derive(d); }

// [dp, dm] a = dp(dm a) - dm(dp a)
SuperRational commutatorOf(const Field& a, Deriv dp, Deriv dm) {
    return srd(fd(a, dm), dp) - srd(fd(a, dp), dm);
}

SuperRational commutatorOf(const SuperRational& a, Deriv dp, Deriv dm) {
    return srd(srd(a, dm), dp) - srd(srd(a, dp), dm);
}

SuperRational smkdvShape(const Field& a, Deriv dp, Deriv dm) {
    Backend be = a.backend();
    SuperRational ax = fd(a, Deriv::Dx);
    SuperRational axxx = srd(srd(ax, Deriv::Dx), Deriv::Dx);
    SuperRational at = fd(a, Deriv::Dt);
    SuperRational comm = commutatorOf(a, dp, dm);
    return at + axxx + mkInt(be, 2) * (ax * ax * ax) +
           mkInt(be, 6) * (comm * comm * ax);
}

void warnIfNotChiral(const Field& a, Deriv chiralDeriv, const char* what) {
    // For log fields test the (equivalent up to constants) chirality of
    // the x-derivative instead.
    SuperRational probe = a.isPureValue() ? a.value() : fd(a, Deriv::Dx);
    if (sr_is_chiral(probe, chiralDeriv)) return;
    // the reduced equations are classical, so chirality in the plain
    // sector is just as good as in the hat one
    if (chiralDeriv == Deriv::DHatPlus && sr_is_chiral(probe, Deriv::DPlus)) return;
    std::cerr << "warning: " << what << " applied to a non-chiral field\n";
}

}  // namespace

SuperRational residual_full(const EquationSpec& spec, const Field& a) {
    Backend be = a.backend();
    switch (spec.id) {
        case EquationId::SKdV: {
            SuperRational av = a.value();
            SuperRational at = fd(a, Deriv::Dt);
            SuperRational axx = srd(srd(av, Deriv::Dx), Deriv::Dx);
            SuperRational comm = commutatorOf(a, Deriv::DPlus, Deriv::DMinus);
            SuperRational dpa = fd(a, Deriv::DPlus);
            SuperRational dma = fd(a, Deriv::DMinus);
            SuperRational oddComm = dpa * dma - dma * dpa;
            Scalar iu = mkI(be);
            SuperRational bracket = -axx + (iu * (spec.a + mkInt(be, 2))) * (av * comm) +
                                    (iu * (spec.a - mkInt(be, 1))) * oddComm +
                                    spec.a * (av * av * av);
            return at - srd(bracket, Deriv::Dx);
        }
        case EquationId::SmKdV:
            return smkdvShape(a, Deriv::DPlus, Deriv::DMinus);
        case EquationId::SB: {
            SuperRational av = a.value();
            SuperRational at = fd(a, Deriv::Dt);
            SuperRational comm = commutatorOf(a, Deriv::DPlus, Deriv::DMinus);
            SuperRational bracket = mkI(be) * comm + mkInt(be, 2) * (av * av);
            return at - srd(bracket, Deriv::Dx);
        }
        case EquationId::N4KdV: {
            SuperRational gx = fd(a, Deriv::Dx);
            SuperRational gxxx = srd(srd(gx, Deriv::Dx), Deriv::Dx);
            SuperRational gt = fd(a, Deriv::Dt);
            SuperRational commHat = commutatorOf(a, Deriv::DHatPlus, Deriv::DHatMinus);
            SuperRational inner = gx * commHat;
            SuperRational checkComm =
                commutatorOf(inner, Deriv::DCheckPlus, Deriv::DCheckMinus);
            return gt + gxxx + mkInt(be, 4) * (gx * gx * gx) +
                   mkInt(be, 6) * checkComm +
                   mkInt(be, 12) * (commHat * commHat * gx);
        }
    }
    throw Error("unknown equation");
}

SuperRational residual_reduced(const EquationSpec& spec, const Field& a) {
    Backend be = a.backend();
    warnIfNotChiral(a,
                    spec.id == EquationId::N4KdV ? Deriv::DHatPlus : Deriv::DPlus,
                    "reduced residual");
    switch (spec.id) {
        case EquationId::SKdV: {
            SuperRational av = a.value();
            SuperRational at = fd(a, Deriv::Dt);
            SuperRational ax = srd(av, Deriv::Dx);
            SuperRational axx = srd(ax, Deriv::Dx);
            SuperRational bracket = axx - (mkI(be) * (spec.a + mkInt(be, 2))) * (av * ax) -
                                    spec.a * (av * av * av);
            return at + srd(bracket, Deriv::Dx);
        }
        case EquationId::SmKdV: {
            SuperRational ax = fd(a, Deriv::Dx);
            SuperRational axxx = srd(srd(ax, Deriv::Dx), Deriv::Dx);
            return fd(a, Deriv::Dt) + axxx + mkInt(be, 8) * (ax * ax * ax);
        }
        case EquationId::SB: {
            SuperRational av = a.value();
            SuperRational at = fd(a, Deriv::Dt);
            SuperRational bracket = mkI(be) * srd(av, Deriv::Dx) + mkInt(be, 2) * (av * av);
            return at - srd(bracket, Deriv::Dx);
        }
        case EquationId::N4KdV: {
            SuperRational gx = fd(a, Deriv::Dx);
            SuperRational gxx = srd(gx, Deriv::Dx);
            SuperRational gxxx = srd(gxx, Deriv::Dx);
            return fd(a, Deriv::Dt) + gxxx + mkInt(be, 12) * (gx * gxx) +
                   mkInt(be, 16) * (gx * gx * gx);
        }
    }
    throw Error("unknown equation");
}

SuperRational residual_potential(const EquationSpec& spec, const Field& atilde) {
    Backend be = atilde.backend();
    SuperRational ax = fd(atilde, Deriv::Dx);
    SuperRational axx = srd(ax, Deriv::Dx);
    SuperRational at = fd(atilde, Deriv::Dt);
    switch (spec.id) {
        case EquationId::SKdV: {
            SuperRational axxx = srd(axx, Deriv::Dx);
            return at + axxx - (mkI(be) * (spec.a + mkInt(be, 2))) * (ax * axx) -
                   spec.a * (ax * ax * ax);
        }
        case EquationId::SB:
            return at - mkI(be) * axx - mkInt(be, 2) * (ax * ax);
        default:
            throw SchemaError("potential form exists for the KdV and Burgers extensions only");
    }
}

SuperExpr residual_linear(LinearForm which, const SuperExpr& h) {
    if (which == LinearForm::Dispersive) return h.dt() + h.dx().dx().dx();
    Scalar iu = mkI(h.backend());
    return h.dt() - iu * h.dx().dx();
}

std::pair<Scalar, Scalar> linearization_coefficients(const Scalar& a, const Scalar& beta) {
    Backend be = a.backend();
    Scalar iu = mkI(be);
    Scalar c1 = mkInt(be, 3) + iu * (mkInt(be, 2) + a) * beta;
    Scalar c2 = (beta - iu) * (a * beta - mkInt(be, 2) * iu);
    return {c1, c2};
}

Scalar bilinearization_cubic_coefficient(const Scalar& beta) {
    Backend be = beta.backend();
    return mkInt(be, 2) * (beta * beta + Scalar::one(be));
}

SuperExpr linearization_numerator(const Scalar& a, const Scalar& beta, const SuperExpr& h) {
    auto [c1, c2] = linearization_coefficients(a, beta);
    SuperExpr hx = h.dx();
    SuperExpr hxx = hx.dx();
    SuperExpr hxxx = hxx.dx();
    return h * h * (h.dt() + hxxx) - c1 * (h * hx * hxx) - c2 * (hx * hx * hx);
}

SuperRational residual_smkdv_hat(const Field& a) {
    return smkdvShape(a, Deriv::DHatPlus, Deriv::DHatMinus);
}

SuperRational sr_strip_check_sector(const SuperRational& r) {
    MonomialMask mask = checkSectorMask();
    std::vector<std::pair<SuperExpr, int>> den;
    den.reserve(r.den().size());
    for (const auto& [base, pow] : r.den()) den.emplace_back(base.stripGenerators(mask), pow);
    return SuperRational(r.num().stripGenerators(mask), std::move(den));
}

Field scale_field(const Scalar& c, const Field& f) {
    if (f.isPureValue()) return Field(c * f.value());
    std::vector<Field::LogTerm> logs;
    logs.reserve(f.logs().size());
    for (const auto& lt : f.logs()) logs.push_back({c * lt.coeff, lt.base});
    return Field::logField(std::move(logs));
}

N4ReductionReport n4_reduction_check(const Field& aHat, const Field& atilde) {
    N4ReductionReport rep;
    Backend be = aHat.backend();

    // (i) remove the check sector from the full N=4 residual of G = A/sqrt2
    // and compare with 1/sqrt2 times the hat-sector SmKdV residual of A.
    Scalar inv2 = Scalar::invSqrt2(be);
    SuperRational lhs = sr_strip_check_sector(
        residual_full(EquationSpec::n4kdv(be), scale_field(inv2, aHat)));
    SuperRational rhs = inv2 * residual_smkdv_hat(aHat);
    rep.fullMatches = be == Backend::Exact ? lhs.equals(rhs) : lhs.approxEquals(rhs);

    // (ii) G = -(i/12)(a+2) At maps the reduced N=4 equation onto the
    // potential KdV equation exactly at a = 1 and a = 4.
    Backend bt = atilde.backend();
    auto checkA = [&](long aVal) {
        Scalar c = -(mkI(bt) * (mkInt(bt, aVal) + mkInt(bt, 2))) *
                   (bt == Backend::Exact ? Scalar::rational(1, 12)
                                         : Scalar::fromDouble(1.0 / 12.0));
        SuperRational l = residual_reduced(EquationSpec::n4kdv(bt), scale_field(c, atilde));
        SuperRational r = c * residual_potential(EquationSpec::skdv(aVal, bt), atilde);
        return bt == Backend::Exact ? l.equals(r) : l.approxEquals(r);
    };
    rep.potentialMatchesA1 = checkA(1);
    rep.potentialMatchesA4 = checkA(4);
    return rep;
}

ResidualReport grid_residual(const EquationSpec& spec, const Field& a, ResidualForm form,
                             const std::vector<double>& xs, const std::vector<double>& ts) {
    SuperRational res = form == ResidualForm::Full       ? residual_full(spec, a)
                        : form == ResidualForm::Reduced  ? residual_reduced(spec, a)
                                                         : residual_potential(spec, a);
    ResidualReport rep;
    rep.equation = spec.id;
    rep.mode = ResidualReport::Mode::Grid;
    double maxAbs = 0.0;
    int sampled = 0;
    for (double t : ts) {
        for (double x : xs) {
            GrassmannNumber v;
            try {
                v = res.eval(Scalar::fromDouble(x), Scalar::fromDouble(t));
            } catch (const NotInvertibleError&) {
                ++rep.skipped;
                continue;
            }
            for (const auto& [m, c] : v.terms())
                maxAbs = std::max(maxAbs, std::abs(c.toComplex()));
            ++sampled;
        }
    }
    rep.gridMaxAbs = maxAbs;
    rep.pointsSampled = sampled;
    return rep;
}

}  // namespace supersol
