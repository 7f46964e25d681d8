#include "supersol/solutions.hpp"

#include <bit>

namespace supersol {

namespace {

Scalar imagUnit(Backend be) {
    return be == Backend::Exact ? Scalar::i() : Scalar::fromDouble(0.0, 1.0);
}

Scalar half(Backend be) {
    return be == Backend::Exact ? Scalar::rational(1, 2) : Scalar::fromDouble(0.5);
}

}  // namespace

EquationSpec EquationSpec::skdv(long aValue, Backend be) {
    if (aValue != -2 && aValue != 1 && aValue != 4)
        throw SchemaError("SKdV_a is only integrable for a in {-2, 1, 4}");
    EquationSpec s;
    s.id = EquationId::SKdV;
    s.a = be == Backend::Exact ? Scalar::fromInt(aValue)
                               : Scalar::fromDouble(static_cast<double>(aValue));
    s.beta = aValue == 4 ? imagUnit(be) * half(be) : imagUnit(be);
    return s;
}

EquationSpec EquationSpec::smkdv(Backend be) {
    EquationSpec s;
    s.id = EquationId::SmKdV;
    s.a = Scalar::zero(be);
    s.beta = imagUnit(be) * half(be);  // A = (i/2) log(tau1/tau2)
    return s;
}

EquationSpec EquationSpec::sb(Backend be) {
    EquationSpec s;
    s.id = EquationId::SB;
    s.a = Scalar::zero(be);
    s.beta = imagUnit(be) * half(be);
    return s;
}

EquationSpec EquationSpec::n4kdv(Backend be) {
    EquationSpec s;
    s.id = EquationId::N4KdV;
    s.a = Scalar::zero(be);
    s.beta = be == Backend::Exact ? Scalar::rational(1, 4) : Scalar::fromDouble(0.25);
    return s;
}

SolitonParams SolitonParams::exactSolitons(const std::vector<Rat>& kappas, bool fermionic) {
    SolitonParams p;
    p.backend = Backend::Exact;
    for (size_t i = 0; i < kappas.size(); ++i) {
        One s;
        s.kappa = Scalar::fromRat(kappas[i]);
        s.amp = Scalar::fromInt(1);
        if (fermionic) s.zeta = GeneratorId::zeta(static_cast<int>(i));
        s.lambda = Scalar::zero(Backend::Exact);
        p.solitons.push_back(std::move(s));
    }
    return p;
}

Scalar dispersion_omega(const EquationSpec& spec, const Scalar& kappa) {
    if (spec.id == EquationId::SB) return imagUnit(kappa.backend()) * kappa * kappa;
    return -(kappa * kappa * kappa);
}

SuperExpr make_psi(const EquationSpec& spec, const SolitonParams& p, int i) {
    Backend be = p.backend;
    const auto& s = p.solitons.at(i);
    Scalar omega = dispersion_omega(spec, s.kappa);
    SuperExpr e = SuperExpr::zero(be);
    LinearExponent zero{Scalar::zero(be), Scalar::zero(be)};
    e.addTerm(zero, 1, 0, GrassmannNumber::fromScalar(s.kappa));
    e.addTerm(zero, 0, 1, GrassmannNumber::fromScalar(omega));
    GrassmannNumber tp = GrassmannNumber::generator(GeneratorId::thetaPlus(), be);
    GrassmannNumber tm = GrassmannNumber::generator(GeneratorId::thetaMinus(), be);
    if (s.zeta) {
        GrassmannNumber z = GrassmannNumber::generator(*s.zeta, be);
        e.addTerm(zero, 0, 0, tp * z);
    }
    e.addTerm(zero, 0, 0, s.kappa * (tp * tm));
    return e;
}

Scalar interaction_coeff(const Scalar& ki, const Scalar& kj) {
    Scalar sum = ki + kj;
    if (sum.isZero(0.0)) throw PoleError("kappa_i + kappa_j = 0 in interaction coefficient");
    Scalar r = (ki - kj) / sum;
    return r * r;
}

std::pair<SuperExpr, SuperExpr> make_tau_pair(
    const EquationSpec& spec, const SolitonParams& p,
    const std::map<std::pair<int, int>, Scalar>& interactionOverride) {
    Backend be = p.backend;
    int n = p.n();
    auto aij = [&](int i, int j) {
        auto it = interactionOverride.find({i, j});
        if (it != interactionOverride.end()) return it->second;
        return interaction_coeff(p.solitons[i].kappa, p.solitons[j].kappa);
    };
    SuperExpr t1 = SuperExpr::zero(be);
    SuperExpr t2 = SuperExpr::zero(be);
    for (unsigned subset = 0; subset < (1u << n); ++subset) {
        Scalar coeff = Scalar::one(be);
        SuperExpr expo = SuperExpr::zero(be);
        for (int i = 0; i < n; ++i) {
            if (!(subset >> i & 1)) continue;
            coeff *= p.solitons[i].amp;
            expo += make_psi(spec, p, i);
            for (int j = i + 1; j < n; ++j)
                if (subset >> j & 1) coeff *= aij(i, j);
        }
        SuperExpr term = coeff * sf_exp(expo);
        t1 += term;
        t2 += (std::popcount(subset) % 2) ? -term : term;
    }
    return {t1, t2};
}

SuperExpr make_virtual_h(const EquationSpec& spec, const SolitonParams& p) {
    Backend be = p.backend;
    SuperExpr h = SuperExpr::one(be);
    for (int i = 0; i < p.n(); ++i)
        h += p.solitons[i].amp * sf_exp(make_psi(spec, p, i));
    return h;
}

SuperRational solution_from_h(const EquationSpec& spec, const SuperExpr& h) {
    Parity par = h.parity();
    if (par == Parity::Odd || par == Parity::Mixed)
        throw ParityError("H must be an even superfield");
    return SuperRational(spec.beta * h.dx(), {{h, 1}});
}

Field log_ratio_field(const SuperExpr& t1, const SuperExpr& t2, const Scalar& beta) {
    return Field::logField({{beta, t1}, {-beta, t2}});
}

ComponentSample extract_components_at(const GrassmannNumber& value) {
    Parity par = value.parity();
    if (par == Parity::Odd || par == Parity::Mixed)
        throw ParityError("component extraction needs an even superfield value");
    ComponentSample out;
    out.u = value.body().toComplex();
    MonomialMask tp = MonomialMask(1) << GeneratorId::thetaPlus().bit();
    MonomialMask tm = MonomialMask(1) << GeneratorId::thetaMinus().bit();
    // A = ... + i theta+ theta- v
    std::complex<double> iunit(0.0, 1.0);
    out.v = value.coeff(tp | tm).toComplex() / iunit;
    for (int i = 0; i < GeneratorId::kMaxZetaIndex; ++i) {
        MonomialMask z = MonomialMask(1) << GeneratorId::zeta(i).bit();
        Scalar cm = value.coeff(tp | z);
        Scalar cp = value.coeff(tm | z);
        if (!cm.isZero(0.0)) out.fMinus[i] = cm.toComplex();
        if (!cp.isZero(0.0)) out.fPlus[i] = cp.toComplex();
    }
    return out;
}

ComponentSample extract_components_at(const SuperRational& A, double x, double t) {
    return extract_components_at(
        A.eval(Scalar::fromDouble(x), Scalar::fromDouble(t)));
}

VirtualComponents closed_form_virtual_components(const EquationSpec& spec,
                                                 const SolitonParams& p, double x,
                                                 double t) {
    int n = p.n();
    std::vector<std::complex<double>> e(n);
    std::complex<double> s0 = 1.0, s1 = 0.0;
    for (int i = 0; i < n; ++i) {
        std::complex<double> kappa = p.solitons[i].kappa.toComplex();
        std::complex<double> omega = dispersion_omega(spec, p.solitons[i].kappa).toComplex();
        e[i] = p.solitons[i].amp.toComplex() * std::exp(kappa * x + omega * t);
        s0 += e[i];
        s1 += p.solitons[i].kappa.toComplex() * e[i];
    }
    if (std::abs(s0) < 1e-300) throw SingularPointError("vanishing denominator in closed form");
    VirtualComponents out;
    out.u = spec.beta.toComplex() * s1 / s0;
    out.f.resize(n);
    for (int i = 0; i < n; ++i) {
        std::complex<double> ki = p.solitons[i].kappa.toComplex();
        std::complex<double> num = ki * e[i];
        for (int j = 0; j < n; ++j)
            num += (ki - p.solitons[j].kappa.toComplex()) * e[i] * e[j];
        out.f[i] = num / (s0 * s0);
    }
    return out;
}

SuperExpr make_n4_phi(const SolitonParams& p, int i) {
    Backend be = p.backend;
    const auto& s = p.solitons.at(i);
    GrassmannNumber hp = GrassmannNumber::generator(GeneratorId::thetaHatPlus(), be);
    GrassmannNumber hm = GrassmannNumber::generator(GeneratorId::thetaHatMinus(), be);
    GrassmannNumber cp = GrassmannNumber::generator(GeneratorId::thetaCheckPlus(), be);
    GrassmannNumber cm = GrassmannNumber::generator(GeneratorId::thetaCheckMinus(), be);
    GrassmannNumber acc(be);
    if (s.zetaHat) acc += hp * GrassmannNumber::generator(*s.zetaHat, be);
    if (s.zetaCheck) acc += cp * GrassmannNumber::generator(*s.zetaCheck, be);
    acc += s.kappa * (hp * hm + cp * cm);
    acc += s.lambda * (hp * cp);
    return SuperExpr::fromGrassmann(acc);
}

SuperExpr make_n4_upsilon(const SolitonParams& p) {
    Backend be = p.backend;
    EquationSpec spec = EquationSpec::n4kdv(be);
    SuperExpr u = SuperExpr::one(be);
    for (int i = 0; i < p.n(); ++i) {
        const auto& s = p.solitons[i];
        SuperExpr expo = make_n4_phi(p, i);
        LinearExponent zero{Scalar::zero(be), Scalar::zero(be)};
        expo.addTerm(zero, 1, 0, GrassmannNumber::fromScalar(s.kappa));
        expo.addTerm(zero, 0, 1, GrassmannNumber::fromScalar(dispersion_omega(spec, s.kappa)));
        u += sf_exp(expo);
    }
    return u;
}

std::vector<int> hatToPlainBitMap() {
    std::vector<int> map(64, -1);
    map[GeneratorId::thetaHatPlus().bit()] = GeneratorId::thetaPlus().bit();
    map[GeneratorId::thetaHatMinus().bit()] = GeneratorId::thetaMinus().bit();
    for (int i = 0; i < GeneratorId::kMaxZetaIndex; ++i)
        map[GeneratorId::zetaHat(i).bit()] = GeneratorId::zeta(i).bit();
    return map;
}

MonomialMask checkSectorMask() {
    MonomialMask m = 0;
    m |= MonomialMask(1) << GeneratorId::thetaCheckPlus().bit();
    m |= MonomialMask(1) << GeneratorId::thetaCheckMinus().bit();
    for (int i = 0; i < GeneratorId::kMaxZetaIndex; ++i)
        m |= MonomialMask(1) << GeneratorId::zetaCheck(i).bit();
    return m;
}

MonomialMask checkPlusMask() {
    return MonomialMask(1) << GeneratorId::thetaCheckPlus().bit();
}

}  // namespace supersol
