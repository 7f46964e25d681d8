#include "supersol/superfield.hpp"

#include <algorithm>
#include <sstream>

namespace supersol {

bool derivIsOdd(Deriv d) { return d != Deriv::Dx && d != Deriv::Dt; }

std::string derivName(Deriv d) {
    switch (d) {
        case Deriv::Dx: return "d/dx";
        case Deriv::Dt: return "d/dt";
        case Deriv::D1: return "D1";
        case Deriv::D2: return "D2";
        case Deriv::D3: return "D3";
        case Deriv::D4: return "D4";
        case Deriv::DPlus: return "D+";
        case Deriv::DMinus: return "D-";
        case Deriv::DHatPlus: return "D^+";
        case Deriv::DHatMinus: return "D^-";
        case Deriv::DCheckPlus: return "Dv+";
        case Deriv::DCheckMinus: return "Dv-";
    }
    return "?";
}

SuperExpr SuperExpr::fromScalar(const Scalar& s) {
    SuperExpr r(s.backend());
    r.addTerm({Scalar::zero(s.backend()), Scalar::zero(s.backend())}, 0, 0,
              GrassmannNumber::fromScalar(s));
    return r;
}

SuperExpr SuperExpr::fromGrassmann(const GrassmannNumber& g) {
    SuperExpr r(g.backend());
    r.addTerm({Scalar::zero(g.backend()), Scalar::zero(g.backend())}, 0, 0, g);
    return r;
}

SuperExpr SuperExpr::variableX(Backend b) {
    SuperExpr r(b);
    r.addTerm({Scalar::zero(b), Scalar::zero(b)}, 1, 0, GrassmannNumber::one(b));
    return r;
}

SuperExpr SuperExpr::variableT(Backend b) {
    SuperExpr r(b);
    r.addTerm({Scalar::zero(b), Scalar::zero(b)}, 0, 1, GrassmannNumber::one(b));
    return r;
}

SuperExpr SuperExpr::exponential(const LinearExponent& e) {
    Backend b = e.kappa.backend();
    SuperExpr r(b);
    r.addTerm(e, 0, 0, GrassmannNumber::one(b));
    return r;
}

void SuperExpr::addTerm(const LinearExponent& e, int degX, int degT, const GrassmannNumber& c) {
    if (c.backend() != backend_) throw BackendMismatchError("superfield term backend mismatch");
    if (c.isZero()) return;
    auto& poly = terms_[e];
    auto key = std::make_pair(degX, degT);
    auto it = poly.find(key);
    if (it == poly.end()) {
        poly.emplace(key, c);
    } else {
        it->second += c;
        if (it->second.isZero()) poly.erase(it);
    }
    if (poly.empty()) terms_.erase(e);
}

bool SuperExpr::isZero(double tol) const {
    for (const auto& [e, poly] : terms_)
        for (const auto& [k, c] : poly)
            if (!c.isZero(tol)) return false;
    return true;
}

Parity SuperExpr::parity() const {
    bool even = false, odd = false;
    for (const auto& [e, poly] : terms_)
        for (const auto& [k, c] : poly) {
            Parity p = c.parity();
            if (p == Parity::Even || p == Parity::Mixed) even = true;
            if (p == Parity::Odd || p == Parity::Mixed) odd = true;
        }
    if (even && odd) return Parity::Mixed;
    if (even) return Parity::Even;
    if (odd) return Parity::Odd;
    return Parity::Zero;
}

bool SuperExpr::hasInvertibleBody() const {
    LinearExponent z{Scalar::zero(backend_), Scalar::zero(backend_)};
    auto it = terms_.find(z);
    if (it == terms_.end()) return false;
    auto jt = it->second.find({0, 0});
    return jt != it->second.end() && !jt->second.body().isZero(0.0);
}

SuperExpr SuperExpr::dx() const {
    SuperExpr r(backend_);
    for (const auto& [e, poly] : terms_) {
        for (const auto& [k, c] : poly) {
            auto [nx, nt] = k;
            if (nx > 0) r.addTerm(e, nx - 1, nt, Scalar::fromInt(0).backend() == backend_
                                                     ? Scalar::fromInt(nx) * c
                                                     : Scalar::fromDouble(nx) * c);
            if (!e.kappa.isZero(0.0)) r.addTerm(e, nx, nt, e.kappa * c);
        }
    }
    return r;
}

SuperExpr SuperExpr::dt() const {
    SuperExpr r(backend_);
    for (const auto& [e, poly] : terms_) {
        for (const auto& [k, c] : poly) {
            auto [nx, nt] = k;
            if (nt > 0) r.addTerm(e, nx, nt - 1, Scalar::fromInt(0).backend() == backend_
                                                     ? Scalar::fromInt(nt) * c
                                                     : Scalar::fromDouble(nt) * c);
            if (!e.omega.isZero(0.0)) r.addTerm(e, nx, nt, e.omega * c);
        }
    }
    return r;
}

SuperExpr SuperExpr::thetaDeriv(GeneratorId g) const {
    SuperExpr r(backend_);
    for (const auto& [e, poly] : terms_)
        for (const auto& [k, c] : poly)
            r.addTerm(e, k.first, k.second, g_left_deriv(c, g));
    return r;
}

SuperExpr SuperExpr::grassmannMul(const GrassmannNumber& g) const {
    SuperExpr r(backend_);
    for (const auto& [e, poly] : terms_)
        for (const auto& [k, c] : poly)
            r.addTerm(e, k.first, k.second, g * c);
    return r;
}

namespace {

// D = (1/sqrt2)(d/d(thetaDn) + theta(up) * d/dx), the complex
// supercovariant derivative of one generator family.
SuperExpr complexCovariant(const SuperExpr& e, GeneratorId up, GeneratorId down) {
    Backend b = e.backend();
    SuperExpr r = e.thetaDeriv(down) + e.dx().grassmannMul(GrassmannNumber::generator(up, b));
    return Scalar::invSqrt2(b) * r;
}

// Real-basis D_k = d/d(theta_k) + theta_k d/dx expressed in the complex
// (plus/minus) generator pair of one family. theta1 = (p+m)/sqrt2,
// theta2 = -i(p-m)/sqrt2 give
//   D1 = (1/sqrt2)(dp+dm) + (1/sqrt2)(p+m) dx
//   D2 = (i/sqrt2)(dp-dm) - (i/sqrt2)(p-m) dx
SuperExpr realCovariant(const SuperExpr& e, int which, GeneratorId plus, GeneratorId minus) {
    Backend b = e.backend();
    Scalar inv = Scalar::invSqrt2(b);
    Scalar iu = b == Backend::Exact ? Scalar::i() : Scalar::fromDouble(0.0, 1.0);
    SuperExpr dp = e.thetaDeriv(plus);
    SuperExpr dm = e.thetaDeriv(minus);
    SuperExpr ex = e.dx();
    SuperExpr xp = ex.grassmannMul(GrassmannNumber::generator(plus, b));
    SuperExpr xm = ex.grassmannMul(GrassmannNumber::generator(minus, b));
    if (which == 1) return inv * (dp + dm + xp + xm);
    return (iu * inv) * (dp - dm) - (iu * inv) * (xp - xm);
}

}  // namespace

SuperExpr SuperExpr::derive(Deriv d) const {
    using G = GeneratorId;
    switch (d) {
        case Deriv::Dx: return dx();
        case Deriv::Dt: return dt();
        case Deriv::DPlus: return complexCovariant(*this, G::thetaPlus(), G::thetaMinus());
        case Deriv::DMinus: return complexCovariant(*this, G::thetaMinus(), G::thetaPlus());
        case Deriv::DHatPlus: return complexCovariant(*this, G::thetaHatPlus(), G::thetaHatMinus());
        case Deriv::DHatMinus: return complexCovariant(*this, G::thetaHatMinus(), G::thetaHatPlus());
        case Deriv::DCheckPlus: return complexCovariant(*this, G::thetaCheckPlus(), G::thetaCheckMinus());
        case Deriv::DCheckMinus: return complexCovariant(*this, G::thetaCheckMinus(), G::thetaCheckPlus());
        case Deriv::D1: return realCovariant(*this, 1, G::thetaPlus(), G::thetaMinus());
        case Deriv::D2: return realCovariant(*this, 2, G::thetaPlus(), G::thetaMinus());
        case Deriv::D3: return realCovariant(*this, 1, G::thetaCheckPlus(), G::thetaCheckMinus());
        case Deriv::D4: return realCovariant(*this, 2, G::thetaCheckPlus(), G::thetaCheckMinus());
    }
    throw IntegrityError("unreachable");
}

GrassmannNumber SuperExpr::eval(const Scalar& x, const Scalar& t) const {
    GrassmannNumber acc(backend_);
    for (const auto& [e, poly] : terms_) {
        Scalar arg = e.kappa * x + e.omega * t;
        Scalar expFactor;
        if (backend_ == Backend::Exact) {
            if (!arg.isZero(0.0))
                throw ExactUnsupportedError("exact evaluation of a nonzero exponent");
            expFactor = Scalar::one(backend_);
        } else {
            expFactor = Scalar(std::exp(arg.toComplex()));
        }
        for (const auto& [k, c] : poly) {
            Scalar mono = x.pow(k.first) * t.pow(k.second) * expFactor;
            acc += mono * c;
        }
    }
    return acc;
}

SuperExpr SuperExpr::stripGenerators(MonomialMask mask) const {
    SuperExpr r(backend_);
    for (const auto& [e, poly] : terms_)
        for (const auto& [k, c] : poly)
            r.addTerm(e, k.first, k.second, c.stripGenerators(mask));
    return r;
}

SuperExpr SuperExpr::renameBits(const std::vector<int>& bitMap) const {
    SuperExpr r(backend_);
    for (const auto& [e, poly] : terms_)
        for (const auto& [k, c] : poly)
            r.addTerm(e, k.first, k.second, c.renameBits(bitMap));
    return r;
}

SuperExpr SuperExpr::parityPart(int p) const {
    SuperExpr r(backend_);
    for (const auto& [e, poly] : terms_)
        for (const auto& [k, c] : poly)
            r.addTerm(e, k.first, k.second, c.parityPart(p));
    return r;
}

SuperExpr SuperExpr::parityFlip() const {
    SuperExpr r(backend_);
    for (const auto& [e, poly] : terms_)
        for (const auto& [k, c] : poly)
            r.addTerm(e, k.first, k.second, c.parityFlip());
    return r;
}

SuperExpr operator+(const SuperExpr& a, const SuperExpr& b) {
    if (a.backend_ != b.backend_) throw BackendMismatchError("sf_add backend mismatch");
    SuperExpr r = a;
    for (const auto& [e, poly] : b.terms_)
        for (const auto& [k, c] : poly) r.addTerm(e, k.first, k.second, c);
    return r;
}

SuperExpr operator-(const SuperExpr& a, const SuperExpr& b) { return a + (-b); }

SuperExpr operator-(const SuperExpr& a) {
    SuperExpr r(a.backend_);
    for (const auto& [e, poly] : a.terms_)
        for (const auto& [k, c] : poly) r.addTerm(e, k.first, k.second, -c);
    return r;
}

SuperExpr operator*(const Scalar& c, const SuperExpr& a) {
    SuperExpr r(a.backend_);
    for (const auto& [e, poly] : a.terms_)
        for (const auto& [k, g] : poly) r.addTerm(e, k.first, k.second, c * g);
    return r;
}

SuperExpr operator*(const SuperExpr& a, const SuperExpr& b) {
    if (a.backend_ != b.backend_) throw BackendMismatchError("sf_mul backend mismatch");
    SuperExpr r(a.backend_);
    for (const auto& [ea, pa] : a.terms_) {
        for (const auto& [eb, pb] : b.terms_) {
            LinearExponent e{ea.kappa + eb.kappa, ea.omega + eb.omega};
            for (const auto& [ka, ca] : pa)
                for (const auto& [kb, cb] : pb)
                    r.addTerm(e, ka.first + kb.first, ka.second + kb.second, ca * cb);
        }
    }
    return r;
}

bool SuperExpr::approxEqual(const SuperExpr& b, double tol) const {
    return (*this - b).isZero(tol);
}

int SuperExpr::compare(const SuperExpr& b) const {
    if (backend_ != b.backend_) return backend_ == Backend::Exact ? -1 : 1;
    auto ia = terms_.begin();
    auto ib = b.terms_.begin();
    for (; ia != terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
        if (int c = ia->first.kappa.compare(ib->first.kappa)) return c;
        if (int c = ia->first.omega.compare(ib->first.omega)) return c;
        auto ja = ia->second.begin();
        auto jb = ib->second.begin();
        for (; ja != ia->second.end() && jb != ib->second.end(); ++ja, ++jb) {
            if (ja->first != jb->first) return ja->first < jb->first ? -1 : 1;
            auto ka = ja->second.terms().begin();
            auto kb = jb->second.terms().begin();
            for (; ka != ja->second.terms().end() && kb != jb->second.terms().end(); ++ka, ++kb) {
                if (ka->first != kb->first) return ka->first < kb->first ? -1 : 1;
                if (int c = ka->second.compare(kb->second)) return c;
            }
            if (ka != ja->second.terms().end()) return 1;
            if (kb != jb->second.terms().end()) return -1;
        }
        if (ja != ia->second.end()) return 1;
        if (jb != ib->second.end()) return -1;
    }
    if (ia != terms_.end()) return 1;
    if (ib != b.terms_.end()) return -1;
    return 0;
}

std::string SuperExpr::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool firstTerm = true;
    for (const auto& [e, poly] : terms_) {
        for (const auto& [k, c] : poly) {
            if (!firstTerm) os << " + ";
            firstTerm = false;
            os << "[" << c.str() << "]";
            if (k.first) os << "·x" << (k.first > 1 ? "^" + std::to_string(k.first) : "");
            if (k.second) os << "·t" << (k.second > 1 ? "^" + std::to_string(k.second) : "");
            if (!e.kappa.isZero(0.0) || !e.omega.isZero(0.0))
                os << "·exp((" << e.kappa.str() << ")x + (" << e.omega.str() << ")t)";
        }
    }
    return os.str();
}

SuperExpr sf_exp(const SuperExpr& e) {
    Backend be = e.backend();
    Scalar kappa = Scalar::zero(be);
    Scalar omega = Scalar::zero(be);
    GrassmannNumber c0(be);
    for (const auto& [ex, poly] : e.terms()) {
        if (!ex.kappa.isZero(0.0) || !ex.omega.isZero(0.0))
            throw UnsupportedExponentError("exp argument must be polynomial, not exponential");
        for (const auto& [k, c] : poly) {
            if (k == std::make_pair(0, 0)) {
                c0 += c;
            } else if (k == std::make_pair(1, 0) || k == std::make_pair(0, 1)) {
                if (!c.soul().isZero())
                    throw UnsupportedExponentError("exp argument has soul-valued linear coefficient");
                (k.first == 1 ? kappa : omega) += c.body();
            } else {
                throw UnsupportedExponentError("exp argument must be linear in x and t");
            }
        }
    }
    Scalar pref = Scalar::one(be);
    Scalar b0 = c0.body();
    if (!b0.isZero(0.0)) {
        if (be == Backend::Exact)
            throw ExactUnsupportedError("exp of nonzero constant body needs the float backend");
        pref = Scalar(std::exp(b0.toComplex()));
    }
    GrassmannNumber g = pref * g_analytic(AnalyticFn::Exp, c0.soul());
    SuperExpr r(be);
    r.addTerm({kappa, omega}, 0, 0, g);
    return r;
}

bool sf_is_chiral(const SuperExpr& e, Deriv d) { return e.derive(d).isZero(); }

// ---------------------------------------------------------------------------
// SuperRational

SuperRational::SuperRational(SuperExpr num, std::vector<std::pair<SuperExpr, int>> den)
    : num_(std::move(num)) {
    for (auto& [base, pow] : den) {
        if (pow == 0) continue;
        if (pow < 0) throw IntegrityError("negative denominator power");
        Parity p = base.parity();
        if (p == Parity::Odd || p == Parity::Mixed)
            throw ParityError("denominator must have even parity");
        if (!base.hasInvertibleBody())
            throw NotInvertibleError("denominator must have an invertible body term");
        den_.emplace_back(std::move(base), pow);
    }
    std::sort(den_.begin(), den_.end(),
              [](const auto& a, const auto& b) { return a.first.compare(b.first) < 0; });
    // merge equal bases
    std::vector<std::pair<SuperExpr, int>> merged;
    for (auto& f : den_) {
        if (!merged.empty() && merged.back().first.compare(f.first) == 0)
            merged.back().second += f.second;
        else
            merged.push_back(std::move(f));
    }
    den_ = std::move(merged);
}

SuperExpr SuperRational::denProduct() const {
    SuperExpr d = SuperExpr::one(backend());
    for (const auto& [base, pow] : den_)
        for (int i = 0; i < pow; ++i) d = d * base;
    return d;
}

SuperRational SuperRational::derive(Deriv d) const {
    // d(N / prod B_i^{p_i}) with even bases:
    //   num' = d(N~) * prod B_i - N~' * sum_i p_i d(B_i) prod_{j != i} B_j
    // where N~ = N and N~' = N for even derivations, and N~ = N,
    // N~' = parityFlip(N) for odd ones (graded product rule).
    SuperExpr dn = num_.derive(d);
    SuperExpr nSigned = derivIsOdd(d) ? num_.parityFlip() : num_;

    SuperExpr prodAll = SuperExpr::one(backend());
    for (const auto& [base, pow] : den_) prodAll = prodAll * base;

    SuperExpr acc = dn * prodAll;
    for (size_t i = 0; i < den_.size(); ++i) {
        SuperExpr rest = SuperExpr::one(backend());
        for (size_t j = 0; j < den_.size(); ++j)
            if (j != i) rest = rest * den_[j].first;
        Scalar p = backend() == Backend::Exact ? Scalar::fromInt(den_[i].second)
                                               : Scalar::fromDouble(den_[i].second);
        acc -= p * (nSigned * den_[i].first.derive(d) * rest);
    }

    std::vector<std::pair<SuperExpr, int>> nd = den_;
    for (auto& [base, pow] : nd) ++pow;
    return SuperRational(std::move(acc), std::move(nd));
}

namespace {

// union denominator and the complement factors each numerator needs
std::vector<std::pair<SuperExpr, int>> denUnion(
    const std::vector<std::pair<SuperExpr, int>>& a,
    const std::vector<std::pair<SuperExpr, int>>& b) {
    std::vector<std::pair<SuperExpr, int>> u;
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first.compare(b[j].first) < 0)) {
            u.push_back(a[i++]);
        } else if (i == a.size() || b[j].first.compare(a[i].first) < 0) {
            u.push_back(b[j++]);
        } else {
            u.emplace_back(a[i].first, std::max(a[i].second, b[j].second));
            ++i;
            ++j;
        }
    }
    return u;
}

SuperExpr complementProduct(const std::vector<std::pair<SuperExpr, int>>& u,
                            const std::vector<std::pair<SuperExpr, int>>& own, Backend be) {
    SuperExpr c = SuperExpr::one(be);
    size_t j = 0;
    for (const auto& [base, pow] : u) {
        int have = 0;
        if (j < own.size() && own[j].first.compare(base) == 0) have = own[j++].second;
        for (int k = 0; k < pow - have; ++k) c = c * base;
    }
    return c;
}

}  // namespace

SuperRational operator+(const SuperRational& a, const SuperRational& b) {
    if (a.backend() != b.backend()) throw BackendMismatchError("sr_add backend mismatch");
    auto u = denUnion(a.den(), b.den());
    SuperExpr na = a.num() * complementProduct(u, a.den(), a.backend());
    SuperExpr nb = b.num() * complementProduct(u, b.den(), b.backend());
    return SuperRational(na + nb, std::move(u));
}

SuperRational operator-(const SuperRational& a, const SuperRational& b) { return a + (-b); }

SuperRational operator-(const SuperRational& a) {
    return SuperRational(-a.num(), a.den());
}

SuperRational operator*(const SuperRational& a, const SuperRational& b) {
    if (a.backend() != b.backend()) throw BackendMismatchError("sr_mul backend mismatch");
    auto d = a.den();
    d.insert(d.end(), b.den().begin(), b.den().end());
    return SuperRational(a.num() * b.num(), std::move(d));
}

SuperRational operator*(const Scalar& c, const SuperRational& a) {
    return SuperRational(c * a.num(), a.den());
}

SuperRational SuperRational::pow(int n) const {
    if (n < 0) throw IntegrityError("negative SuperRational power");
    SuperRational r(SuperExpr::one(backend()));
    for (int i = 0; i < n; ++i) r = r * *this;
    return r;
}

bool SuperRational::equals(const SuperRational& b) const {
    return (num_ * b.denProduct() - b.num() * denProduct()).isZero();
}

bool SuperRational::approxEquals(const SuperRational& b, double tol) const {
    return (num_ * b.denProduct() - b.num() * denProduct()).isZero(tol);
}

GrassmannNumber SuperRational::eval(const Scalar& x, const Scalar& t) const {
    GrassmannNumber n = num_.eval(x, t);
    GrassmannNumber d = denProduct().eval(x, t);
    return n * g_inv(d);
}

std::string SuperRational::str() const {
    std::ostringstream os;
    os << "(" << num_.str() << ")";
    for (const auto& [base, pow] : den_)
        os << " / (" << base.str() << ")^" << pow;
    return os.str();
}

bool sr_is_chiral(const SuperRational& r, Deriv d) { return r.derive(d).isZero(); }

// ---------------------------------------------------------------------------
// Field

Field Field::logField(std::vector<LogTerm> logs) {
    Field f;
    for (auto& lt : logs) {
        Parity p = lt.base.parity();
        if (p == Parity::Odd || p == Parity::Mixed)
            throw ParityError("log base must have even parity");
        if (!lt.base.hasInvertibleBody())
            throw NotInvertibleError("log base must have an invertible body");
    }
    f.logs_ = std::move(logs);
    return f;
}

Backend Field::backend() const {
    if (value_) return value_->backend();
    if (!logs_.empty()) return logs_.front().base.backend();
    return Backend::Exact;
}

const SuperRational& Field::value() const {
    if (!logs_.empty())
        throw ParityError("log field has no materialized value; differentiate first");
    if (!value_) throw IntegrityError("empty field");
    return *value_;
}

Field Field::derive(Deriv d) const {
    SuperRational acc = value_ ? value_->derive(d) : SuperRational::zero(backend());
    for (const auto& lt : logs_) {
        SuperRational term(lt.coeff * lt.base.derive(d), {{lt.base, 1}});
        acc += term;
    }
    return Field(std::move(acc));
}

}  // namespace supersol
