#include "supersol/grassmann.hpp"

#include <bit>
#include <sstream>

namespace supersol {

namespace {
constexpr int kThetaCount = 6;
constexpr int kZetaBase = kThetaCount;
}  // namespace

int GeneratorId::bit() const {
    switch (kind) {
        case GenKind::ThetaPlus: return 0;
        case GenKind::ThetaMinus: return 1;
        case GenKind::ThetaHatPlus: return 2;
        case GenKind::ThetaHatMinus: return 3;
        case GenKind::ThetaCheckPlus: return 4;
        case GenKind::ThetaCheckMinus: return 5;
        case GenKind::Zeta: break;
        case GenKind::ZetaHat: break;
        case GenKind::ZetaCheck: break;
    }
    if (index < 0 || index >= kMaxZetaIndex)
        throw IntegrityError("zeta generator index out of range");
    int family = static_cast<int>(kind) - static_cast<int>(GenKind::Zeta);
    return kZetaBase + family * kMaxZetaIndex + index;
}

GeneratorId GeneratorId::fromBit(int bit) {
    if (bit < kThetaCount) return {static_cast<GenKind>(bit), 0};
    int z = bit - kZetaBase;
    int family = z / kMaxZetaIndex;
    return {static_cast<GenKind>(static_cast<int>(GenKind::Zeta) + family), z % kMaxZetaIndex};
}

std::string GeneratorId::name() const {
    switch (kind) {
        case GenKind::ThetaPlus: return "θ+";
        case GenKind::ThetaMinus: return "θ-";
        case GenKind::ThetaHatPlus: return "θ^+";
        case GenKind::ThetaHatMinus: return "θ^-";
        case GenKind::ThetaCheckPlus: return "θv+";
        case GenKind::ThetaCheckMinus: return "θv-";
        case GenKind::Zeta: return "ζ" + std::to_string(index + 1);
        case GenKind::ZetaHat: return "ζ^" + std::to_string(index + 1);
        case GenKind::ZetaCheck: return "ζv" + std::to_string(index + 1);
    }
    return "?";
}

std::vector<GeneratorId> monomialGenerators(MonomialMask m) {
    std::vector<GeneratorId> out;
    while (m) {
        int b = std::countr_zero(m);
        m &= m - 1;
        out.push_back(GeneratorId::fromBit(b));
    }
    return out;
}

std::string monomialName(MonomialMask m) {
    if (m == 0) return "1";
    std::string s;
    for (const auto& g : monomialGenerators(m)) {
        if (!s.empty()) s += "·";
        s += g.name();
    }
    return s;
}

int monomialMergeSign(MonomialMask a, MonomialMask b) {
    int inv = 0;
    MonomialMask rest = b;
    while (rest) {
        int g = std::countr_zero(rest);
        rest &= rest - 1;
        // generators of a above position g must be crossed
        inv += std::popcount(a >> (g + 1));
    }
    return inv & 1;
}

GrassmannNumber GrassmannNumber::fromScalar(const Scalar& s) {
    GrassmannNumber r(s.backend());
    r.addTerm(0, s);
    return r;
}

GrassmannNumber GrassmannNumber::generator(GeneratorId g, Backend b) {
    GrassmannNumber r(b);
    r.addTerm(MonomialMask(1) << g.bit(), Scalar::one(b));
    return r;
}

GrassmannNumber GrassmannNumber::monomial(MonomialMask m, const Scalar& coeff) {
    GrassmannNumber r(coeff.backend());
    r.addTerm(m, coeff);
    return r;
}

void GrassmannNumber::addTerm(MonomialMask m, const Scalar& c) {
    if (c.backend() != backend_) throw BackendMismatchError("term backend differs from number backend");
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        if (!c.isZero(0.0)) terms_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second.isZero(0.0)) terms_.erase(it);
}

bool GrassmannNumber::isZero(double tol) const {
    for (const auto& [m, c] : terms_)
        if (!c.isZero(tol)) return false;
    return true;
}

Scalar GrassmannNumber::body() const { return coeff(0); }

Scalar GrassmannNumber::coeff(MonomialMask m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar::zero(backend_) : it->second;
}

GrassmannNumber GrassmannNumber::soul() const {
    GrassmannNumber r(backend_);
    for (const auto& [m, c] : terms_)
        if (m != 0) r.terms_.emplace(m, c);
    return r;
}

Parity GrassmannNumber::parity() const {
    if (terms_.empty()) return Parity::Zero;
    bool even = false, odd = false;
    for (const auto& [m, c] : terms_)
        (std::popcount(m) % 2 ? odd : even) = true;
    if (even && odd) return Parity::Mixed;
    return odd ? Parity::Odd : Parity::Even;
}

GrassmannNumber GrassmannNumber::parityPart(int p) const {
    GrassmannNumber r(backend_);
    for (const auto& [m, c] : terms_)
        if (std::popcount(m) % 2 == p) r.terms_.emplace(m, c);
    return r;
}

GrassmannNumber GrassmannNumber::parityFlip() const {
    GrassmannNumber r(backend_);
    for (const auto& [m, c] : terms_)
        r.terms_.emplace(m, std::popcount(m) % 2 ? -c : c);
    return r;
}

GrassmannNumber GrassmannNumber::stripGenerators(MonomialMask mask) const {
    GrassmannNumber r(backend_);
    for (const auto& [m, c] : terms_)
        if ((m & mask) == 0) r.terms_.emplace(m, c);
    return r;
}

GrassmannNumber GrassmannNumber::renameBits(const std::vector<int>& bitMap) const {
    GrassmannNumber r(backend_);
    for (const auto& [m, c] : terms_) {
        MonomialMask nm = 0;
        int prev = -1;
        MonomialMask rest = m;
        while (rest) {
            int b = std::countr_zero(rest);
            rest &= rest - 1;
            int t = (b < static_cast<int>(bitMap.size()) && bitMap[b] >= 0) ? bitMap[b] : b;
            if (t <= prev)
                throw IntegrityError("generator rename does not preserve monomial order");
            prev = t;
            nm |= MonomialMask(1) << t;
        }
        r.addTerm(nm, c);
    }
    return r;
}

GrassmannNumber operator+(const GrassmannNumber& a, const GrassmannNumber& b) {
    if (a.backend_ != b.backend_) throw BackendMismatchError("g_add backend mismatch");
    GrassmannNumber r = a;
    for (const auto& [m, c] : b.terms_) r.addTerm(m, c);
    return r;
}

GrassmannNumber operator-(const GrassmannNumber& a, const GrassmannNumber& b) {
    if (a.backend_ != b.backend_) throw BackendMismatchError("g_sub backend mismatch");
    GrassmannNumber r = a;
    for (const auto& [m, c] : b.terms_) r.addTerm(m, -c);
    return r;
}

GrassmannNumber operator-(const GrassmannNumber& a) {
    GrassmannNumber r(a.backend_);
    for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, -c);
    return r;
}

GrassmannNumber operator*(const Scalar& c, const GrassmannNumber& a) {
    if (c.backend() != a.backend_) throw BackendMismatchError("g_scale backend mismatch");
    GrassmannNumber r(a.backend_);
    for (const auto& [m, x] : a.terms_) r.addTerm(m, c * x);
    return r;
}

GrassmannNumber operator*(const GrassmannNumber& a, const GrassmannNumber& b) {
    if (a.backend_ != b.backend_) throw BackendMismatchError("g_mul backend mismatch");
    GrassmannNumber r(a.backend_);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            if (ma & mb) continue;  // repeated generator
            Scalar c = ca * cb;
            if (monomialMergeSign(ma, mb)) c = -c;
            r.addTerm(ma | mb, c);
        }
    }
    return r;
}

bool GrassmannNumber::approxEqual(const GrassmannNumber& b, double tol) const {
    return (*this - b).isZero(tol);
}

GrassmannNumber g_inv(const GrassmannNumber& a) {
    Scalar b = a.body();
    if (b.isZero(0.0)) throw NotInvertibleError("zero body is not invertible");
    Scalar binv = b.inverse();
    GrassmannNumber s = a.soul();
    // a^{-1} = b^{-1} sum_k (-s/b)^k, finite by nilpotency
    GrassmannNumber acc = GrassmannNumber::one(a.backend());
    GrassmannNumber pw = GrassmannNumber::one(a.backend());
    GrassmannNumber ms = (-binv) * s;
    while (true) {
        pw = pw * ms;
        if (pw.isZero()) break;
        acc += pw;
    }
    return binv * acc;
}

GrassmannNumber g_analytic(AnalyticFn f, const GrassmannNumber& a, const Rat& power) {
    Backend be = a.backend();
    Scalar b = a.body();
    GrassmannNumber s = a.soul();

    auto mkInt = [&](long n) {
        return be == Backend::Exact ? Scalar::fromInt(n)
                                    : Scalar(std::complex<double>(static_cast<double>(n)));
    };

    // derivative coefficients f^{(k)}(b)/k!
    auto coefAt = [&](int k) -> Scalar {
        switch (f) {
            case AnalyticFn::Exp: {
                Scalar e0;
                if (be == Backend::Exact) {
                    if (!b.isZero(0.0))
                        throw ExactUnsupportedError("exp of nonzero body needs the float backend");
                    e0 = Scalar::one(be);
                } else {
                    e0 = Scalar(std::exp(b.toComplex()));
                }
                Scalar kfact = Scalar::one(be);
                for (int j = 2; j <= k; ++j) kfact *= mkInt(j);
                return e0 / kfact;
            }
            case AnalyticFn::Log: {
                if (b.isZero(0.0)) throw NotInvertibleError("log of zero body");
                if (k == 0) {
                    if (be == Backend::Exact) {
                        if (!(b == Scalar::one(be)))
                            throw ExactUnsupportedError("exact log needs body 1");
                        return Scalar::zero(be);
                    }
                    return Scalar(std::log(b.toComplex()));
                }
                // f^{(k)}(b)/k! = (-1)^{k-1} / (k b^k)
                Scalar r = b.pow(k).inverse() / mkInt(k);
                return (k % 2 == 0) ? -r : r;
            }
            case AnalyticFn::Power: {
                // f(x) = x^r; f^{(k)}(b)/k! = C(r,k) b^{r-k}
                if (be == Backend::Exact) {
                    if (denominator(power) != 1)
                        throw ExactUnsupportedError("exact power needs an integer exponent");
                    long r = static_cast<long>(numerator(power));
                    Scalar binom = Scalar::one(be);
                    for (int j = 0; j < k; ++j)
                        binom = binom * Scalar::fromRat(Rat(r - j)) / Scalar::fromInt(j + 1);
                    return binom * b.pow(r - k);
                }
                double r = static_cast<double>(power);
                std::complex<double> binom = 1.0;
                for (int j = 0; j < k; ++j) binom *= (r - j) / (j + 1.0);
                return Scalar(binom * std::pow(b.toComplex(), r - k));
            }
        }
        throw IntegrityError("unreachable");
    };

    GrassmannNumber acc = GrassmannNumber::fromScalar(coefAt(0));
    GrassmannNumber pw = GrassmannNumber::one(be);
    int k = 1;
    while (true) {
        pw = pw * s;
        if (pw.isZero()) break;
        acc += coefAt(k) * pw;
        ++k;
    }
    return acc;
}

GrassmannNumber g_left_deriv(const GrassmannNumber& a, GeneratorId g) {
    int b = g.bit();
    MonomialMask gm = MonomialMask(1) << b;
    GrassmannNumber r(a.backend());
    for (const auto& [m, c] : a.terms()) {
        if (!(m & gm)) continue;
        // sign: generators preceding g inside the monomial
        int pre = std::popcount(m & (gm - 1));
        r.addTerm(m & ~gm, (pre % 2) ? -c : c);
    }
    return r;
}

std::string GrassmannNumber::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        if (m == 0) {
            os << c.str();
        } else {
            os << "(" << c.str() << ")·" << monomialName(m);
        }
    }
    return os.str();
}

}  // namespace supersol
