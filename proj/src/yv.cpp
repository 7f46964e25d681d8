#include "supersol/yv.hpp"

#include <cmath>
#include <sstream>

namespace supersol {

CubicScalar CubicScalar::inverse() const {
    if (isZero()) throw NotInvertibleError("division by zero cubic scalar");
    // Solve (a0+a1 c+a2 c^2) x = 1 in the basis {1, c, c^2}, c^3 = 3.
    // Multiplication matrix M columns: A*1, A*c, A*c^2.
    Rat m[3][3] = {{a0, 3 * a2, 3 * a1}, {a1, a0, 3 * a2}, {a2, a1, a0}};
    Rat det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
              m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
              m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    if (det == 0) throw NotInvertibleError("singular cubic scalar");  // cannot happen in a field
    // Cramer: x_k = det(M with column k replaced by e1)/det
    auto minor2 = [&](int r0, int c0, int r1, int c1) { return m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0]; };
    Rat x0 = minor2(1, 1, 2, 2) / det;
    Rat x1 = -minor2(1, 0, 2, 2) / det;
    Rat x2 = minor2(1, 0, 2, 1) / det;
    return {x0, x1, x2};
}

double CubicScalar::toDouble() const {
    const double c = std::cbrt(3.0);
    return static_cast<double>(a0) + static_cast<double>(a1) * c +
           static_cast<double>(a2) * c * c;
}

std::string CubicScalar::str() const {
    std::ostringstream os;
    bool any = false;
    auto piece = [&](const Rat& r, const char* suffix) {
        if (r == 0) return;
        if (any) os << " + ";
        os << r << suffix;
        any = true;
    };
    piece(a0, "");
    piece(a1, "·3^(1/3)");
    piece(a2, "·3^(2/3)");
    if (!any) os << "0";
    return os.str();
}

void ZPolynomial::trim() {
    while (!c_.empty() && c_.back().isZero()) c_.pop_back();
}

ZPolynomial ZPolynomial::deriv() const {
    std::vector<CubicScalar> r;
    for (size_t k = 1; k < c_.size(); ++k)
        r.push_back(CubicScalar::fromInt(static_cast<long>(k)) * c_[k]);
    return ZPolynomial(std::move(r));
}

CubicScalar ZPolynomial::evalExact(const CubicScalar& z) const {
    CubicScalar acc{};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

double ZPolynomial::evalDouble(double z) const {
    double acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + it->toDouble();
    return acc;
}

ZPolynomial operator+(const ZPolynomial& a, const ZPolynomial& b) {
    std::vector<CubicScalar> r(std::max(a.c_.size(), b.c_.size()));
    for (size_t k = 0; k < r.size(); ++k)
        r[k] = a.coeff(static_cast<int>(k)) + b.coeff(static_cast<int>(k));
    return ZPolynomial(std::move(r));
}

ZPolynomial operator-(const ZPolynomial& a, const ZPolynomial& b) {
    std::vector<CubicScalar> r(std::max(a.c_.size(), b.c_.size()));
    for (size_t k = 0; k < r.size(); ++k)
        r[k] = a.coeff(static_cast<int>(k)) - b.coeff(static_cast<int>(k));
    return ZPolynomial(std::move(r));
}

ZPolynomial operator*(const ZPolynomial& a, const ZPolynomial& b) {
    if (a.isZero() || b.isZero()) return ZPolynomial();
    std::vector<CubicScalar> r(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j)
            r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
    return ZPolynomial(std::move(r));
}

ZPolynomial operator*(const CubicScalar& c, const ZPolynomial& a) {
    std::vector<CubicScalar> r = a.c_;
    for (auto& x : r) x = c * x;
    return ZPolynomial(std::move(r));
}

ZPolynomial ZPolynomial::divideExact(const ZPolynomial& divisor) const {
    if (divisor.isZero()) throw IntegrityError("division by zero polynomial");
    std::vector<CubicScalar> rem = c_;
    std::vector<CubicScalar> quot(rem.size() >= divisor.c_.size()
                                      ? rem.size() - divisor.c_.size() + 1
                                      : 0);
    CubicScalar leadInv = divisor.c_.back().inverse();
    int dn = divisor.degree();
    for (int k = static_cast<int>(rem.size()) - 1; k >= dn; --k) {
        if (rem[k].isZero()) continue;
        CubicScalar q = rem[k] * leadInv;
        quot[k - dn] = q;
        for (int j = 0; j <= dn; ++j)
            rem[k - dn + j] = rem[k - dn + j] - q * divisor.c_[j];
    }
    for (const auto& r : rem)
        if (!r.isZero())
            throw IntegrityError("nonzero remainder in exact polynomial division");
    return ZPolynomial(std::move(quot));
}

std::string ZPolynomial::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool any = false;
    for (int k = degree(); k >= 0; --k) {
        if (coeff(k).isZero()) continue;
        if (any) os << " + ";
        os << "(" << coeff(k).str() << ")";
        if (k == 1) os << "·z";
        if (k > 1) os << "·z^" << k;
        any = true;
    }
    return os.str();
}

ZPolynomial yv_next(const ZPolynomial& qn, const ZPolynomial& qnMinus) {
    ZPolynomial qd = qn.deriv();
    ZPolynomial qdd = qd.deriv();
    ZPolynomial rhs = ZPolynomial::z() * qn * qn -
                      CubicScalar::fromInt(12) * (qn * qdd - qd * qd);
    ZPolynomial scaled = CubicScalar::cbrt3Inv() * rhs;
    return scaled.divideExact(qnMinus);
}

std::vector<ZPolynomial> yv_sequence(int nMax) {
    if (nMax < 1) throw IntegrityError("yv_sequence needs nMax >= 1");
    std::vector<ZPolynomial> q;
    q.push_back(ZPolynomial::constant(CubicScalar::cbrt3Inv()));
    q.push_back(ZPolynomial::z());
    for (int n = 1; n < nMax; ++n) q.push_back(yv_next(q[n], q[n - 1]));
    return q;
}

SimilarityTau similarity_tau(int n) {
    if (n < 0) throw IntegrityError("similarity_tau needs n >= 0");
    auto q = yv_sequence(std::max(1, n));
    return {n, Rat(static_cast<long>(n) * (n + 1), 6), q[n]};
}

}  // namespace supersol
