#ifndef SUPERSOL_YV_HPP
#define SUPERSOL_YV_HPP

#include <string>
#include <vector>

#include "supersol/scalar.hpp"

namespace supersol {

// Element a0 + a1*3^(1/3) + a2*3^(2/3) of the cubic field Q(3^(1/3)).
struct CubicScalar {
    Rat a0{0}, a1{0}, a2{0};

    static CubicScalar fromRat(const Rat& r) { return {r, Rat(0), Rat(0)}; }
    static CubicScalar fromInt(long n) { return fromRat(Rat(n)); }
    static CubicScalar cbrt3() { return {Rat(0), Rat(1), Rat(0)}; }
    static CubicScalar cbrt3Inv() { return {Rat(0), Rat(0), Rat(1, 3)}; }  // 3^(-1/3) = 3^(2/3)/3

    bool isZero() const { return a0 == 0 && a1 == 0 && a2 == 0; }

    friend CubicScalar operator+(const CubicScalar& x, const CubicScalar& y) {
        return {x.a0 + y.a0, x.a1 + y.a1, x.a2 + y.a2};
    }
    friend CubicScalar operator-(const CubicScalar& x, const CubicScalar& y) {
        return {x.a0 - y.a0, x.a1 - y.a1, x.a2 - y.a2};
    }
    friend CubicScalar operator-(const CubicScalar& x) { return {-x.a0, -x.a1, -x.a2}; }
    friend CubicScalar operator*(const CubicScalar& x, const CubicScalar& y) {
        // 3^(1/3) * 3^(2/3) = 3
        return {x.a0 * y.a0 + 3 * (x.a1 * y.a2 + x.a2 * y.a1),
                x.a0 * y.a1 + x.a1 * y.a0 + 3 * x.a2 * y.a2,
                x.a0 * y.a2 + x.a1 * y.a1 + x.a2 * y.a0};
    }
    CubicScalar inverse() const;
    friend CubicScalar operator/(const CubicScalar& x, const CubicScalar& y) {
        return x * y.inverse();
    }
    friend bool operator==(const CubicScalar&, const CubicScalar&) = default;

    double toDouble() const;
    std::string str() const;
};

// Polynomial in z with CubicScalar coefficients, ascending degree.
class ZPolynomial {
public:
    ZPolynomial() = default;
    explicit ZPolynomial(std::vector<CubicScalar> coeffs) : c_(std::move(coeffs)) { trim(); }
    static ZPolynomial constant(const CubicScalar& c) { return ZPolynomial({c}); }
    static ZPolynomial z() { return ZPolynomial({CubicScalar{}, CubicScalar::fromInt(1)}); }

    bool isZero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const std::vector<CubicScalar>& coeffs() const { return c_; }
    CubicScalar coeff(int k) const {
        return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : CubicScalar{};
    }

    ZPolynomial deriv() const;
    CubicScalar evalExact(const CubicScalar& z) const;
    double evalDouble(double z) const;

    friend ZPolynomial operator+(const ZPolynomial& a, const ZPolynomial& b);
    friend ZPolynomial operator-(const ZPolynomial& a, const ZPolynomial& b);
    friend ZPolynomial operator*(const ZPolynomial& a, const ZPolynomial& b);
    friend ZPolynomial operator*(const CubicScalar& c, const ZPolynomial& a);
    friend bool operator==(const ZPolynomial&, const ZPolynomial&) = default;

    // Exact division; throws IntegrityError on nonzero remainder.
    ZPolynomial divideExact(const ZPolynomial& divisor) const;

    std::string str() const;

private:
    void trim();
    std::vector<CubicScalar> c_;
};

// One recurrence step: given (Q_n, Q_{n-1}) produce Q_{n+1} via
//   3^(1/3) Q_{n+1} Q_{n-1} = z Q_n^2 - 12 (Q_n Q_n'' - Q_n'^2),
// with exact polynomial division.
ZPolynomial yv_next(const ZPolynomial& qn, const ZPolynomial& qnMinus);

// [Q_0 ... Q_nmax] with Q_0 = 3^(-1/3), Q_1 = z.
std::vector<ZPolynomial> yv_sequence(int nMax);

// Descriptor of tau_{1,n} = t^{n(n+1)/6} Q_n(ztilde),
// ztilde = t^(-1/3) (x + theta+ zeta + theta+ theta-).
struct SimilarityTau {
    int n = 0;
    Rat prefactorExp;  // n(n+1)/6
    ZPolynomial q;
};

SimilarityTau similarity_tau(int n);

}  // namespace supersol

#endif
