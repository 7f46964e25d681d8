#ifndef SUPERSOL_SCALAR_HPP
#define SUPERSOL_SCALAR_HPP

#include <boost/multiprecision/gmp.hpp>

#include <complex>
#include <compare>
#include <string>
#include <variant>

#include "supersol/errors.hpp"

namespace supersol {

using Rat = boost::multiprecision::mpq_rational;

// Gaussian rational re + im*i.
struct CRat {
    Rat re{0};
    Rat im{0};

    bool isZero() const { return re == 0 && im == 0; }
    CRat conj() const { return {re, -im}; }
    Rat norm() const { return re * re + im * im; }

    friend CRat operator+(const CRat& a, const CRat& b) { return {a.re + b.re, a.im + b.im}; }
    friend CRat operator-(const CRat& a, const CRat& b) { return {a.re - b.re, a.im - b.im}; }
    friend CRat operator-(const CRat& a) { return {-a.re, -a.im}; }
    friend CRat operator*(const CRat& a, const CRat& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend CRat operator/(const CRat& a, const CRat& b) {
        Rat n = b.norm();
        if (n == 0) throw NotInvertibleError("division by zero Gaussian rational");
        CRat p = a * b.conj();
        return {p.re / n, p.im / n};
    }
    friend bool operator==(const CRat& a, const CRat& b) = default;

    std::complex<double> toComplex() const {
        return {static_cast<double>(re), static_cast<double>(im)};
    }
    std::string str() const;
};

// Element of Q(i, sqrt2): a + b*sqrt(2) with Gaussian rational a, b.
// sqrt(2) is irrational over Q(i), so a^2 - 2 b^2 = 0 only for a = b = 0;
// the ring is a field.
struct Exact {
    CRat a;
    CRat b;

    bool isZero() const { return a.isZero() && b.isZero(); }

    friend Exact operator+(const Exact& x, const Exact& y) { return {x.a + y.a, x.b + y.b}; }
    friend Exact operator-(const Exact& x, const Exact& y) { return {x.a - y.a, x.b - y.b}; }
    friend Exact operator-(const Exact& x) { return {-x.a, -x.b}; }
    friend Exact operator*(const Exact& x, const Exact& y) {
        CRat two{Rat(2), Rat(0)};
        return {x.a * y.a + two * (x.b * y.b), x.a * y.b + x.b * y.a};
    }
    Exact inverse() const {
        CRat two{Rat(2), Rat(0)};
        CRat d = a * a - two * (b * b);
        if (d.isZero()) throw NotInvertibleError("division by zero scalar");
        return {a / d, -b / d};
    }
    friend Exact operator/(const Exact& x, const Exact& y) { return x * y.inverse(); }
    friend bool operator==(const Exact& x, const Exact& y) = default;

    std::complex<double> toComplex() const {
        return a.toComplex() + std::sqrt(2.0) * b.toComplex();
    }
    std::string str() const;
};

enum class Backend { Exact, Float };

// Complex scalar with an exact Q(i,sqrt2) backend and a double backend.
// The two never mix silently: binary operations on mismatched backends
// throw BackendMismatchError.
class Scalar {
public:
    Scalar() : v_(Exact{}) {}
    explicit Scalar(Exact e) : v_(std::move(e)) {}
    explicit Scalar(std::complex<double> z) : v_(z) {}

    static Scalar zero(Backend b) {
        return b == Backend::Exact ? Scalar(Exact{}) : Scalar(std::complex<double>(0.0));
    }
    static Scalar one(Backend b) {
        return b == Backend::Exact ? fromRat(Rat(1)) : Scalar(std::complex<double>(1.0));
    }
    static Scalar fromRat(const Rat& r) { return Scalar(Exact{CRat{r, Rat(0)}, CRat{}}); }
    static Scalar fromInt(long n) { return fromRat(Rat(n)); }
    static Scalar rational(long p, long q) { return fromRat(Rat(p, q)); }
    // p/q + (r/s) i
    static Scalar gaussian(const Rat& re, const Rat& im) {
        return Scalar(Exact{CRat{re, im}, CRat{}});
    }
    static Scalar i() { return gaussian(Rat(0), Rat(1)); }
    // c * sqrt(2)
    static Scalar sqrt2Times(const CRat& c) { return Scalar(Exact{CRat{}, c}); }
    // 1/sqrt(2) = (1/2) sqrt(2)
    static Scalar invSqrt2(Backend b) {
        if (b == Backend::Exact) return sqrt2Times(CRat{Rat(1, 2), Rat(0)});
        return Scalar(std::complex<double>(1.0 / std::sqrt(2.0)));
    }
    static Scalar fromDouble(double re, double im = 0.0) {
        return Scalar(std::complex<double>(re, im));
    }

    Backend backend() const { return std::holds_alternative<Exact>(v_) ? Backend::Exact : Backend::Float; }
    bool isExact() const { return backend() == Backend::Exact; }
    const Exact& exact() const { return std::get<Exact>(v_); }
    std::complex<double> floatValue() const { return std::get<std::complex<double>>(v_); }

    bool isZero(double floatTol = kDefaultFloatTol) const {
        if (isExact()) return exact().isZero();
        return std::abs(floatValue()) <= floatTol;
    }

    std::complex<double> toComplex() const {
        return isExact() ? exact().toComplex() : floatValue();
    }

    Scalar inverse() const;
    Scalar conj() const;
    Scalar pow(long n) const;

    friend Scalar operator+(const Scalar& x, const Scalar& y);
    friend Scalar operator-(const Scalar& x, const Scalar& y);
    friend Scalar operator*(const Scalar& x, const Scalar& y);
    friend Scalar operator/(const Scalar& x, const Scalar& y);
    friend Scalar operator-(const Scalar& x);
    Scalar& operator+=(const Scalar& y) { *this = *this + y; return *this; }
    Scalar& operator-=(const Scalar& y) { *this = *this - y; return *this; }
    Scalar& operator*=(const Scalar& y) { *this = *this * y; return *this; }

    // Exact structural equality (exact backends) / bitwise (float).
    friend bool operator==(const Scalar& x, const Scalar& y) { return x.v_ == y.v_; }
    bool approxEqual(const Scalar& y, double tol = kDefaultFloatTol) const;

    // Total order for use as a canonical map key. Backends compare by tag
    // first; within a backend the order is lexicographic on components.
    int compare(const Scalar& y) const;

    std::string str() const;

    static constexpr double kDefaultFloatTol = 1e-10;

private:
    static void requireSame(const Scalar& x, const Scalar& y);
    std::variant<Exact, std::complex<double>> v_;
};

struct ScalarLess {
    bool operator()(const Scalar& a, const Scalar& b) const { return a.compare(b) < 0; }
};

}  // namespace supersol

#endif
