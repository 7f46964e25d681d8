#include "supersol/scalar.hpp"

#include <sstream>

namespace supersol {

namespace {

int cmpRat(const Rat& a, const Rat& b) {
    if (a < b) return -1;
    if (b < a) return 1;
    return 0;
}

std::string ratStr(const Rat& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

}  // namespace

std::string CRat::str() const {
    if (im == 0) return ratStr(re);
    std::ostringstream os;
    os << ratStr(re) << (im < 0 ? " - " : " + ") << ratStr(abs(im)) << " i";
    return os.str();
}

std::string Exact::str() const {
    if (b.isZero()) return a.str();
    std::ostringstream os;
    if (!a.isZero()) os << a.str() << " + ";
    os << "(" << b.str() << ")*sqrt2";
    return os.str();
}

void Scalar::requireSame(const Scalar& x, const Scalar& y) {
    if (x.backend() != y.backend())
        throw BackendMismatchError("mixed exact/float scalar backends");
}

Scalar operator+(const Scalar& x, const Scalar& y) {
    Scalar::requireSame(x, y);
    if (x.isExact()) return Scalar(x.exact() + y.exact());
    return Scalar(x.floatValue() + y.floatValue());
}

Scalar operator-(const Scalar& x, const Scalar& y) {
    Scalar::requireSame(x, y);
    if (x.isExact()) return Scalar(x.exact() - y.exact());
    return Scalar(x.floatValue() - y.floatValue());
}

Scalar operator*(const Scalar& x, const Scalar& y) {
    Scalar::requireSame(x, y);
    if (x.isExact()) return Scalar(x.exact() * y.exact());
    return Scalar(x.floatValue() * y.floatValue());
}

Scalar operator/(const Scalar& x, const Scalar& y) {
    Scalar::requireSame(x, y);
    if (x.isExact()) return Scalar(x.exact() / y.exact());
    if (std::abs(y.floatValue()) == 0.0)
        throw NotInvertibleError("division by zero scalar");
    return Scalar(x.floatValue() / y.floatValue());
}

Scalar operator-(const Scalar& x) {
    if (x.isExact()) return Scalar(-x.exact());
    return Scalar(-x.floatValue());
}

Scalar Scalar::inverse() const {
    if (isExact()) return Scalar(exact().inverse());
    if (std::abs(floatValue()) == 0.0)
        throw NotInvertibleError("division by zero scalar");
    return Scalar(1.0 / floatValue());
}

Scalar Scalar::conj() const {
    if (isExact()) {
        const Exact& e = exact();
        return Scalar(Exact{e.a.conj(), e.b.conj()});
    }
    return Scalar(std::conj(floatValue()));
}

Scalar Scalar::pow(long n) const {
    Scalar base = *this;
    if (n < 0) {
        base = base.inverse();
        n = -n;
    }
    Scalar r = Scalar::one(backend());
    while (n > 0) {
        if (n & 1) r = r * base;
        base = base * base;
        n >>= 1;
    }
    return r;
}

bool Scalar::approxEqual(const Scalar& y, double tol) const {
    if (backend() != y.backend()) throw BackendMismatchError("mixed backends in comparison");
    if (isExact()) return exact() == y.exact();
    return std::abs(floatValue() - y.floatValue()) <= tol;
}

int Scalar::compare(const Scalar& y) const {
    if (backend() != y.backend()) return backend() == Backend::Exact ? -1 : 1;
    if (isExact()) {
        const Exact& p = exact();
        const Exact& q = y.exact();
        if (int c = cmpRat(p.a.re, q.a.re)) return c;
        if (int c = cmpRat(p.a.im, q.a.im)) return c;
        if (int c = cmpRat(p.b.re, q.b.re)) return c;
        return cmpRat(p.b.im, q.b.im);
    }
    auto a = floatValue();
    auto b = y.floatValue();
    if (a.real() != b.real()) return a.real() < b.real() ? -1 : 1;
    if (a.imag() != b.imag()) return a.imag() < b.imag() ? -1 : 1;
    return 0;
}

std::string Scalar::str() const {
    if (isExact()) return exact().str();
    std::ostringstream os;
    auto z = floatValue();
    os.precision(17);
    os << z.real();
    if (z.imag() != 0.0) os << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << " i";
    return os.str();
}

}  // namespace supersol
