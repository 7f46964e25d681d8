#ifndef SUPERSOL_SUPERFIELD_HPP
#define SUPERSOL_SUPERFIELD_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "supersol/grassmann.hpp"

namespace supersol {

// Derivations acting on superfield expressions.
enum class Deriv {
    Dx,
    Dt,
    D1,  // real-basis supercovariant derivative, theta+/- pair
    D2,
    D3,  // real-basis, check pair
    D4,
    DPlus,
    DMinus,
    DHatPlus,
    DHatMinus,
    DCheckPlus,
    DCheckMinus,
};

bool derivIsOdd(Deriv d);
std::string derivName(Deriv d);

// Coefficient of x and t in an exponential exp(kappa x + omega t).
struct LinearExponent {
    Scalar kappa;
    Scalar omega;

    friend bool operator==(const LinearExponent& a, const LinearExponent& b) {
        return a.kappa == b.kappa && a.omega == b.omega;
    }
};

struct LinearExponentLess {
    bool operator()(const LinearExponent& a, const LinearExponent& b) const {
        if (int c = a.kappa.compare(b.kappa)) return c < 0;
        return a.omega.compare(b.omega) < 0;
    }
};

// Finite sum of  P(x,t) * exp(kappa x + omega t)  with Grassmann-valued
// polynomial coefficients. Canonical form: outer map keyed by exponent,
// inner map keyed by (x-degree, t-degree), no zero coefficients. Symbolic
// equality is map equality.
class SuperExpr {
public:
    using Poly = std::map<std::pair<int, int>, GrassmannNumber>;

    explicit SuperExpr(Backend b = Backend::Exact) : backend_(b) {}

    static SuperExpr zero(Backend b) { return SuperExpr(b); }
    static SuperExpr fromScalar(const Scalar& s);
    static SuperExpr one(Backend b) { return fromScalar(Scalar::one(b)); }
    static SuperExpr fromGrassmann(const GrassmannNumber& g);
    static SuperExpr variableX(Backend b);
    static SuperExpr variableT(Backend b);
    static SuperExpr exponential(const LinearExponent& e);  // exp(kx+wt)

    Backend backend() const { return backend_; }
    const std::map<LinearExponent, Poly, LinearExponentLess>& terms() const { return terms_; }

    bool isZero() const { return terms_.empty(); }
    bool isZero(double tol) const;
    Parity parity() const;
    bool hasInvertibleBody() const;  // constant unit-monomial term nonzero

    SuperExpr dx() const;
    SuperExpr dt() const;
    // Left theta-derivative applied to every coefficient.
    SuperExpr thetaDeriv(GeneratorId g) const;
    // Left multiplication by a constant Grassmann number.
    SuperExpr grassmannMul(const GrassmannNumber& g) const;
    SuperExpr derive(Deriv d) const;

    GrassmannNumber eval(const Scalar& x, const Scalar& t) const;

    SuperExpr stripGenerators(MonomialMask mask) const;
    SuperExpr renameBits(const std::vector<int>& bitMap) const;
    SuperExpr parityPart(int p) const;
    SuperExpr parityFlip() const;

    friend SuperExpr operator+(const SuperExpr& a, const SuperExpr& b);
    friend SuperExpr operator-(const SuperExpr& a, const SuperExpr& b);
    friend SuperExpr operator*(const SuperExpr& a, const SuperExpr& b);
    friend SuperExpr operator-(const SuperExpr& a);
    friend SuperExpr operator*(const Scalar& c, const SuperExpr& a);
    SuperExpr& operator+=(const SuperExpr& b) { *this = *this + b; return *this; }
    SuperExpr& operator-=(const SuperExpr& b) { *this = *this - b; return *this; }

    friend bool operator==(const SuperExpr& a, const SuperExpr& b) {
        return a.backend_ == b.backend_ && a.terms_ == b.terms_;
    }
    bool approxEqual(const SuperExpr& b, double tol = Scalar::kDefaultFloatTol) const;

    // Total order on canonical forms, for deterministic factor lists.
    int compare(const SuperExpr& b) const;

    std::string str() const;

    void addTerm(const LinearExponent& e, int degX, int degT, const GrassmannNumber& c);

private:
    Backend backend_;
    std::map<LinearExponent, Poly, LinearExponentLess> terms_;
};

// exp of a superfield whose (x,t)-dependence is linear with body-valued
// coefficients; the constant part may carry a nilpotent soul.
SuperExpr sf_exp(const SuperExpr& e);

bool sf_is_chiral(const SuperExpr& e, Deriv d);

// Ratio of superfield expressions with an even, body-invertible
// denominator kept in factored form num / prod_i base_i^{pow_i}.
// Never reduced to lowest terms.
class SuperRational {
public:
    explicit SuperRational(Backend b = Backend::Exact)
        : num_(SuperExpr::zero(b)) {}
    explicit SuperRational(SuperExpr num) : num_(std::move(num)) {}
    SuperRational(SuperExpr num, std::vector<std::pair<SuperExpr, int>> den);

    static SuperRational zero(Backend b) { return SuperRational(b); }

    Backend backend() const { return num_.backend(); }
    const SuperExpr& num() const { return num_; }
    const std::vector<std::pair<SuperExpr, int>>& den() const { return den_; }

    bool isZero() const { return num_.isZero(); }
    bool isZero(double tol) const { return num_.isZero(tol); }

    SuperRational derive(Deriv d) const;

    friend SuperRational operator+(const SuperRational& a, const SuperRational& b);
    friend SuperRational operator-(const SuperRational& a, const SuperRational& b);
    friend SuperRational operator*(const SuperRational& a, const SuperRational& b);
    friend SuperRational operator-(const SuperRational& a);
    friend SuperRational operator*(const Scalar& c, const SuperRational& a);
    SuperRational& operator+=(const SuperRational& b) { *this = *this + b; return *this; }
    SuperRational& operator-=(const SuperRational& b) { *this = *this - b; return *this; }
    SuperRational pow(int n) const;

    // Equality by cross-multiplied numerator difference.
    bool equals(const SuperRational& b) const;
    bool approxEquals(const SuperRational& b, double tol = Scalar::kDefaultFloatTol) const;

    GrassmannNumber eval(const Scalar& x, const Scalar& t) const;

    std::string str() const;

private:
    SuperExpr denProduct() const;
    SuperExpr num_;
    std::vector<std::pair<SuperExpr, int>> den_;  // sorted by SuperExpr::compare
};

bool sr_is_chiral(const SuperRational& r, Deriv d);

// Affine field  value + sum_i c_i log(base_i).  The logarithms are never
// materialized; any derivative collapses the field to a SuperRational.
// Residual evaluators accept this so that log-type solutions (which enter
// the equations only through derivatives) stay exact.
class Field {
public:
    Field() = default;
    explicit Field(SuperRational value) : value_(std::move(value)) {}
    explicit Field(SuperExpr value) : value_(SuperRational(std::move(value))) {}

    struct LogTerm {
        Scalar coeff;
        SuperExpr base;  // even parity, invertible body
    };

    static Field logField(std::vector<LogTerm> logs);

    bool isPureValue() const { return logs_.empty(); }
    Backend backend() const;

    // Throws ParityError if the field contains log terms (the
    // undifferentiated value of a log field is not representable).
    const SuperRational& value() const;

    Field derive(Deriv d) const;

    const std::vector<LogTerm>& logs() const { return logs_; }

private:
    std::optional<SuperRational> value_;
    std::vector<LogTerm> logs_;
};

}  // namespace supersol

#endif
