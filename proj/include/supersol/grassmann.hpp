#ifndef SUPERSOL_GRASSMANN_HPP
#define SUPERSOL_GRASSMANN_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "supersol/scalar.hpp"

namespace supersol {

// Odd generators. Canonical order: theta+, theta-, hat pair, check pair,
// then the zeta families ordered by (kind, index).
enum class GenKind : std::uint8_t {
    ThetaPlus = 0,
    ThetaMinus,
    ThetaHatPlus,
    ThetaHatMinus,
    ThetaCheckPlus,
    ThetaCheckMinus,
    Zeta,
    ZetaHat,
    ZetaCheck,
};

struct GeneratorId {
    GenKind kind{GenKind::ThetaPlus};
    int index = 0;  // only meaningful for the zeta families

    static constexpr int kMaxZetaIndex = 16;

    // Bit position in the 64-bit monomial mask, increasing with the
    // canonical generator order.
    int bit() const;
    static GeneratorId fromBit(int bit);

    static GeneratorId thetaPlus() { return {GenKind::ThetaPlus, 0}; }
    static GeneratorId thetaMinus() { return {GenKind::ThetaMinus, 0}; }
    static GeneratorId thetaHatPlus() { return {GenKind::ThetaHatPlus, 0}; }
    static GeneratorId thetaHatMinus() { return {GenKind::ThetaHatMinus, 0}; }
    static GeneratorId thetaCheckPlus() { return {GenKind::ThetaCheckPlus, 0}; }
    static GeneratorId thetaCheckMinus() { return {GenKind::ThetaCheckMinus, 0}; }
    static GeneratorId zeta(int i) { return {GenKind::Zeta, i}; }
    static GeneratorId zetaHat(int i) { return {GenKind::ZetaHat, i}; }
    static GeneratorId zetaCheck(int i) { return {GenKind::ZetaCheck, i}; }

    friend bool operator==(const GeneratorId&, const GeneratorId&) = default;
    friend auto operator<=>(const GeneratorId& a, const GeneratorId& b) {
        if (auto c = a.kind <=> b.kind; c != 0) return c;
        return a.index <=> b.index;
    }

    std::string name() const;
};

// Squarefree product of generators, stored as a bitmask over the canonical
// generator order. Bit i set = generator with bit() == i present.
using MonomialMask = std::uint64_t;

std::string monomialName(MonomialMask m);
std::vector<GeneratorId> monomialGenerators(MonomialMask m);

enum class Parity { Zero, Even, Odd, Mixed };

// Element of the exterior algebra over the canonical generators with
// Scalar coefficients. Canonical form: no zero coefficients stored.
class GrassmannNumber {
public:
    explicit GrassmannNumber(Backend b = Backend::Exact) : backend_(b) {}

    static GrassmannNumber fromScalar(const Scalar& s);
    static GrassmannNumber one(Backend b) { return fromScalar(Scalar::one(b)); }
    static GrassmannNumber generator(GeneratorId g, Backend b);
    static GrassmannNumber monomial(MonomialMask m, const Scalar& coeff);

    Backend backend() const { return backend_; }
    const std::map<MonomialMask, Scalar>& terms() const { return terms_; }
    bool isZero() const { return terms_.empty(); }
    bool isZero(double tol) const;

    Scalar body() const;
    GrassmannNumber soul() const;
    Scalar coeff(MonomialMask m) const;
    Parity parity() const;

    // Keep only monomials of the given parity (0 even, 1 odd).
    GrassmannNumber parityPart(int p) const;
    // Negate odd monomials: a_even - a_odd.
    GrassmannNumber parityFlip() const;

    // Drop every monomial containing a generator from `mask`.
    GrassmannNumber stripGenerators(MonomialMask mask) const;
    // Remap generator bits. `map[i]` is the new bit of old bit i (-1 keeps).
    // The remap must be strictly increasing on each monomial's support, so
    // no reordering sign arises; violations throw IntegrityError.
    GrassmannNumber renameBits(const std::vector<int>& bitMap) const;

    std::string str() const;

    friend GrassmannNumber operator+(const GrassmannNumber& a, const GrassmannNumber& b);
    friend GrassmannNumber operator-(const GrassmannNumber& a, const GrassmannNumber& b);
    friend GrassmannNumber operator*(const GrassmannNumber& a, const GrassmannNumber& b);
    friend GrassmannNumber operator-(const GrassmannNumber& a);
    friend GrassmannNumber operator*(const Scalar& c, const GrassmannNumber& a);
    GrassmannNumber& operator+=(const GrassmannNumber& b) { *this = *this + b; return *this; }
    GrassmannNumber& operator-=(const GrassmannNumber& b) { *this = *this - b; return *this; }

    friend bool operator==(const GrassmannNumber& a, const GrassmannNumber& b) {
        return a.backend_ == b.backend_ && a.terms_ == b.terms_;
    }
    bool approxEqual(const GrassmannNumber& b, double tol = Scalar::kDefaultFloatTol) const;

    void addTerm(MonomialMask m, const Scalar& c);

private:
    Backend backend_;
    std::map<MonomialMask, Scalar> terms_;
};

GrassmannNumber g_inv(const GrassmannNumber& a);

enum class AnalyticFn { Exp, Log, Power };

// Taylor expansion of f about body(a), finite by nilpotency of the soul.
// `power` is the exponent for AnalyticFn::Power (integer exponents are
// exact; others need the float backend).
GrassmannNumber g_analytic(AnalyticFn f, const GrassmannNumber& a, const Rat& power = Rat(0));

// Left derivative with respect to generator g.
GrassmannNumber g_left_deriv(const GrassmannNumber& a, GeneratorId g);

// Parity of the permutation merging two disjoint sorted monomials (a then b).
int monomialMergeSign(MonomialMask a, MonomialMask b);

}  // namespace supersol

#endif
