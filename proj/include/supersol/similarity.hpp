#ifndef SUPERSOL_SIMILARITY_HPP
#define SUPERSOL_SIMILARITY_HPP

#include <utility>
#include <vector>

#include "supersol/grassmann.hpp"
#include "supersol/yv.hpp"

namespace supersol {

// Exact algebra for similarity tau functions: finite sums
//   c * t^alpha * ztilde^k
// with c in Q(3^(1/3)) and rational alpha. Closed under d/dx and d/dt
// because d/dx ztilde = t^(-1/3) and d/dt ztilde = -(1/3) t^(-1) ztilde.
class SimExpr {
public:
    static SimExpr fromTau(const SimilarityTau& tau);

    bool isZero() const { return terms_.empty(); }
    const std::map<std::pair<Rat, int>, CubicScalar>& terms() const { return terms_; }

    SimExpr dx() const;
    SimExpr dt() const;

    friend SimExpr operator+(const SimExpr& a, const SimExpr& b);
    friend SimExpr operator-(const SimExpr& a, const SimExpr& b);
    friend SimExpr operator*(const SimExpr& a, const SimExpr& b);
    friend SimExpr operator*(const CubicScalar& c, const SimExpr& a);

    // Evaluate at t > 0 with the Grassmann similarity variable
    // ztilde = t^(-1/3)(x + theta+ zeta + theta+ theta-); ztilde has a
    // square-zero soul, so P(ztilde) = P(zb) + P'(zb) soul.
    GrassmannNumber evalAt(double t, const GrassmannNumber& ztilde) const;

    void addTerm(const Rat& tpow, int zdeg, const CubicScalar& c);

private:
    std::map<std::pair<Rat, int>, CubicScalar> terms_;
};

// The Grassmann value of ztilde at (x,t), float backend, with
// zeta = zeta_1.
GrassmannNumber similarity_ztilde(double x, double t);

// Bilinear residuals of the lifted pair (tau_{1,n}, tau_{1,n+1}) in the
// (x,t) domain: (D_t + D_x^3)(f.g) and D_x^2(f.g), computed exactly in
// the SimExpr algebra.
std::pair<SimExpr, SimExpr> similarity_bilinear_residuals(int n);

struct SimilarityGridReport {
    double maxAbs = 0.0;
    int pointsSampled = 0;
    int skipped = 0;
};

// max |coefficient| of the two bilinear residuals over the grid
SimilarityGridReport similarity_bilinear_grid(int n, const std::vector<double>& xs,
                                              const std::vector<double>& ts);

// Grid residual of A_t + A_xxx + 8 A_x^3 for the similarity solution
// A_n = (i/2) log(tau_{1,n}/tau_{1,n+1}), evaluated through the
// log-derivative identities.
SimilarityGridReport similarity_smkdv_grid(int n, const std::vector<double>& xs,
                                           const std::vector<double>& ts);

}  // namespace supersol

#endif
