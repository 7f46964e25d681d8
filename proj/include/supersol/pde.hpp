#ifndef SUPERSOL_PDE_HPP
#define SUPERSOL_PDE_HPP

#include <optional>
#include <utility>
#include <vector>

#include "supersol/solutions.hpp"
#include "supersol/superfield.hpp"

namespace supersol {

enum class LinearForm { Dispersive, Schrodinger };
enum class ResidualForm { Full, Reduced, Potential };

struct ResidualReport {
    EquationId equation = EquationId::SmKdV;
    enum class Mode { Symbolic, Grid } mode = Mode::Symbolic;
    std::optional<bool> symbolicZero;
    std::optional<double> gridMaxAbs;
    std::optional<int> pointsSampled;
    int skipped = 0;
};

// Residual (LHS - RHS) of the full superspace equation selected by `spec`:
//   SKdV_a : A_t - (-A_xx + i(a+2) A [D+,D-]A + i(a-1)[D+A, D-A] + a A^3)_x
//   SmKdV  : A_t + A_xxx + 2 A_x^3 + 6 ([D+,D-]A)^2 A_x
//   SB     : A_t - (i [D+,D-]A + 2 A^2)_x
//   N4KdV  : G_t + G_xxx + 4 G_x^3 + 6 [Dc+,Dc-](G_x [Dh+,Dh-]G)
//            + 12 ([Dh+,Dh-]G)^2 G_x
// with [X,Y] = XY - YX. Log-type fields are accepted whenever the equation
// touches the field only through derivatives (SmKdV, N4KdV).
SuperRational residual_full(const EquationSpec& spec, const Field& a);

// Residual of the chiral-reduced classical PDE:
//   SKdV_a : A_t + (A_xx - i(a+2) A A_x - a A^3)_x
//   SmKdV  : A_t + A_xxx + 8 A_x^3
//   SB     : A_t - (i A_x + 2 A^2)_x
//   N4KdV  : G_t + G_xxx + 12 G_x G_xx + 16 G_x^3
// Warns on stderr when the field is not chiral (the reduction only holds
// on chiral fields).
SuperRational residual_reduced(const EquationSpec& spec, const Field& a);

// Residual of the potential form (field enters only through derivatives):
//   SKdV_a : At_t + At_xxx - i(a+2) At_x At_xx - a At_x^3
//   SB     : At_t - i At_xx - 2 At_x^2
SuperRational residual_potential(const EquationSpec& spec, const Field& atilde);

// H_t + H_xxx  (dispersive)  or  H_t - i H_xx  (schrodinger).
SuperExpr residual_linear(LinearForm which, const SuperExpr& h);

// The two coefficients (3 + i(2+a) beta, (beta - i)(a beta - 2i)) whose
// simultaneous vanishing linearizes the potential equation.
std::pair<Scalar, Scalar> linearization_coefficients(const Scalar& a, const Scalar& beta);

// 2(beta^2 + 1): the cubic obstruction left at a = -2, vanishing at beta = i
// (the bilinearizable case).
Scalar bilinearization_cubic_coefficient(const Scalar& beta);

// H^2(H_t + H_xxx) - c1 H H_x H_xx - c2 H_x^3 with (c1, c2) the
// linearization coefficients. The potential residual of beta log H equals
// beta / H^3 times this expression.
SuperExpr linearization_numerator(const Scalar& a, const Scalar& beta, const SuperExpr& h);

// SmKdV-shaped residual with the covariant-derivative pair taken from the
// hat sector instead of the plain one.
SuperRational residual_smkdv_hat(const Field& a);

struct N4ReductionReport {
    bool fullMatches = false;        // N=4 full eq, check sector removed, G = A/sqrt2
    bool potentialMatchesA1 = false; // reduced N=4 under G = -(i/12)(a+2) At, a = 1
    bool potentialMatchesA4 = false; // same, a = 4
    bool ok() const { return fullMatches && potentialMatchesA1 && potentialMatchesA4; }
};

// aHat: a hat-sector field for the full-equation restriction check;
// atilde: a plain field for the potential-form scaling check.
N4ReductionReport n4_reduction_check(const Field& aHat, const Field& atilde);

// Strip every check-sector generator from numerator and denominator bases.
SuperRational sr_strip_check_sector(const SuperRational& r);

// Evaluate the selected residual of `a` on the grid, float backend.
// Singular points are skipped and counted.
ResidualReport grid_residual(const EquationSpec& spec, const Field& a, ResidualForm form,
                             const std::vector<double>& xs, const std::vector<double>& ts);

// c * field (scales the value or every log coefficient).
Field scale_field(const Scalar& c, const Field& f);

}  // namespace supersol

#endif
