#ifndef SUPERSOL_SOLUTIONS_HPP
#define SUPERSOL_SOLUTIONS_HPP

#include <complex>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "supersol/superfield.hpp"
#include "supersol/yv.hpp"

namespace supersol {

enum class EquationId { SKdV, SmKdV, SB, N4KdV };

// Equation identity plus the constants the solution formulas need.
// beta is fixed per equation: beta_1 = i, beta_4 = i/2, beta_-2 = i,
// beta_B = i/2; the SmKdV log-ratio solutions carry i/2 and the N=4 KdV
// linearization carries 1/4.
struct EquationSpec {
    EquationId id = EquationId::SmKdV;
    Scalar a;     // only meaningful for SKdV, restricted to {-2, 1, 4}
    Scalar beta;

    static EquationSpec skdv(long aValue, Backend be);
    static EquationSpec smkdv(Backend be);
    static EquationSpec sb(Backend be);
    static EquationSpec n4kdv(Backend be);
};

struct SolitonParams {
    struct One {
        Scalar kappa;
        Scalar amp;
        std::optional<GeneratorId> zeta;       // absent = fermionic sector off
        std::optional<GeneratorId> zetaHat;    // N=4 only
        std::optional<GeneratorId> zetaCheck;  // N=4 only
        Scalar lambda;                         // N=4 only
    };
    Backend backend = Backend::Exact;
    std::vector<One> solitons;

    int n() const { return static_cast<int>(solitons.size()); }

    // Convenience builder: kappas as rationals, amps = 1, zeta_i attached.
    static SolitonParams exactSolitons(const std::vector<Rat>& kappas, bool fermionic = true);
};

// dispersion: omega = -kappa^3 for SKdV/SmKdV/N=4, omega = i kappa^2 for SB
Scalar dispersion_omega(const EquationSpec& spec, const Scalar& kappa);

// Psi_i = kappa_i x + omega(kappa_i) t + theta+ zeta_i + theta+ theta- kappa_i
SuperExpr make_psi(const EquationSpec& spec, const SolitonParams& p, int i);

// A_ij = ((kappa_i - kappa_j)/(kappa_i + kappa_j))^2
Scalar interaction_coeff(const Scalar& ki, const Scalar& kj);

// tau_1 = sum_S (prod a_i)(prod A_ij) e^{sum Psi_i},
// tau_2 = same with (-1)^{|S|}. Optional overrides replace individual
// A_ij (used for negative controls).
std::pair<SuperExpr, SuperExpr> make_tau_pair(
    const EquationSpec& spec, const SolitonParams& p,
    const std::map<std::pair<int, int>, Scalar>& interactionOverride = {});

// H = 1 + sum_i a_i e^{Psi_i}
SuperExpr make_virtual_h(const EquationSpec& spec, const SolitonParams& p);

// A = beta H_x / H
SuperRational solution_from_h(const EquationSpec& spec, const SuperExpr& h);

// beta log(tau1/tau2) as an affine log field (only derivatives are ever
// materialized).
Field log_ratio_field(const SuperExpr& t1, const SuperExpr& t2, const Scalar& beta);

// Superfield components sampled at one point, in the theta+/theta- basis
// A = u + theta+ rho- + theta- rho+ + i theta+ theta- v (rho+- decomposed
// over the zeta basis).
struct ComponentSample {
    std::complex<double> u{};
    std::complex<double> v{};
    std::map<int, std::complex<double>> fMinus;  // rho- = sum_i fMinus[i] zeta_i
    std::map<int, std::complex<double>> fPlus;   // rho+ = sum_i fPlus[i] zeta_i
};

ComponentSample extract_components_at(const SuperRational& A, double x, double t);
ComponentSample extract_components_at(const GrassmannNumber& value);

// Closed forms of the virtual-soliton components:
//   u = beta sum a_i k_i e^{eta_i} / (1 + sum a_i e^{eta_i})
//   f_i = (a_i k_i e^{eta_i} + sum_j a_i a_j (k_i - k_j) e^{eta_i+eta_j})
//         / (1 + sum_j a_j e^{eta_j})^2
// and rho- = beta sum zeta_i f_i. Returns u and the f_i (without beta).
struct VirtualComponents {
    std::complex<double> u{};
    std::vector<std::complex<double>> f;
};

VirtualComponents closed_form_virtual_components(const EquationSpec& spec,
                                                 const SolitonParams& p, double x,
                                                 double t);

// Upsilon = 1 + sum_i e^{kappa_i x - kappa_i^3 t + phi_i},
// phi_i = thetaHat+ zetaHat_i + thetaCheck+ zetaCheck_i
//         + (thetaHat+ thetaHat- + thetaCheck+ thetaCheck-) kappa_i
//         + thetaHat+ thetaCheck+ lambda_i.
SuperExpr make_n4_upsilon(const SolitonParams& p);

// phi_i alone (exponent superfield of the N=4 virtual soliton).
SuperExpr make_n4_phi(const SolitonParams& p, int i);

// Bit remap sending the hat sector (thetaHat+-, zetaHat_i) onto the plain
// sector (theta+-, zeta_i); used to compare stripped N=4 superfields with
// their N=2 counterparts.
std::vector<int> hatToPlainBitMap();

// Mask of every check-sector generator (thetaCheck+-, zetaCheck_i).
MonomialMask checkSectorMask();
MonomialMask checkPlusMask();  // thetaCheck+ only

}  // namespace supersol

#endif
