#ifndef SUPERSOL_HIROTA_HPP
#define SUPERSOL_HIROTA_HPP

#include <utility>

#include "supersol/superfield.hpp"
#include "supersol/yv.hpp"

namespace supersol {

struct BilinearOrder {
    int nx = 0;
    int nt = 0;
};

// Hirota bilinear derivative
//   D_x^nx D_t^nt (f.g) = sum_{j,k} (-1)^{nx-j+nt-k} C(nx,j) C(nt,k)
//                         (dx^j dt^k f)(dx^{nx-j} dt^{nt-k} g).
SuperExpr hirota_d(const SuperExpr& f, const SuperExpr& g, BilinearOrder ord);

// Left-hand sides of the SmKdV/SKdV_-2 bilinear system
//   (D_t + D_x^3)(tau1.tau2) = 0,   D_x^2(tau1.tau2) = 0.
std::pair<SuperExpr, SuperExpr> mkdv_bilinear_residuals(const SuperExpr& t1,
                                                        const SuperExpr& t2);

// z-domain bilinear identities of consecutive Yablonskii-Vorob'ev
// polynomials:
//   (D_z^3 - (1/3) z D_z - (n+1)/3)(Q_n.Q_{n+1}) = 0
//   D_z^2(Q_n.Q_{n+1}) = 0,
// computed exactly over Q(3^(1/3)). The z-multiplied term acts as
// z * [D_z(Q_n.Q_{n+1})].
std::pair<ZPolynomial, ZPolynomial> yv_bilinear_residuals(const ZPolynomial& qn,
                                                          const ZPolynomial& qn1,
                                                          int n);

// Plain one-variable Hirota derivative on z-polynomials.
ZPolynomial hirota_dz(const ZPolynomial& f, const ZPolynomial& g, int n);

}  // namespace supersol

#endif
