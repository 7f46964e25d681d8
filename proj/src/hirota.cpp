#include "supersol/hirota.hpp"

#include <vector>

namespace supersol {

namespace {

long long binom(int n, int k) {
    long long r = 1;
    for (int j = 1; j <= k; ++j) r = r * (n - j + 1) / j;
    return r;
}

}  // namespace

SuperExpr hirota_d(const SuperExpr& f, const SuperExpr& g, BilinearOrder ord) {
    Backend be = f.backend();
    // cache x/t derivatives of both arguments
    std::vector<std::vector<SuperExpr>> df(ord.nx + 1), dg(ord.nx + 1);
    for (int j = 0; j <= ord.nx; ++j) {
        df[j].reserve(ord.nt + 1);
        dg[j].reserve(ord.nt + 1);
        SuperExpr fx = j == 0 ? f : df[j - 1][0].dx();
        SuperExpr gx = j == 0 ? g : dg[j - 1][0].dx();
        df[j].push_back(fx);
        dg[j].push_back(gx);
        for (int k = 1; k <= ord.nt; ++k) {
            df[j].push_back(df[j][k - 1].dt());
            dg[j].push_back(dg[j][k - 1].dt());
        }
    }
    SuperExpr acc = SuperExpr::zero(be);
    for (int j = 0; j <= ord.nx; ++j) {
        for (int k = 0; k <= ord.nt; ++k) {
            long long c = binom(ord.nx, j) * binom(ord.nt, k);
            if ((ord.nx - j + ord.nt - k) % 2) c = -c;
            Scalar cs = be == Backend::Exact ? Scalar::fromInt(c)
                                             : Scalar::fromDouble(static_cast<double>(c));
            acc += cs * (df[j][k] * dg[ord.nx - j][ord.nt - k]);
        }
    }
    return acc;
}

std::pair<SuperExpr, SuperExpr> mkdv_bilinear_residuals(const SuperExpr& t1,
                                                        const SuperExpr& t2) {
    SuperExpr r1 = hirota_d(t1, t2, {0, 1}) + hirota_d(t1, t2, {3, 0});
    SuperExpr r2 = hirota_d(t1, t2, {2, 0});
    return {r1, r2};
}

ZPolynomial hirota_dz(const ZPolynomial& f, const ZPolynomial& g, int n) {
    std::vector<ZPolynomial> df{f}, dg{g};
    for (int j = 1; j <= n; ++j) {
        df.push_back(df.back().deriv());
        dg.push_back(dg.back().deriv());
    }
    ZPolynomial acc;
    for (int j = 0; j <= n; ++j) {
        CubicScalar c = CubicScalar::fromInt(binom(n, j) * ((n - j) % 2 ? -1 : 1));
        acc = acc + c * (df[j] * dg[n - j]);
    }
    return acc;
}

std::pair<ZPolynomial, ZPolynomial> yv_bilinear_residuals(const ZPolynomial& qn,
                                                          const ZPolynomial& qn1,
                                                          int n) {
    CubicScalar third{Rat(1, 3), Rat(0), Rat(0)};
    CubicScalar np1Third{Rat(n + 1, 3), Rat(0), Rat(0)};
    ZPolynomial r1 = hirota_dz(qn, qn1, 3) -
                     third * (ZPolynomial::z() * hirota_dz(qn, qn1, 1)) -
                     np1Third * (qn * qn1);
    ZPolynomial r2 = hirota_dz(qn, qn1, 2);
    return {r1, r2};
}

}  // namespace supersol
