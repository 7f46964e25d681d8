#include "supersol/similarity.hpp"

#include <cmath>
#include <complex>

#include "supersol/errors.hpp"

namespace supersol {

namespace {

constexpr double kBodyTol = 1e-9;  // below this the log-ratio has a pole

Rat normRat(Rat r) {
    // boost mpq keeps canonical form already; this is just a copy hook
    return r;
}

}  // namespace

void SimExpr::addTerm(const Rat& tpow, int zdeg, const CubicScalar& c) {
    if (c.isZero()) return;
    auto key = std::make_pair(normRat(tpow), zdeg);
    auto [it, inserted] = terms_.emplace(key, c);
    if (!inserted) {
        it->second = it->second + c;
        if (it->second.isZero()) terms_.erase(it);
    }
}

SimExpr SimExpr::fromTau(const SimilarityTau& tau) {
    SimExpr e;
    const auto& c = tau.q.coeffs();
    for (int k = 0; k < static_cast<int>(c.size()); ++k)
        e.addTerm(tau.prefactorExp, k, c[k]);
    return e;
}

SimExpr SimExpr::dx() const {
    // d/dx (t^a z^k) = k t^(a - 1/3) z^(k-1)
    SimExpr out;
    for (const auto& [key, c] : terms_) {
        const auto& [a, k] = key;
        if (k == 0) continue;
        out.addTerm(a - Rat(1, 3), k - 1, CubicScalar::fromInt(k) * c);
    }
    return out;
}

SimExpr SimExpr::dt() const {
    // d/dt (t^a z^k) = (a - k/3) t^(a-1) z^k
    SimExpr out;
    for (const auto& [key, c] : terms_) {
        const auto& [a, k] = key;
        Rat factor = a - Rat(k, 3);
        if (factor == 0) continue;
        out.addTerm(a - 1, k, CubicScalar::fromRat(factor) * c);
    }
    return out;
}

SimExpr operator+(const SimExpr& a, const SimExpr& b) {
    SimExpr out = a;
    for (const auto& [key, c] : b.terms_) out.addTerm(key.first, key.second, c);
    return out;
}

SimExpr operator-(const SimExpr& a, const SimExpr& b) {
    SimExpr out = a;
    for (const auto& [key, c] : b.terms_) out.addTerm(key.first, key.second, -c);
    return out;
}

SimExpr operator*(const SimExpr& a, const SimExpr& b) {
    SimExpr out;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_)
            out.addTerm(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return out;
}

SimExpr operator*(const CubicScalar& c, const SimExpr& a) {
    SimExpr out;
    for (const auto& [key, ca] : a.terms_) out.addTerm(key.first, key.second, c * ca);
    return out;
}

GrassmannNumber SimExpr::evalAt(double t, const GrassmannNumber& ztilde) const {
    if (!(t > 0.0)) throw SingularPointError("similarity expressions need t > 0");
    double zb = std::abs(ztilde.body().toComplex().imag()) == 0.0
                    ? ztilde.body().toComplex().real()
                    : throw SingularPointError("similarity variable must have a real body");
    GrassmannNumber soul = ztilde.soul();
    // soul^2 = 0 here (every monomial contains theta+), so
    // P(ztilde) = P(zb) + P'(zb) soul.
    double body = 0.0, slope = 0.0;
    for (const auto& [key, c] : terms_) {
        const auto& [a, k] = key;
        double w = c.toDouble() * std::pow(t, static_cast<double>(a));
        double zk = k == 0 ? 1.0 : std::pow(zb, k);
        body += w * zk;
        if (k > 0) slope += w * k * (k == 1 ? 1.0 : std::pow(zb, k - 1));
    }
    GrassmannNumber out = GrassmannNumber::fromScalar(Scalar::fromDouble(body));
    out += Scalar::fromDouble(slope) * soul;
    return out;
}

GrassmannNumber similarity_ztilde(double x, double t) {
    if (!(t > 0.0)) throw SingularPointError("similarity variable needs t > 0");
    double s = std::pow(t, -1.0 / 3.0);
    GrassmannNumber z = GrassmannNumber::fromScalar(Scalar::fromDouble(s * x));
    MonomialMask tp = MonomialMask(1) << GeneratorId::thetaPlus().bit();
    MonomialMask tm = MonomialMask(1) << GeneratorId::thetaMinus().bit();
    MonomialMask z1 = MonomialMask(1) << GeneratorId::zeta(0).bit();
    z.addTerm(tp | z1, Scalar::fromDouble(s));
    z.addTerm(tp | tm, Scalar::fromDouble(s));
    return z;
}

namespace {

SimExpr simHirota(const SimExpr& f, const SimExpr& g, int nx, int nt) {
    auto binom = [](int n, int k) {
        long long r = 1;
        for (int j = 1; j <= k; ++j) r = r * (n - j + 1) / j;
        return r;
    };
    std::vector<std::vector<SimExpr>> df(nx + 1), dg(nx + 1);
    for (int j = 0; j <= nx; ++j) {
        df[j].push_back(j == 0 ? f : df[j - 1][0].dx());
        dg[j].push_back(j == 0 ? g : dg[j - 1][0].dx());
        for (int k = 1; k <= nt; ++k) {
            df[j].push_back(df[j][k - 1].dt());
            dg[j].push_back(dg[j][k - 1].dt());
        }
    }
    SimExpr acc;
    for (int j = 0; j <= nx; ++j)
        for (int k = 0; k <= nt; ++k) {
            long long c = binom(nx, j) * binom(nt, k);
            if ((nx - j + nt - k) % 2) c = -c;
            acc = acc + CubicScalar::fromInt(c) * (df[j][k] * dg[nx - j][nt - k]);
        }
    return acc;
}

}  // namespace

std::pair<SimExpr, SimExpr> similarity_bilinear_residuals(int n) {
    SimExpr f = SimExpr::fromTau(similarity_tau(n));
    SimExpr g = SimExpr::fromTau(similarity_tau(n + 1));
    SimExpr r1 = simHirota(f, g, 0, 1) + simHirota(f, g, 3, 0);
    SimExpr r2 = simHirota(f, g, 2, 0);
    return {r1, r2};
}

SimilarityGridReport similarity_bilinear_grid(int n, const std::vector<double>& xs,
                                              const std::vector<double>& ts) {
    auto [r1, r2] = similarity_bilinear_residuals(n);
    SimilarityGridReport rep;
    for (double t : ts) {
        for (double x : xs) {
            GrassmannNumber zt = similarity_ztilde(x, t);
            for (const SimExpr* r : {&r1, &r2}) {
                GrassmannNumber v = r->evalAt(t, zt);
                for (const auto& [m, c] : v.terms())
                    rep.maxAbs = std::max(rep.maxAbs, std::abs(c.toComplex()));
            }
            ++rep.pointsSampled;
        }
    }
    return rep;
}

SimilarityGridReport similarity_smkdv_grid(int n, const std::vector<double>& xs,
                                           const std::vector<double>& ts) {
    SimExpr f1 = SimExpr::fromTau(similarity_tau(n));
    SimExpr f2 = SimExpr::fromTau(similarity_tau(n + 1));
    struct Partials {
        SimExpr f, fx, fxx, fxxx, ft;
    };
    auto mk = [](const SimExpr& f) {
        Partials p{f, f.dx(), {}, {}, f.dt()};
        p.fxx = p.fx.dx();
        p.fxxx = p.fxx.dx();
        return p;
    };
    Partials p1 = mk(f1), p2 = mk(f2);

    SimilarityGridReport rep;
    Scalar ihalf = Scalar::fromDouble(0.0, 0.5);
    for (double t : ts) {
        for (double x : xs) {
            GrassmannNumber zt = similarity_ztilde(x, t);
            struct LogD {
                GrassmannNumber lx, lxx, lxxx, lt;
            };
            bool singular = false;
            auto logd = [&](const Partials& p) {
                GrassmannNumber tau = p.f.evalAt(t, zt);
                if (std::abs(tau.body().toComplex()) < kBodyTol) {
                    singular = true;
                    return LogD{};
                }
                GrassmannNumber inv = g_inv(tau);
                LogD d;
                d.lx = p.fx.evalAt(t, zt) * inv;
                d.lxx = p.fxx.evalAt(t, zt) * inv - d.lx * d.lx;
                d.lxxx = p.fxxx.evalAt(t, zt) * inv -
                         Scalar::fromDouble(3.0) * (d.lxx * d.lx) - d.lx * d.lx * d.lx;
                d.lt = p.ft.evalAt(t, zt) * inv;
                return d;
            };
            LogD d1 = logd(p1);
            LogD d2 = singular ? LogD{} : logd(p2);
            if (singular) {
                ++rep.skipped;
                continue;
            }
            // A = (i/2)(log tau_n - log tau_{n+1}); residual of
            // A_t + A_xxx + 8 A_x^3
            GrassmannNumber ax = ihalf * (d1.lx - d2.lx);
            GrassmannNumber axxx = ihalf * (d1.lxxx - d2.lxxx);
            GrassmannNumber at = ihalf * (d1.lt - d2.lt);
            GrassmannNumber res = at + axxx + Scalar::fromDouble(8.0) * (ax * ax * ax);
            for (const auto& [m, c] : res.terms())
                rep.maxAbs = std::max(rep.maxAbs, std::abs(c.toComplex()));
            ++rep.pointsSampled;
        }
    }
    return rep;
}

}  // namespace supersol
