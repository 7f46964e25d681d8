// Command-line driver: solution verification, Yablonskii-Vorob'ev tables,
// figure data emission and component dumps.

#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "supersol/errors.hpp"
#include "supersol/figures.hpp"
#include "supersol/hirota.hpp"
#include "supersol/pde.hpp"
#include "supersol/similarity.hpp"
#include "supersol/solutions.hpp"
#include "supersol/yv.hpp"

using nlohmann::json;
using namespace supersol;

namespace {

struct SpecFile {
    std::string equation;  // skdv | smkdv | sb | n4kdv
    long a = 0;
    int n = 0;
    std::vector<json> kappas;
    std::vector<json> amps;
    bool fermionic = true;
    std::vector<json> lambdas;
    std::optional<int> similarityN;
    std::map<std::pair<int, int>, json> interactionOverride;  // 0-based, i < j
};

Rat ratFromJson(const json& v, const char* what) {
    try {
        if (v.is_number_integer()) return Rat(v.get<long>());
        if (v.is_number_float()) return Rat(v.get<double>());  // exact binary fraction
        if (v.is_string()) return Rat(v.get<std::string>());
    } catch (const std::exception&) {
    }
    throw SchemaError(std::string(what) + ": expected an integer, float or \"p/q\" string, got " +
                      v.dump());
}

Scalar exactFromJson(const json& v, const char* what) {
    if (v.is_string()) {
        std::string s = v.get<std::string>();
        if (s == "i") return Scalar::i();
        if (s == "-i") return -Scalar::i();
    }
    return Scalar::fromRat(ratFromJson(v, what));
}

std::complex<double> complexFromString(const std::string& s) {
    if (s == "i") return {0.0, 1.0};
    if (s == "-i") return {0.0, -1.0};
    if (!s.empty() && s.back() == 'i') {
        std::string head = s.substr(0, s.size() - 1);
        // "a+bi" / "a-bi" / "bi"
        for (size_t k = head.size(); k-- > 1;) {
            if ((head[k] == '+' || head[k] == '-') && head[k - 1] != 'e' && head[k - 1] != 'E') {
                double re = std::stod(head.substr(0, k));
                std::string im = head.substr(k);
                double imv = im == "+" ? 1.0 : im == "-" ? -1.0 : std::stod(im);
                return {re, imv};
            }
        }
        return {0.0, head.empty() ? 1.0 : std::stod(head)};
    }
    size_t slash = s.find('/');
    if (slash != std::string::npos)
        return {std::stod(s.substr(0, slash)) / std::stod(s.substr(slash + 1)), 0.0};
    return {std::stod(s), 0.0};
}

Scalar floatFromJson(const json& v, const char* what) {
    try {
        if (v.is_number()) return Scalar::fromDouble(v.get<double>());
        if (v.is_string()) {
            std::complex<double> c = complexFromString(v.get<std::string>());
            return Scalar::fromDouble(c.real(), c.imag());
        }
    } catch (const std::exception&) {
    }
    throw SchemaError(std::string(what) + ": expected a number or complex string, got " + v.dump());
}

SpecFile parseSpecFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open spec file " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw SchemaError(std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object()) throw SchemaError("spec must be a JSON object");
    SpecFile s;
    if (!j.contains("equation") || !j["equation"].is_string())
        throw SchemaError("missing string field \"equation\"");
    s.equation = j["equation"].get<std::string>();
    if (s.equation != "skdv" && s.equation != "smkdv" && s.equation != "sb" &&
        s.equation != "n4kdv")
        throw SchemaError("equation must be one of skdv, smkdv, sb, n4kdv");
    if (s.equation == "skdv") {
        if (!j.contains("a") || !j["a"].is_number_integer())
            throw SchemaError("skdv needs an integer field \"a\" in {-2, 1, 4}");
        s.a = j["a"].get<long>();
        if (s.a != -2 && s.a != 1 && s.a != 4)
            throw SchemaError("skdv parameter a must be -2, 1 or 4");
    }
    if (j.contains("similarity_n")) {
        if (!j["similarity_n"].is_number_integer() || j["similarity_n"].get<int>() < 0)
            throw SchemaError("similarity_n must be a non-negative integer");
        s.similarityN = j["similarity_n"].get<int>();
        if (s.equation != "smkdv" && !(s.equation == "skdv" && s.a == -2))
            throw SchemaError("similarity solutions exist for smkdv and skdv a=-2 only");
        return s;
    }
    if (!j.contains("N") || !j["N"].is_number_integer())
        throw SchemaError("missing integer field \"N\"");
    s.n = j["N"].get<int>();
    if (s.n < 1 || s.n > 8) throw SchemaError("N must be in 1..8");
    if (!j.contains("kappas") || !j["kappas"].is_array() ||
        static_cast<int>(j["kappas"].size()) != s.n)
        throw SchemaError("\"kappas\" must be an array of length N");
    for (const auto& v : j["kappas"]) s.kappas.push_back(v);
    if (j.contains("amps")) {
        if (!j["amps"].is_array() || static_cast<int>(j["amps"].size()) != s.n)
            throw SchemaError("\"amps\" must be an array of length N");
        for (const auto& v : j["amps"]) s.amps.push_back(v);
    }
    if (j.contains("fermionic")) {
        if (!j["fermionic"].is_boolean()) throw SchemaError("\"fermionic\" must be a boolean");
        s.fermionic = j["fermionic"].get<bool>();
    }
    if (j.contains("n4")) {
        if (s.equation != "n4kdv") throw SchemaError("\"n4\" block is only valid for n4kdv");
        const json& n4 = j["n4"];
        if (!n4.is_object() || !n4.contains("lambdas") || !n4["lambdas"].is_array() ||
            static_cast<int>(n4["lambdas"].size()) != s.n)
            throw SchemaError("\"n4.lambdas\" must be an array of length N");
        for (const auto& v : n4["lambdas"]) s.lambdas.push_back(v);
    }
    if (j.contains("interaction_override")) {
        if (!j["interaction_override"].is_array())
            throw SchemaError("\"interaction_override\" must be an array of {i, j, value}");
        for (const auto& o : j["interaction_override"]) {
            if (!o.is_object() || !o.contains("i") || !o.contains("j") || !o.contains("value"))
                throw SchemaError("interaction_override entries need fields i, j, value");
            int i = o["i"].get<int>() - 1, jj = o["j"].get<int>() - 1;
            if (i < 0 || jj < 0 || i >= s.n || jj >= s.n || i >= jj)
                throw SchemaError("interaction_override indices must satisfy 1 <= i < j <= N");
            s.interactionOverride[{i, jj}] = o["value"];
        }
    }
    return s;
}

SolitonParams buildParams(const SpecFile& s, Backend be) {
    SolitonParams p;
    p.backend = be;
    for (int i = 0; i < s.n; ++i) {
        SolitonParams::One one;
        one.kappa = be == Backend::Exact ? exactFromJson(s.kappas[i], "kappas")
                                         : floatFromJson(s.kappas[i], "kappas");
        if (i < static_cast<int>(s.amps.size()))
            one.amp = be == Backend::Exact ? exactFromJson(s.amps[i], "amps")
                                           : floatFromJson(s.amps[i], "amps");
        else
            one.amp = Scalar::one(be);
        if (s.fermionic) {
            if (s.equation == "n4kdv") {
                one.zetaHat = GeneratorId::zetaHat(i);
                one.zetaCheck = GeneratorId::zetaCheck(i);
            } else {
                one.zeta = GeneratorId::zeta(i);
            }
        }
        one.lambda = i < static_cast<int>(s.lambdas.size())
                         ? (be == Backend::Exact ? exactFromJson(s.lambdas[i], "lambdas")
                                                 : floatFromJson(s.lambdas[i], "lambdas"))
                         : Scalar::zero(be);
        p.solitons.push_back(std::move(one));
    }
    return p;
}

std::map<std::pair<int, int>, Scalar> buildOverrides(const SpecFile& s, Backend be) {
    std::map<std::pair<int, int>, Scalar> out;
    for (const auto& [key, v] : s.interactionOverride)
        out[key] = be == Backend::Exact ? exactFromJson(v, "interaction_override")
                                        : floatFromJson(v, "interaction_override");
    return out;
}

EquationSpec equationOf(const SpecFile& s, Backend be) {
    if (s.equation == "skdv") return EquationSpec::skdv(s.a, be);
    if (s.equation == "smkdv") return EquationSpec::smkdv(be);
    if (s.equation == "sb") return EquationSpec::sb(be);
    return EquationSpec::n4kdv(be);
}

json check(const std::string& name, bool pass) {
    return json{{"name", name}, {"pass", pass}, {"symbolic_zero", pass}};
}

json gridCheck(const std::string& name, double maxAbs, int sampled, int skipped, double tol) {
    return json{{"name", name},        {"pass", maxAbs < tol},
                {"grid_max_abs", maxAbs}, {"points_sampled", sampled},
                {"skipped", skipped},  {"tolerance", tol}};
}

const std::vector<double> kGridX = linspace(-10.0, 10.0, 21);
const std::vector<double> kGridT = {-20.0, -10.0, 0.0, 10.0, 20.0};
constexpr double kGridTol = 1e-8;

void gridResidualChecks(json& checks, const EquationSpec& eq, const Field& field,
                        bool includeFull) {
    ResidualReport r = grid_residual(eq, field, ResidualForm::Reduced, kGridX, kGridT);
    checks.push_back(gridCheck("reduced_equation_grid", *r.gridMaxAbs, *r.pointsSampled,
                               r.skipped, kGridTol));
    if (includeFull) {
        r = grid_residual(eq, field, ResidualForm::Full, kGridX, kGridT);
        checks.push_back(gridCheck("full_equation_grid", *r.gridMaxAbs, *r.pointsSampled,
                                   r.skipped, kGridTol));
    }
}

json verifySimilarity(const SpecFile& s) {
    int n = *s.similarityN;
    if (n > 8) throw SchemaError("similarity_n is limited to 8");
    std::vector<double> xs = linspace(-5.0, 5.0, 21);
    std::vector<double> ts = {1.0, 2.0};
    json checks = json::array();
    SimilarityGridReport b = similarity_bilinear_grid(n, xs, ts);
    checks.push_back(gridCheck("bilinear_system_grid", b.maxAbs, b.pointsSampled, b.skipped,
                               kGridTol));
    SimilarityGridReport r = similarity_smkdv_grid(n, xs, ts);
    checks.push_back(
        gridCheck("reduced_equation_grid", r.maxAbs, r.pointsSampled, r.skipped, kGridTol));
    return checks;
}

json runVerify(const SpecFile& s, bool exactMode) {
    json checks = json::array();
    if (s.similarityN) {
        checks = verifySimilarity(s);
    } else if (s.equation == "smkdv" || (s.equation == "skdv" && s.a == -2)) {
        Backend be = exactMode ? Backend::Exact : Backend::Float;
        EquationSpec eq = equationOf(s, be);
        SolitonParams p = buildParams(s, be);
        auto [t1, t2] = make_tau_pair(eq, p, buildOverrides(s, be));
        checks.push_back(check("chiral_tau", sf_is_chiral(t1, Deriv::DPlus) &&
                                                 sf_is_chiral(t2, Deriv::DPlus)));
        auto [r1, r2] = mkdv_bilinear_residuals(t1, t2);
        bool bz = exactMode ? (r1.isZero() && r2.isZero())
                            : (r1.isZero(kGridTol) && r2.isZero(kGridTol));
        checks.push_back(check("bilinear_system", bz));
        Field field = log_ratio_field(t1, t2, eq.beta);
        if (s.equation == "smkdv") {
            if (exactMode) {
                checks.push_back(
                    check("reduced_equation", residual_reduced(eq, field).isZero()));
                checks.push_back(check("full_equation", residual_full(eq, field).isZero()));
            } else {
                gridResidualChecks(checks, eq, field, true);
            }
        } else {
            // skdv a=-2: the log ratio is the potential; the field is its
            // x-derivative.
            Field potential = log_ratio_field(t1, t2, eq.beta);
            Field aField(potential.derive(Deriv::Dx).value());
            if (exactMode) {
                checks.push_back(
                    check("potential_equation", residual_potential(eq, potential).isZero()));
                checks.push_back(
                    check("reduced_equation", residual_reduced(eq, aField).isZero()));
                checks.push_back(check("full_equation", residual_full(eq, aField).isZero()));
            } else {
                ResidualReport r =
                    grid_residual(eq, potential, ResidualForm::Potential, kGridX, kGridT);
                checks.push_back(gridCheck("potential_equation_grid", *r.gridMaxAbs,
                                           *r.pointsSampled, r.skipped, kGridTol));
                gridResidualChecks(checks, eq, aField, true);
            }
        }
    } else if (s.equation == "n4kdv") {
        Backend be = exactMode ? Backend::Exact : Backend::Float;
        SolitonParams p = buildParams(s, be);
        SuperExpr upsilon = make_n4_upsilon(p);
        checks.push_back(check("doubly_chiral",
                               sf_is_chiral(upsilon, Deriv::DHatPlus) &&
                                   sf_is_chiral(upsilon, Deriv::DCheckPlus)));
        Scalar quarter = be == Backend::Exact ? Scalar::rational(1, 4) : Scalar::fromDouble(0.25);
        Field gamma = Field::logField({{quarter, upsilon}});
        EquationSpec eq = EquationSpec::n4kdv(be);
        if (exactMode) {
            checks.push_back(check("reduced_equation", residual_reduced(eq, gamma).isZero()));
            if (s.n <= 2)
                checks.push_back(check("full_equation", residual_full(eq, gamma).isZero()));
        } else {
            gridResidualChecks(checks, eq, gamma, s.n <= 2);
        }
    } else {
        // skdv a in {1,4} and sb: virtual-soliton route
        Backend be = exactMode ? Backend::Exact : Backend::Float;
        EquationSpec eq = equationOf(s, be);
        SolitonParams p = buildParams(s, be);
        SuperExpr h = make_virtual_h(eq, p);
        LinearForm lf = s.equation == "sb" ? LinearForm::Schrodinger : LinearForm::Dispersive;
        SuperExpr lin = residual_linear(lf, h);
        checks.push_back(check("linear_equation", exactMode ? lin.isZero() : lin.isZero(kGridTol)));
        checks.push_back(check("chiral_h", sf_is_chiral(h, Deriv::DPlus)));
        int expTerms = static_cast<int>(h.terms().size());
        checks.push_back(json{{"name", "virtual_term_count"},
                              {"pass", expTerms == s.n + 1},
                              {"terms", expTerms}});
        Field field(solution_from_h(eq, h));
        if (exactMode) {
            checks.push_back(check("reduced_equation", residual_reduced(eq, field).isZero()));
            checks.push_back(check("full_equation", residual_full(eq, field).isZero()));
        } else {
            gridResidualChecks(checks, eq, field, true);
        }
    }
    bool pass = true;
    for (const auto& c : checks) pass = pass && c["pass"].get<bool>();
    return json{{"equation", s.similarityN ? s.equation + "_similarity" : s.equation},
                {"mode", exactMode && !s.similarityN ? "symbolic" : "grid"},
                {"checks", checks},
                {"pass", pass}};
}

json sampleToJson(double x, double t, const ComponentSample& c, int n) {
    json f = json::array();
    for (int i = 0; i < n; ++i) {
        auto it = c.fMinus.find(i);
        std::complex<double> v = it == c.fMinus.end() ? 0.0 : it->second;
        f.push_back(json::array({v.real(), v.imag()}));
    }
    return json{{"x", x},
                {"t", t},
                {"u", json::array({c.u.real(), c.u.imag()})},
                {"v", json::array({c.v.real(), c.v.imag()})},
                {"f", f}};
}

json runSolve(const SpecFile& s) {
    json samples = json::array();
    if (s.similarityN) {
        int n = *s.similarityN;
        SimExpr f1 = SimExpr::fromTau(similarity_tau(n));
        SimExpr f2 = SimExpr::fromTau(similarity_tau(n + 1));
        SimExpr f1x = f1.dx(), f2x = f2.dx();
        for (double t : {1.0, 2.0}) {
            for (double x : linspace(-5.0, 5.0, 21)) {
                GrassmannNumber zt = similarity_ztilde(x, t);
                GrassmannNumber v1 = f1.evalAt(t, zt), v2 = f2.evalAt(t, zt);
                if (std::abs(v1.body().toComplex()) < 1e-9 ||
                    std::abs(v2.body().toComplex()) < 1e-9)
                    continue;
                // A_n = 2 d/dx Atilde_n = i (log tau_n - log tau_{n+1})_x
                GrassmannNumber a = Scalar::fromDouble(0.0, 1.0) *
                                    (f1x.evalAt(t, zt) * g_inv(v1) -
                                     f2x.evalAt(t, zt) * g_inv(v2));
                samples.push_back(sampleToJson(x, t, extract_components_at(a), 1));
            }
        }
        return json{{"equation", s.equation + "_similarity"}, {"samples", samples}};
    }
    Backend be = Backend::Float;
    EquationSpec eq = equationOf(s, be);
    SolitonParams p = buildParams(s, be);
    std::vector<double> xs = linspace(-10.0, 10.0, 41);
    if (s.equation == "smkdv" || (s.equation == "skdv" && s.a == -2)) {
        auto [t1, t2] = make_tau_pair(eq, p, buildOverrides(s, be));
        for (double t : kGridT)
            for (double x : xs) {
                GrassmannNumber v1 = t1.eval(Scalar::fromDouble(x), Scalar::fromDouble(t));
                GrassmannNumber v2 = t2.eval(Scalar::fromDouble(x), Scalar::fromDouble(t));
                GrassmannNumber diff = g_analytic(AnalyticFn::Log, v1) -
                                       g_analytic(AnalyticFn::Log, v2);
                GrassmannNumber val = eq.beta * diff;
                if (s.equation == "skdv") {
                    // field is the x-derivative of the potential; sample the
                    // potential's components instead of differentiating
                    // numerically: A = beta (t1x/t1 - t2x/t2)
                    GrassmannNumber d1 =
                        t1.dx().eval(Scalar::fromDouble(x), Scalar::fromDouble(t)) * g_inv(v1);
                    GrassmannNumber d2 =
                        t2.dx().eval(Scalar::fromDouble(x), Scalar::fromDouble(t)) * g_inv(v2);
                    val = eq.beta * (d1 - d2);
                }
                samples.push_back(sampleToJson(x, t, extract_components_at(val), s.n));
            }
    } else if (s.equation == "n4kdv") {
        throw SchemaError("solve does not support n4kdv component dumps");
    } else {
        SuperRational a = solution_from_h(eq, make_virtual_h(eq, p));
        for (double t : kGridT)
            for (double x : xs)
                samples.push_back(sampleToJson(x, t, extract_components_at(a, x, t), s.n));
    }
    return json{{"equation", s.equation}, {"samples", samples}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"soliton and similarity solution toolkit"};
    app.require_subcommand(1);

    std::string specPath, mode = "exact", outPath = "sol.json", outDir = ".";
    int figureId = 1, yvN = 0;
    std::vector<std::string> ampStrs;

    CLI::App* verify = app.add_subcommand("verify", "run the verification suite for a spec");
    verify->add_option("--spec", specPath, "solution spec JSON file")->required();
    verify->add_option("--mode", mode, "exact or grid")->check(CLI::IsMember({"exact", "grid"}));

    CLI::App* figures = app.add_subcommand("figures", "emit figure CSV/SVG data");
    figures->add_option("--id", figureId, "figure id 1..5")->required();
    figures->add_option("--amp", ampStrs, "amplitude overrides (complex, e.g. 1, i, 0.5+2i)");
    figures->add_option("--out", outDir, "output directory");

    CLI::App* yv = app.add_subcommand("yv", "print exact polynomial table");
    yv->add_option("--n", yvN, "highest index")->required();

    CLI::App* solve = app.add_subcommand("solve", "dump solution components on a grid");
    solve->add_option("--spec", specPath, "solution spec JSON file")->required();
    solve->add_option("--out", outPath, "output JSON file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? 2 : 0;
    }

    try {
        if (verify->parsed()) {
            json report = runVerify(parseSpecFile(specPath), mode == "exact");
            std::cout << report.dump(2) << "\n";
            return report["pass"].get<bool>() ? 0 : 1;
        }
        if (figures->parsed()) {
            FigureJob job = FigureJob::defaults(figureId);
            for (const auto& sAmp : ampStrs) {
                std::complex<double> c = complexFromString(sAmp);
                job.amps.push_back(Scalar::fromDouble(c.real(), c.imag()));
            }
            job.outDir = outDir;
            for (const auto& f : run_figure(job)) std::cout << f << "\n";
            return 0;
        }
        if (yv->parsed()) {
            if (yvN < 0 || yvN > 12) throw SchemaError("yv index must be in 0..12 (cost guard)");
            auto seq = yv_sequence(yvN);
            for (int i = 0; i <= yvN; ++i)
                std::cout << "Q_" << i << " = " << seq[i].str() << "\n";
            return 0;
        }
        if (solve->parsed()) {
            json out = runSolve(parseSpecFile(specPath));
            std::ofstream f(outPath, std::ios::binary);
            if (!f) throw Error("cannot write " + outPath);
            f << out.dump(2) << "\n";
            std::cout << "wrote " << outPath << "\n";
            return 0;
        }
    } catch (const SchemaError& e) {
        std::cerr << "schema error: " << e.what() << "\n";
        return 2;
    } catch (const IntegrityError& e) {
        std::cerr << "integrity error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
