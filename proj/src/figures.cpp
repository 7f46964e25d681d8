#include "supersol/figures.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <thread>

#include "supersol/errors.hpp"

namespace supersol {

namespace {

int workerCount() {
    const char* env = std::getenv("SUPERSOL_WORKERS");
    if (!env) return 1;
    int n = std::atoi(env);
    if (n < 1) return 1;
    unsigned hw = std::thread::hardware_concurrency();
    if (hw > 0 && n > static_cast<int>(hw)) n = static_cast<int>(hw);
    return n;
}

template <typename F>
void parallelFor(int n, F&& body) {
    int workers = std::min(workerCount(), n > 0 ? n : 1);
    if (workers <= 1) {
        for (int i = 0; i < n; ++i) body(i);
        return;
    }
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (int w = 0; w < workers; ++w)
        threads.emplace_back([&, w] {
            for (int i = w; i < n; i += workers) body(i);
        });
    for (auto& t : threads) t.join();
}

SolitonParams jobParams(const FigureJob& job, bool smkdvAmps) {
    SolitonParams p;
    p.backend = Backend::Float;
    for (size_t i = 0; i < job.kappas.size(); ++i) {
        SolitonParams::One s;
        s.kappa = Scalar::fromDouble(job.kappas[i]);
        if (i < job.amps.size())
            s.amp = job.amps[i];
        else
            s.amp = smkdvAmps ? Scalar::fromDouble(0.0, 1.0) : Scalar::fromDouble(1.0);
        s.zeta = GeneratorId::zeta(static_cast<int>(i));
        s.lambda = Scalar::zero(Backend::Float);
        p.solitons.push_back(std::move(s));
    }
    return p;
}

bool isSmkdvFigure(int id) { return id == 1 || id == 2; }

// A = (i/2) log(tau1/tau2) evaluated at one point.
GrassmannNumber smkdvFieldValue(const SuperExpr& t1, const SuperExpr& t2, double x,
                                double t) {
    GrassmannNumber v1 = t1.eval(Scalar::fromDouble(x), Scalar::fromDouble(t));
    GrassmannNumber v2 = t2.eval(Scalar::fromDouble(x), Scalar::fromDouble(t));
    GrassmannNumber diff = g_analytic(AnalyticFn::Log, v1) - g_analytic(AnalyticFn::Log, v2);
    return Scalar::fromDouble(0.0, 0.5) * diff;
}

void writeFile(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out << content;
}

std::string svgLine(const std::vector<double>& xs, const std::vector<double>& vals) {
    const double w = 640, h = 400, m = 40;
    double ymin = *std::min_element(vals.begin(), vals.end());
    double ymax = *std::max_element(vals.begin(), vals.end());
    if (ymax - ymin < 1e-300) ymax = ymin + 1.0;
    double xmin = xs.front(), xmax = xs.back();
    std::string s = "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 640 400\">\n"
                    "<rect width=\"640\" height=\"400\" fill=\"white\"/>\n<polyline fill=\"none\" "
                    "stroke=\"black\" stroke-width=\"1\" points=\"";
    char buf[64];
    for (size_t i = 0; i < xs.size(); ++i) {
        double px = m + (xs[i] - xmin) / (xmax - xmin) * (w - 2 * m);
        double py = h - m - (vals[i] - ymin) / (ymax - ymin) * (h - 2 * m);
        std::snprintf(buf, sizeof buf, "%.2f,%.2f ", px, py);
        s += buf;
    }
    s += "\"/>\n</svg>\n";
    return s;
}

std::string svgDensity(const std::vector<double>& xs, const std::vector<double>& ts,
                       const std::vector<double>& vals) {
    const double w = 640, h = 400;
    int nx = static_cast<int>(xs.size()), nt = static_cast<int>(ts.size());
    int sx = (nx + 119) / 120, st = (nt + 79) / 80;
    double vmin = *std::min_element(vals.begin(), vals.end());
    double vmax = *std::max_element(vals.begin(), vals.end());
    if (vmax - vmin < 1e-300) vmax = vmin + 1.0;
    std::string s = "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 640 400\">\n";
    char buf[160];
    for (int it = 0; it < nt; it += st) {
        for (int ix = 0; ix < nx; ix += sx) {
            double v = vals[static_cast<size_t>(it) * nx + ix];
            int g = static_cast<int>(255.0 * (v - vmin) / (vmax - vmin));
            double px = static_cast<double>(ix) / nx * w;
            double py = h - static_cast<double>(it + st) / nt * h;
            double cw = w * sx / nx + 0.5, ch = h * st / nt + 0.5;
            std::snprintf(buf, sizeof buf,
                          "<rect x=\"%.2f\" y=\"%.2f\" width=\"%.2f\" height=\"%.2f\" "
                          "fill=\"rgb(%d,%d,%d)\"/>\n",
                          px, py, cw, ch, g, g, g);
            s += buf;
        }
    }
    s += "</svg>\n";
    return s;
}

std::string timeTag(double t) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", t);
    return buf;
}

}  // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::vector<double> linspace(double lo, double hi, int n) {
    if (n < 2) throw SchemaError("grid needs at least two points");
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[i] = lo + (hi - lo) * i / (n - 1);
    return v;
}

FigureJob FigureJob::defaults(int id) {
    if (id < 1 || id > 5) throw SchemaError("figure id must be 1..5");
    FigureJob job;
    job.figureId = id;
    switch (id) {
        case 1: job.times = {-20.0, 0.0, 20.0}; break;
        case 3: job.times = {0.0, 10.0, 20.0}; break;
        case 4: job.times = {-20.0, 0.0, 20.0}; break;
        default: break;  // density figures use the t range
    }
    if (id == 2 || id == 5) job.xCount = 201;
    return job;
}

std::vector<double> figure_line_values(const FigureJob& job, double t) {
    std::vector<double> xs = linspace(job.xMin, job.xMax, job.xCount);
    std::vector<double> out(xs.size(), 0.0);
    if (job.figureId == 1) {
        SolitonParams p = jobParams(job, true);
        EquationSpec spec = EquationSpec::smkdv(Backend::Float);
        auto [t1, t2] = make_tau_pair(spec, p);
        parallelFor(static_cast<int>(xs.size()), [&](int i) {
            ComponentSample c =
                extract_components_at(smkdvFieldValue(t1, t2, xs[i], t));
            out[i] = c.v.imag();
        });
    } else if (job.figureId == 3 || job.figureId == 4) {
        SolitonParams p = jobParams(job, false);
        EquationSpec spec = EquationSpec::skdv(1, Backend::Float);
        SuperRational a = solution_from_h(spec, make_virtual_h(spec, p));
        parallelFor(static_cast<int>(xs.size()), [&](int i) {
            ComponentSample c = extract_components_at(a, xs[i], t);
            out[i] = job.figureId == 3 ? c.u.imag() : c.v.real();
        });
    } else {
        throw SchemaError("line values exist for figures 1, 3, 4 only");
    }
    return out;
}

std::vector<double> figure_density_values(const FigureJob& job, int comp) {
    if (comp < 0 || comp >= static_cast<int>(job.kappas.size()))
        throw SchemaError("component index out of range");
    std::vector<double> xs = linspace(job.xMin, job.xMax, job.xCount);
    std::vector<double> ts = linspace(job.tMin, job.tMax, job.tCount);
    std::vector<double> out(xs.size() * ts.size(), 0.0);
    if (job.figureId == 2) {
        SolitonParams p = jobParams(job, true);
        EquationSpec spec = EquationSpec::smkdv(Backend::Float);
        auto [t1, t2] = make_tau_pair(spec, p);
        parallelFor(static_cast<int>(ts.size()), [&](int it) {
            for (size_t ix = 0; ix < xs.size(); ++ix) {
                ComponentSample c =
                    extract_components_at(smkdvFieldValue(t1, t2, xs[ix], ts[it]));
                auto f = c.fMinus.find(comp);
                out[it * xs.size() + ix] = f == c.fMinus.end() ? 0.0 : f->second.imag();
            }
        });
    } else if (job.figureId == 5) {
        SolitonParams p = jobParams(job, false);
        EquationSpec spec = EquationSpec::skdv(1, Backend::Float);
        std::complex<double> beta = spec.beta.toComplex();
        parallelFor(static_cast<int>(ts.size()), [&](int it) {
            for (size_t ix = 0; ix < xs.size(); ++ix) {
                VirtualComponents c =
                    closed_form_virtual_components(spec, p, xs[ix], ts[it]);
                out[it * xs.size() + ix] = (beta * c.f[comp]).imag();
            }
        });
    } else {
        throw SchemaError("density values exist for figures 2 and 5 only");
    }
    return out;
}

std::vector<std::string> run_figure(const FigureJob& job) {
    std::vector<std::string> written;
    std::vector<double> xs = linspace(job.xMin, job.xMax, job.xCount);
    std::string prefix = job.outDir + "/fig" + std::to_string(job.figureId);
    if (job.figureId == 2 || job.figureId == 5) {
        std::vector<double> ts = linspace(job.tMin, job.tMax, job.tCount);
        for (int comp = 0; comp < static_cast<int>(job.kappas.size()); ++comp) {
            std::vector<double> vals = figure_density_values(job, comp);
            std::string csv = "x,t,value\n";
            for (size_t it = 0; it < ts.size(); ++it)
                for (size_t ix = 0; ix < xs.size(); ++ix) {
                    double v = vals[it * xs.size() + ix];
                    if (!std::isfinite(v)) throw IntegrityError("non-finite figure value");
                    csv += format_double(xs[ix]) + "," + format_double(ts[it]) + "," +
                           format_double(v) + "\n";
                }
            std::string stem = prefix + "_f" + std::to_string(comp + 1);
            writeFile(stem + ".csv", csv);
            writeFile(stem + ".svg", svgDensity(xs, ts, vals));
            written.push_back(stem + ".csv");
            written.push_back(stem + ".svg");
        }
        return written;
    }
    if (job.times.empty()) throw SchemaError("line figure needs at least one time");
    for (double t : job.times) {
        std::vector<double> vals = figure_line_values(job, t);
        std::string csv = "x,value\n";
        for (size_t i = 0; i < xs.size(); ++i) {
            if (!std::isfinite(vals[i])) throw IntegrityError("non-finite figure value");
            csv += format_double(xs[i]) + "," + format_double(vals[i]) + "\n";
        }
        std::string stem = prefix + "_t" + timeTag(t);
        writeFile(stem + ".csv", csv);
        writeFile(stem + ".svg", svgLine(xs, vals));
        written.push_back(stem + ".csv");
        written.push_back(stem + ".svg");
    }
    return written;
}

std::vector<double> discrete_derivative(const std::vector<double>& xs,
                                        const std::vector<double>& vals) {
    size_t n = xs.size();
    std::vector<double> d(n, 0.0);
    for (size_t i = 1; i + 1 < n; ++i)
        d[i] = (vals[i + 1] - vals[i - 1]) / (xs[i + 1] - xs[i - 1]);
    if (n >= 2) {
        d[0] = d[1];
        d[n - 1] = d[n - 2];
    }
    return d;
}

int count_separated_extrema(const std::vector<double>& xs, const std::vector<double>& vals,
                            double minSeparation, double threshold) {
    int count = 0;
    double lastX = -1e300;
    for (size_t i = 1; i + 1 < vals.size(); ++i) {
        if (vals[i] < threshold) continue;
        if (vals[i] >= vals[i - 1] && vals[i] > vals[i + 1]) {
            if (xs[i] - lastX >= minSeparation) ++count;
            lastX = xs[i];
        }
    }
    return count;
}

}  // namespace supersol
