#ifndef SUPERSOL_FIGURES_HPP
#define SUPERSOL_FIGURES_HPP

#include <string>
#include <vector>

#include "supersol/solutions.hpp"

namespace supersol {

// One figure-emission job. Figures 1 and 2 show the 3-soliton SmKdV
// solution (default amplitudes i); figures 3-5 the 3-virtual-soliton
// SKdV_1 solution (default amplitudes 1). Figures 1, 3, 4 are line plots
// per time slice; figures 2 and 5 are (x,t) density plots of the
// fermionic components f_1..f_3.
struct FigureJob {
    int figureId = 1;
    std::vector<double> kappas{4.0 / 3.0, 1.0, 2.0 / 3.0};
    std::vector<Scalar> amps;  // float backend
    std::vector<double> times;
    double xMin = -50.0, xMax = 50.0;
    int xCount = 501;
    double tMin = -20.0, tMax = 20.0;  // density figures only
    int tCount = 81;
    std::string outDir = ".";

    static FigureJob defaults(int id);
};

std::vector<double> linspace(double lo, double hi, int n);

// Values of the plotted quantity along x at fixed t:
//   fig 1: Im(v) of the SmKdV 3-soliton,
//   fig 3: Im(u) of the SKdV_1 virtual soliton,
//   fig 4: Re(v), v = -i u_x, of the SKdV_1 virtual soliton.
std::vector<double> figure_line_values(const FigureJob& job, double t);

// Values of Im(f_comp) on the (x,t) grid, row-major in t.
// comp is 0-based.
std::vector<double> figure_density_values(const FigureJob& job, int comp);

// Emit CSV and SVG files; returns the paths written.
std::vector<std::string> run_figure(const FigureJob& job);

// Count local maxima above `threshold`, merging maxima closer than
// `minSeparation` in x.
int count_separated_extrema(const std::vector<double>& xs, const std::vector<double>& vals,
                            double minSeparation, double threshold);

// Centered finite difference of vals on the grid xs.
std::vector<double> discrete_derivative(const std::vector<double>& xs,
                                        const std::vector<double>& vals);

std::string format_double(double v);  // %.17g, deterministic CSV cell

}  // namespace supersol

#endif
