#pragma once

#include <string>
#include <vector>

namespace fvn {

// Sampled curve: strictly increasing abscissae, matching values.
struct GridSeries {
    std::vector<double> xs;
    std::vector<double> ys;
    std::string label;
};

// Throws std::invalid_argument if sizes differ or xs is not strictly increasing.
GridSeries make_series(std::string label, std::vector<double> xs, std::vector<double> ys);

// n evenly spaced points with the endpoints hit exactly; n >= 2.
std::vector<double> linspace(double lo, double hi, int n);

// Trapezoidal weight of point i on an arbitrary strictly increasing grid.
double trapezoid_weight(const std::vector<double>& xs, std::size_t i);

}  // namespace fvn
