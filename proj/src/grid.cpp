#include "fvn/grid.hpp"

#include <stdexcept>
#include <utility>

namespace fvn {

GridSeries make_series(std::string label, std::vector<double> xs, std::vector<double> ys) {
    if (xs.size() != ys.size()) {
        throw std::invalid_argument("GridSeries '" + label + "': xs and ys sizes differ");
    }
    for (std::size_t i = 1; i < xs.size(); ++i) {
        if (!(xs[i - 1] < xs[i])) {
            throw std::invalid_argument("GridSeries '" + label + "': xs not strictly increasing");
        }
    }
    return GridSeries{std::move(xs), std::move(ys), std::move(label)};
}

std::vector<double> linspace(double lo, double hi, int n) {
    if (n < 2 || !(lo < hi)) {
        throw std::invalid_argument("linspace: need n >= 2 and lo < hi");
    }
    std::vector<double> xs(static_cast<std::size_t>(n));
    const double span = hi - lo;
    for (int i = 0; i < n; ++i) {
        xs[static_cast<std::size_t>(i)] = lo + span * i / (n - 1);
    }
    xs.front() = lo;
    xs.back() = hi;
    return xs;
}

double trapezoid_weight(const std::vector<double>& xs, std::size_t i) {
    const std::size_t n = xs.size();
    if (n < 2) return 0.0;
    if (i == 0) return 0.5 * (xs[1] - xs[0]);
    if (i == n - 1) return 0.5 * (xs[n - 1] - xs[n - 2]);
    return 0.5 * (xs[i + 1] - xs[i - 1]);
}

}  // namespace fvn
