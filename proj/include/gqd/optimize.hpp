#pragma once

#include <functional>
#include <utility>
#include <vector>

namespace gqd {

/// Golden-section minimization on [a, b]; returns (argmin, value). The
/// function is assumed unimodal on the bracket.
std::pair<double, double> golden_min(const std::function<double(double)>& f, double a, double b,
                                     double xtol);

inline std::pair<double, double> golden_max(const std::function<double(double)>& f, double a,
                                            double b, double xtol) {
    auto [x, v] = golden_min([&](double t) { return -f(t); }, a, b, xtol);
    return {x, -v};
}

/// Bisection on a bracketing interval (f(a) and f(b) of opposite sign).
double bisect_root(const std::function<double(double)>& f, double a, double b, double fa,
                   double fb, double xtol);

struct NMResult {
    std::vector<double> x;
    double value = 0;
    int iterations = 0;
};

/// Derivative-free Nelder-Mead simplex descent. Stops when the simplex
/// value spread falls below f_tol or after max_iters reflections. Fully
/// deterministic: ties are broken by insertion order.
NMResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                     const std::vector<double>& x0, const std::vector<double>& step,
                     int max_iters, double f_tol);

}  // namespace gqd
