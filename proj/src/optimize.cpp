#include "gqd/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "gqd/errors.hpp"

namespace gqd {

std::pair<double, double> golden_min(const std::function<double(double)>& f, double a, double b,
                                     double xtol) {
    const double invphi = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = b - invphi * (b - a);
    double x2 = a + invphi * (b - a);
    double f1 = f(x1);
    double f2 = f(x2);
    while (b - a > xtol) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = f(x2);
        }
    }
    const double xm = 0.5 * (a + b);
    return {xm, f(xm)};
}

double bisect_root(const std::function<double(double)>& f, double a, double b, double fa,
                   double fb, double xtol) {
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if ((fa > 0.0) == (fb > 0.0))
        fail(Errc::InvalidArgument, "bisection interval does not bracket a root");
    for (int it = 0; it < 200 && b - a > xtol; ++it) {
        const double m = 0.5 * (a + b);
        const double fm = f(m);
        if (fm == 0.0) return m;
        if ((fm > 0.0) == (fa > 0.0)) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    return 0.5 * (a + b);
}

NMResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                     const std::vector<double>& x0, const std::vector<double>& step,
                     int max_iters, double f_tol) {
    const int n = static_cast<int>(x0.size());
    std::vector<std::vector<double>> xs(n + 1, x0);
    for (int i = 0; i < n; ++i) xs[i + 1][i] += step[i];
    std::vector<double> fs(n + 1);
    for (int i = 0; i <= n; ++i) fs[i] = f(xs[i]);

    std::vector<int> order(n + 1);
    auto resort = [&] {
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return fs[a] < fs[b]; });
    };
    resort();

    std::vector<double> centroid(n), cand(n), cand2(n);
    int iters = 0;
    while (iters < max_iters && fs[order[n]] - fs[order[0]] > f_tol) {
        ++iters;
        const auto& worst = xs[order[n]];
        for (int k = 0; k < n; ++k) {
            double c = 0.0;
            for (int i = 0; i < n; ++i) c += xs[order[i]][k];
            centroid[k] = c / n;
        }
        auto along = [&](double coef, std::vector<double>& dst) {
            for (int k = 0; k < n; ++k) dst[k] = centroid[k] + coef * (centroid[k] - worst[k]);
        };
        auto replace_worst = [&](const std::vector<double>& x, double fx) {
            xs[order[n]] = x;
            fs[order[n]] = fx;
        };

        along(1.0, cand);
        const double fr = f(cand);
        bool accepted = true;
        if (fr < fs[order[0]]) {
            along(2.0, cand2);  // expansion
            const double fe = f(cand2);
            if (fe < fr)
                replace_worst(cand2, fe);
            else
                replace_worst(cand, fr);
        } else if (fr < fs[order[n - 1]]) {
            replace_worst(cand, fr);
        } else if (fr < fs[order[n]]) {
            along(0.5, cand2);  // outside contraction
            const double fc = f(cand2);
            if (fc <= fr)
                replace_worst(cand2, fc);
            else
                accepted = false;
        } else {
            along(-0.5, cand2);  // inside contraction
            const double fc = f(cand2);
            if (fc < fs[order[n]])
                replace_worst(cand2, fc);
            else
                accepted = false;
        }
        if (!accepted) {
            for (int i = 1; i <= n; ++i) {  // shrink toward the best vertex
                auto& xi = xs[order[i]];
                for (int k = 0; k < n; ++k)
                    xi[k] = xs[order[0]][k] + 0.5 * (xi[k] - xs[order[0]][k]);
                fs[order[i]] = f(xi);
            }
        }
        resort();
    }

    NMResult r;
    r.x = xs[order[0]];
    r.value = fs[order[0]];
    r.iterations = iters;
    return r;
}

}  // namespace gqd
