#include "gqd/dynamics.hpp"

#include <algorithm>
#include <cmath>

#include "gqd/eigen.hpp"
#include "gqd/optimize.hpp"

namespace gqd {

namespace {

constexpr double kKtMin = 1e-8;  // excludes the boundary root the condition admits at t = 0
constexpr double kKtMax = 12.0;  // xi^2 < 1e-5 past here; every measure sits on its asymptote
constexpr int kScanPoints = 2000;

}  // namespace

DynamicsPoint point(double alpha, double kappa_t) {
    if (!(alpha >= 0.0 && alpha <= 1.0))
        fail(Errc::InvalidArgument, "alpha must lie in [0, 1]", alpha);
    if (!(kappa_t >= 0.0)) fail(Errc::InvalidArgument, "kappa_t must be nonnegative", kappa_t);
    DynamicsPoint p;
    p.alpha = alpha;
    p.beta = std::sqrt(std::max(0.0, 1.0 - alpha * alpha));
    p.kappa_t = kappa_t;
    p.xi = std::exp(-0.5 * kappa_t);
    p.chi = std::sqrt(-std::expm1(-kappa_t));
    return p;
}

DynamicsPoint swapped(const DynamicsPoint& p) {
    if (p.chi <= 0.0)
        fail(Errc::InvalidArgument, "the exchanged point is undefined at kappa_t = 0");
    return point(p.alpha, -std::log(p.chi * p.chi));
}

const char* pair_name(PairLabel label) {
    switch (label) {
        case PairLabel::c1c2: return "c1c2";
        case PairLabel::r1r2: return "r1r2";
        case PairLabel::c1r1: return "c1r1";
        case PairLabel::c1r2: return "c1r2";
        case PairLabel::c1_c2r2: return "c1_c2r2";
        case PairLabel::c1_rest: return "c1_rest";
    }
    return "?";
}

std::optional<PairLabel> pair_from_name(std::string_view name) {
    for (PairLabel l : {PairLabel::c1c2, PairLabel::r1r2, PairLabel::c1r1, PairLabel::c1r2,
                        PairLabel::c1_c2r2, PairLabel::c1_rest})
        if (name == pair_name(l)) return l;
    return std::nullopt;
}

std::vector<cplx> output_state(const DynamicsPoint& p) {
    // alpha |0000> + beta (xi |10> + chi |01>)^{(x)2} over (c1 r1)(c2 r2).
    std::vector<cplx> psi(16, 0.0);
    psi[0b0000] = p.alpha;
    psi[0b1010] = p.beta * p.xi * p.xi;
    psi[0b1001] = p.beta * p.xi * p.chi;
    psi[0b0110] = p.beta * p.chi * p.xi;
    psi[0b0101] = p.beta * p.chi * p.chi;
    return psi;
}

namespace {

// Closed-form cavity-cavity state; the reservoir pair is the same family
// with the roles of the two amplitudes exchanged.
XState family_x(double alpha, double a, double b) {
    const double beta_sq = 1.0 - alpha * alpha;
    const double beta = std::sqrt(std::max(0.0, beta_sq));
    XState x;
    x.rho11 = alpha * alpha + beta_sq * b * b * b * b;
    x.rho22 = beta_sq * a * a * b * b;
    x.rho33 = x.rho22;
    x.rho44 = beta_sq * a * a * a * a;
    x.rho41 = alpha * beta * a * a;
    x.rho32 = 0.0;
    return x;
}

}  // namespace

XState pair_density(const DynamicsPoint& p, PairLabel label) {
    switch (label) {
        case PairLabel::c1c2: return family_x(p.alpha, p.xi, p.chi);
        case PairLabel::r1r2: return family_x(p.alpha, p.chi, p.xi);
        case PairLabel::c1r1: return x_project(reduce(output_state(p), 4, {0, 1}));
        case PairLabel::c1r2: return x_project(reduce(output_state(p), 4, {0, 3}));
        default:
            fail(Errc::InvalidArgument, "pair density needs a two-qubit label");
    }
}

MeasureSet pair_gqd(const DynamicsPoint& p, PairLabel label) {
    MeasureSet m = gqd_symmetric_x(pair_density(p, label));
    const double ab = p.alpha * p.beta;
    switch (label) {
        case PairLabel::c1c2: m.d_g1 = 2.0 * ab * p.xi * p.xi; break;
        case PairLabel::r1r2: m.d_g1 = 2.0 * ab * p.chi * p.chi; break;
        case PairLabel::c1r1: m.d_g1 = 2.0 * p.beta * p.beta * p.xi * p.chi; break;
        case PairLabel::c1r2: m.d_g1 = 2.0 * ab * p.xi * p.chi; break;
        default: break;  // unreachable; pair_density already rejected it
    }
    return m;
}

double bipartition_gqd1(const DynamicsPoint& p, PairLabel label) {
    const auto psi = output_state(p);
    switch (label) {
        case PairLabel::c1_c2r2: {
            const auto rho = reduce(psi, 4, {0, 2, 3});
            // Logical basis of the c2 r2 factor: {|00>, xi |10> + chi |01>}.
            const std::vector<cplx> b0 = {1.0, 0.0, 0.0, 0.0};
            const std::vector<cplx> b1 = {0.0, p.chi, p.xi, 0.0};
            return gqd_symmetric_x(logical_compress(rho, b0, b1)).d_g1;
        }
        case PairLabel::c1_rest: {
            const auto rho1 = reduce(psi, 4, {0});
            const auto es = hermitian_eigs(rho1.m, /*want_vectors=*/false);
            return pure_measures(SchmidtPair(es.values[1], es.values[0])).d_g1;
        }
        default:
            fail(Errc::InvalidArgument, "bipartition label must be c1_c2r2 or c1_rest");
    }
}

namespace {

double sudden_change_condition(double alpha, PairLabel label, double kt) {
    const auto d = x_spectral(pair_density(point(alpha, kt), label));
    return d.gamma1 * d.gamma1 - (d.gamma3 * d.gamma3 + d.x3 * d.x3);
}

double dg2_c1c2(double alpha, double kt) {
    return gqd_symmetric_x(family_x(alpha, std::exp(-0.5 * kt),
                                    std::sqrt(-std::expm1(-kt))))
        .d_g2;
}

}  // namespace

std::vector<double> sudden_change_roots(double alpha, PairLabel label) {
    if (!(alpha > 0.0 && alpha < 1.0))
        fail(Errc::InvalidArgument, "alpha must lie strictly inside (0, 1)", alpha);
    if (label == PairLabel::c1_c2r2 || label == PairLabel::c1_rest)
        fail(Errc::InvalidArgument, "sudden-change roots need a two-qubit label");

    auto g = [&](double kt) { return sudden_change_condition(alpha, label, kt); };

    const double h = (kKtMax - kKtMin) / (kScanPoints - 1);
    std::vector<double> roots;
    double prev_kt = kKtMin;
    double prev_g = g(prev_kt);
    for (int i = 1; i < kScanPoints; ++i) {
        const double kt = kKtMin + i * h;
        const double cur = g(kt);
        if (prev_g == 0.0) {
            roots.push_back(prev_kt);
        } else if ((prev_g > 0.0) != (cur > 0.0)) {
            roots.push_back(bisect_root(g, prev_kt, kt, prev_g, cur, 1e-10));
        }
        prev_kt = kt;
        prev_g = cur;
    }

    // Tangent roots show up as two nearly coincident brackets; report one.
    std::vector<double> merged;
    for (double r : roots) {
        if (!merged.empty() && r - merged.back() < 1e-6)
            merged.back() = 0.5 * (merged.back() + r);
        else
            merged.push_back(r);
    }
    return merged;
}

const char* evolution_type_name(EvolutionType t) {
    switch (t) {
        case EvolutionType::I: return "I";
        case EvolutionType::II: return "II";
        case EvolutionType::III: return "III";
    }
    return "?";
}

EvolutionClass classify(double alpha) {
    EvolutionClass ec;
    ec.roots = sudden_change_roots(alpha, PairLabel::c1c2);

    // Revival hunt: an interior strict local minimum of d_g2(c1c2) followed
    // by an increase. The curve is piecewise smooth with kinks exactly at the
    // sudden-change roots, so each segment between consecutive breakpoints is
    // searched on its own; this resolves dips far narrower than any global
    // grid could.
    auto f = [&](double kt) { return dg2_c1c2(alpha, kt); };

    std::vector<double> bounds;
    bounds.push_back(kKtMin);
    bounds.insert(bounds.end(), ec.roots.begin(), ec.roots.end());
    bounds.push_back(kKtMax);

    for (std::size_t s = 0; s + 1 < bounds.size() && !ec.revival; ++s) {
        const double a = bounds[s];
        const double b = bounds[s + 1];
        if (b - a < 1e-7) continue;
        constexpr int kProbe = 128;
        const double fa = f(a);
        const double fb = f(b);
        const double step = (b - a) / (kProbe + 1);
        double best_t = a + step;
        double best_v = f(best_t);
        for (int i = 2; i <= kProbe; ++i) {
            const double t = a + i * step;
            const double v = f(t);
            if (v < best_v) {
                best_v = v;
                best_t = t;
            }
        }
        // Refine around the best interior probe and inside both edge
        // windows; a dip narrower than one probe step can hug an edge.
        const std::pair<double, double> brackets[3] = {
            {std::max(a, best_t - step), std::min(b, best_t + step)},
            {a, a + step},
            {b - step, b},
        };
        double tmin = best_t, vmin = best_v;
        for (const auto& [lo, hi] : brackets) {
            const auto [t, v] = golden_min(f, lo, hi, 1e-10);
            if (v < vmin) {
                vmin = v;
                tmin = t;
            }
        }
        const bool interior = tmin - a > 1e-7 && b - tmin > 1e-7;
        if (interior && vmin < fa - 1e-14 && vmin < fb - 1e-14) {
            ec.revival = true;
            ec.revival_time = tmin;
        }
    }

    if (ec.roots.size() >= 2 && ec.revival)
        ec.type = EvolutionType::I;
    else if (!ec.roots.empty())
        ec.type = EvolutionType::II;
    else
        ec.type = EvolutionType::III;
    if (ec.type != EvolutionType::I) {
        ec.revival = false;
        ec.revival_time = 0.0;
    }
    return ec;
}

namespace {

// Largest value of the sudden-change condition over the time window,
// refined around the best scan point. Roots exist iff this is positive.
double condition_peak(double alpha) {
    auto g = [&](double kt) { return sudden_change_condition(alpha, PairLabel::c1c2, kt); };
    const double h = (kKtMax - kKtMin) / (kScanPoints - 1);
    double best_kt = kKtMin;
    double best = g(best_kt);
    for (int i = 1; i < kScanPoints; ++i) {
        const double kt = kKtMin + i * h;
        const double v = g(kt);
        if (v > best) {
            best = v;
            best_kt = kt;
        }
    }
    auto [kt, v] = golden_max(g, std::max(kKtMin, best_kt - h), std::min(kKtMax, best_kt + h),
                              1e-12);
    return std::max(best, v);
}

double bisect_predicate(const std::function<bool(double)>& pred, double lo, double hi,
                        double xtol) {
    // pred(lo) true, pred(hi) false.
    while (hi - lo > xtol) {
        const double mid = 0.5 * (lo + hi);
        (pred(mid) ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

Boundaries boundary_scan() {
    Boundaries b;
    b.alpha_revival = bisect_predicate([](double a) { return classify(a).revival; }, 0.45, 0.70,
                                       1e-6);
    b.alpha_sudden = bisect_predicate([](double a) { return condition_peak(a) > 0.0; }, 0.70,
                                      0.85, 1e-6);
    return b;
}

}  // namespace gqd
