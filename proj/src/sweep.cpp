#include "gqd/sweep.hpp"

#include <cmath>

#include "gqd/measures.hpp"
#include "gqd/sampling.hpp"

namespace gqd {

std::vector<double> linspace(double a, double b, int n) {
    std::vector<double> v(n);
    if (n == 1) {
        v[0] = a;
        return v;
    }
    const double h = (b - a) / (n - 1);
    for (int i = 0; i < n; ++i) v[i] = a + i * h;
    v.back() = b;
    return v;
}

namespace {

// Runs body(i) for i in [0, n), serially or under OpenMP. Each slot is
// written exactly once, so the schedule cannot change the result.
template <typename Body>
void for_each_index(int n, Exec exec, const Body& body) {
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int i = 0; i < n; ++i) body(i);
    } else {
        // The one-thread region keeps nested kernels (the multistart loop in
        // the trace-norm oracle) serial as well: a true single-core reference.
#pragma omp parallel num_threads(1)
#pragma omp single
        for (int i = 0; i < n; ++i) body(i);
    }
}

}  // namespace

std::vector<SweepRow> dynamics_sweep(const std::vector<double>& alphas,
                                     const std::vector<double>& kts,
                                     const std::vector<PairLabel>& pairs, Exec exec) {
    const int na = static_cast<int>(alphas.size());
    const int nk = static_cast<int>(kts.size());
    const int np = static_cast<int>(pairs.size());
    std::vector<SweepRow> rows(static_cast<std::size_t>(na) * nk * np);

    for_each_index(na * nk * np, exec, [&](int idx) {
        const int ip = idx % np;
        const int ik = (idx / np) % nk;
        const int ia = idx / (np * nk);
        const auto p = point(alphas[ia], kts[ik]);
        const auto m = pair_gqd(p, pairs[ip]);
        SweepRow& r = rows[idx];
        r.alpha = alphas[ia];
        r.kappa_t = kts[ik];
        r.pair = pairs[ip];
        r.dg1 = m.d_g1;
        r.dg2 = m.d_g2;
        r.concurrence = m.concurrence;
        r.hierarchy_gap = m.d_g1 * m.d_g1 - m.d_g2;
    });
    return rows;
}

std::vector<MonogamyRow> monogamy_sweep(const std::vector<double>& alphas,
                                        const std::vector<double>& kts, Exec exec) {
    const int na = static_cast<int>(alphas.size());
    const int nk = static_cast<int>(kts.size());
    std::vector<MonogamyRow> rows(static_cast<std::size_t>(na) * nk);

    for_each_index(na * nk, exec, [&](int idx) {
        const int ik = idx % nk;
        const int ia = idx / nk;
        MonogamyRow& r = rows[idx];
        r.alpha = alphas[ia];
        r.kappa_t = kts[ik];
        r.rep = report(point(alphas[ia], kts[ik]));
    });
    return rows;
}

std::vector<ClassifyRow> classify_scan(const std::vector<double>& alphas, Exec exec) {
    const int n = static_cast<int>(alphas.size());
    std::vector<ClassifyRow> rows(n);
    for_each_index(n, exec, [&](int i) {
        rows[i].alpha = alphas[i];
        rows[i].cls = classify(alphas[i]);
    });
    return rows;
}

CertifyReport oracle_certify(int n_states, int n_x_states, std::uint64_t seed,
                             const OptimizerConfig& cfg, Exec exec) {
    if (n_states < 1 || n_x_states < 1)
        fail(Errc::InvalidArgument, "certification needs at least one sample of each kind");

    CertifyReport rep;
    rep.n_states = n_states;
    rep.n_x_states = n_x_states;

    std::vector<double> gap2(n_states);
    for_each_index(n_states, exec, [&](int i) {
        Rng rng(seed, static_cast<std::uint64_t>(i));
        const auto rho = random_density(rng);
        const double closed = gqd2_closed(bloch_decompose(rho));
        const double brute = gqd2_brute(rho, cfg);
        gap2[i] = std::abs(brute - closed);
    });

    std::vector<double> gap1(n_x_states), gapw(n_x_states);
    for_each_index(n_x_states, exec, [&](int j) {
        Rng rng(seed, (1ull << 20) + static_cast<std::uint64_t>(j));
        const auto x = random_x_state(rng);
        const DensityMatrix rho{x.to_matrix()};
        gap1[j] = gqd1_brute(rho, cfg) - gqd1_x(x);
        gapw[j] = std::abs(concurrence_wootters(rho) - concurrence_x(x));
    });

    rep.gqd2_max_gap = 0.0;
    for (double g : gap2) rep.gqd2_max_gap = std::max(rep.gqd2_max_gap, g);
    rep.gqd1_min_gap = gap1[0];
    rep.gqd1_max_gap = gap1[0];
    for (double g : gap1) {
        rep.gqd1_min_gap = std::min(rep.gqd1_min_gap, g);
        rep.gqd1_max_gap = std::max(rep.gqd1_max_gap, g);
    }
    rep.wootters_max_gap = 0.0;
    for (double g : gapw) rep.wootters_max_gap = std::max(rep.wootters_max_gap, g);
    return rep;
}

}  // namespace gqd
