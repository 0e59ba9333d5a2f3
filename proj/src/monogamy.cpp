#include "gqd/monogamy.hpp"

#include <cmath>

#include "gqd/eigen.hpp"

namespace gqd {

MonogamyReport report(const DynamicsPoint& p) {
    const auto psi = output_state(p);

    // Bipartite values across the c1|rest cut of the pure state. The
    // three-party deficits fuse c2 r2 into one logical qubit, which leaves
    // the c1 marginal (and hence this value) unchanged.
    const auto rho1 = reduce(psi, 4, {0});
    const auto es = hermitian_eigs(rho1.m, /*want_vectors=*/false);
    const auto pure = pure_measures(SchmidtPair(es.values[1], es.values[0]));

    // c1|(c2 r2) logical-qubit cut.
    const std::vector<cplx> b0 = {1.0, 0.0, 0.0, 0.0};
    const std::vector<cplx> b1 = {0.0, p.chi, p.xi, 0.0};
    const auto logical = gqd_symmetric_x(logical_compress(reduce(psi, 4, {0, 2, 3}), b0, b1));

    const auto c1r1 = pair_gqd(p, PairLabel::c1r1);
    const auto c1c2 = pair_gqd(p, PairLabel::c1c2);
    const auto c1r2 = pair_gqd(p, PairLabel::c1r2);

    MonogamyReport r;
    r.m3_g1 = pure.d_g1 - c1r1.d_g1 - logical.d_g1;
    r.m3rho_g1 = logical.d_g1 - c1c2.d_g1 - c1r2.d_g1;
    r.m4_g1 = pure.d_g1 - c1r1.d_g1 - c1c2.d_g1 - c1r2.d_g1;

    r.m3_g2 = pure.d_g2 - c1r1.d_g2 - logical.d_g2;
    r.m3rho_g2 = logical.d_g2 - c1c2.d_g2 - c1r2.d_g2;
    r.m4_g2 = pure.d_g2 - c1r1.d_g2 - c1c2.d_g2 - c1r2.d_g2;

    auto sq = [](double v) { return v * v; };
    r.m3sq = sq(pure.d_g1) - sq(c1r1.d_g1) - sq(logical.d_g1);
    r.m3sq_rho = sq(logical.d_g1) - sq(c1c2.d_g1) - sq(c1r2.d_g1);
    r.m4sq = sq(pure.d_g1) - sq(c1r1.d_g1) - sq(c1c2.d_g1) - sq(c1r2.d_g1);
    return r;
}

MonogamySweep sweep_reports(double alpha, const std::vector<double>& kt_grid) {
    MonogamySweep s;
    s.kappa_ts = kt_grid;
    s.rows.reserve(kt_grid.size());
    for (double kt : kt_grid) s.rows.push_back(report(point(alpha, kt)));

    constexpr double kTol = 1e-12;
    for (int c = 0; c < 9; ++c) {
        double lo = 0.0, hi = 0.0;
        for (const auto& row : s.rows) {
            const double v = row.columns()[c];
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        s.flags[c].always_nonneg = lo >= -kTol;
        s.flags[c].always_nonpos = hi <= kTol;
        s.flags[c].sign_changing = lo < -kTol && hi > kTol;
    }
    return s;
}

WMonogamy w_state_monogamy(const WStateSpec& w) {
    const int n = static_cast<int>(w.amplitudes.size());
    if (n < 2 || n > 12) fail(Errc::InvalidArgument, "W state needs 2..12 amplitudes");
    double norm = 0.0;
    for (double a : w.amplitudes) norm += a * a;
    if (std::abs(norm - 1.0) > 1e-12)
        fail(Errc::InvalidArgument, "W amplitudes must have unit sum of squares",
             std::abs(norm - 1.0));

    // Single-excitation amplitudes: qubit j excited lives at bit (n-1-j).
    std::vector<cplx> psi(static_cast<std::size_t>(1) << n, 0.0);
    for (int j = 0; j < n; ++j) psi[1ull << (n - 1 - j)] = w.amplitudes[j];

    WMonogamy out;
    const auto rho1 = reduce(psi, n, {0});
    const auto es = hermitian_eigs(rho1.m, /*want_vectors=*/false);
    const auto pure = pure_measures(SchmidtPair(es.values[1], es.values[0]));
    out.bipartite_concurrence = pure.concurrence;

    double sum_sq = 0.0;
    out.pairwise_dg1.reserve(n - 1);
    for (int j = 1; j < n; ++j) {
        const auto pair = x_project(reduce(psi, n, {0, j}));
        const double dg1 = gqd1_x(pair);
        out.pairwise_dg1.push_back(dg1);
        sum_sq += dg1 * dg1;
    }
    out.m_n_sq = pure.concurrence * pure.concurrence - sum_sq;
    return out;
}

}  // namespace gqd
