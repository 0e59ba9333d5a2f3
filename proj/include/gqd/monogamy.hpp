#pragma once

#include <array>
#include <vector>

#include "gqd/dynamics.hpp"

namespace gqd {

/// Signed monogamy deficits at one trajectory point. A nonnegative deficit
/// across a sweep means the measure is monogamous there. Columns:
///   m3_*    : c1|r1(c2r2) cut minus the c1r1 and c1(c2r2) terms
///   m3rho_* : c1(c2r2) cut minus the c1c2 and c1r2 terms
///   m4_*    : c1|r1c2r2 cut minus all three pair terms
/// for the trace-norm discord (_g1), the HS discord (_g2) and the squared
/// trace-norm discord (m3sq, m3sq_rho, m4sq).
struct MonogamyReport {
    double m3_g1 = 0, m3rho_g1 = 0, m4_g1 = 0;
    double m3_g2 = 0, m3rho_g2 = 0, m4_g2 = 0;
    double m3sq = 0, m3sq_rho = 0, m4sq = 0;

    std::array<double, 9> columns() const {
        return {m3_g1, m3rho_g1, m4_g1, m3_g2, m3rho_g2, m4_g2, m3sq, m3sq_rho, m4sq};
    }
};

MonogamyReport report(const DynamicsPoint& p);

struct ColumnFlags {
    bool always_nonneg = false;
    bool always_nonpos = false;
    bool sign_changing = false;
};

struct MonogamySweep {
    std::vector<double> kappa_ts;
    std::vector<MonogamyReport> rows;
    std::array<ColumnFlags, 9> flags;  // same column order as MonogamyReport::columns
};

/// One report per grid point plus per-column sign summaries (tolerance 1e-12).
MonogamySweep sweep_reports(double alpha, const std::vector<double>& kt_grid);

/// Single-excitation state a1 |10...0> + a2 |01...0> + ... + an |00...1>.
struct WStateSpec {
    std::vector<double> amplitudes;  // sum of squares 1, 2 <= n <= 12
};

struct WMonogamy {
    double m_n_sq = 0;                  // squared-discord deficit across the 1|rest cut
    std::vector<double> pairwise_dg1;   // D_g1(rho_1j) for j = 2..n, via explicit reduction
    double bipartite_concurrence = 0;   // C(1|rest)
};

WMonogamy w_state_monogamy(const WStateSpec& w);

}  // namespace gqd
