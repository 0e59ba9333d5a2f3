#include "gqd/measures.hpp"

#include <algorithm>
#include <cmath>

#include "gqd/eigen.hpp"

namespace gqd {

KSpectrum k_spectrum(const BlochForm& b) {
    Mat k(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double v = b.x[i] * b.x[j];
            for (int l = 0; l < 3; ++l) v += b.gamma[i][l] * b.gamma[j][l];
            k(i, j) = v;
        }
    const auto es = hermitian_eigs(k, /*want_vectors=*/false);
    KSpectrum s;
    s.k1 = std::max(0.0, es.values[0]);
    s.k2 = std::max(0.0, es.values[1]);
    s.k3 = std::max(0.0, es.values[2]);
    s.k_max = s.k3;
    return s;
}

double gqd2_closed(const BlochForm& b) {
    const auto s = k_spectrum(b);
    return 0.5 * (s.k1 + s.k2 + s.k3 - s.k_max);
}

double gqd1_x(const XState& x) {
    const auto d = x_spectral(x);
    // One vanishing coherence makes gamma1^2 = gamma2^2, where the closed
    // form collapses to |gamma1| identically; return it directly so the
    // symmetric value is exact rather than sqrt(round-trip) noise.
    if (std::abs(x.rho32) == 0.0 || std::abs(x.rho41) == 0.0) return d.gamma1;

    const double g1sq = d.gamma1 * d.gamma1;
    const double g2sq = d.gamma2 * d.gamma2;
    const double den = d.gamma_max - d.gamma_min + g1sq - g2sq;
    if (std::abs(den) < 1e-12) return d.gamma1;  // homogeneous case
    const double num = g1sq * d.gamma_max - g2sq * d.gamma_min;
    return std::sqrt(std::max(0.0, num / den));
}

MeasureSet gqd_symmetric_x(const XState& x) {
    if (!x.symmetric())
        fail(Errc::NotSymmetricX, "both coherences present",
             std::min(std::abs(x.rho32), std::abs(x.rho41)));
    const auto d = x_spectral(x);
    MeasureSet m;
    m.d_g1 = d.gamma1;
    m.d_g2 = 0.5 * (d.gamma1 * d.gamma1 + d.gamma_min_prime);
    m.concurrence = std::max(0.0, d.gamma1 - 2.0 * d.eta);
    return m;
}

MeasureSet pure_measures(const SchmidtPair& s) {
    const double c = 2.0 * std::sqrt(std::max(0.0, s.lambda0 * s.lambda1));
    MeasureSet m;
    m.d_g1 = c;
    m.d_g2 = 4.0 * s.lambda0 * s.lambda1;
    m.concurrence = c;
    return m;
}

double concurrence_x(const XState& x) {
    const double a = std::abs(x.rho41) - std::sqrt(x.rho22 * x.rho33);
    const double b = std::abs(x.rho32) - std::sqrt(x.rho11 * x.rho44);
    return 2.0 * std::max({0.0, a, b});
}

}  // namespace gqd
