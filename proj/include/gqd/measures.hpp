#pragma once

#include "gqd/state_core.hpp"

namespace gqd {

/// Eigenvalues of K = x x^T + Gamma Gamma^T, ascending.
struct KSpectrum {
    double k1 = 0, k2 = 0, k3 = 0;
    double k_max = 0;
};

KSpectrum k_spectrum(const BlochForm& b);

struct MeasureSet {
    double d_g1 = 0, d_g2 = 0, concurrence = 0;
};

/// Hilbert-Schmidt geometric discord, normalized so Bell states score 1:
/// (k1 + k2 + k3 - k_max) / 2.
double gqd2_closed(const BlochForm& b);

/// Trace-norm geometric discord of an X state. Symmetric states (one
/// vanishing coherence) take the exact |gamma1| branch; otherwise the
/// general closed form applies, falling back to |gamma1| when the
/// denominator drops below 1e-12 (homogeneous case).
double gqd1_x(const XState& x);

/// All three measures for a symmetric X state:
///   d_g1 = |gamma1|, d_g2 = (gamma1^2 + gamma_min') / 2,
///   concurrence = max(0, |gamma1| - 2 eta).
/// Throws NotSymmetricX when both coherences exceed 1e-12.
MeasureSet gqd_symmetric_x(const XState& x);

/// Pure-bipartition values: d_g1 = concurrence = 2 sqrt(l0 l1) and
/// d_g2 = 4 l0 l1, so the hierarchy d_g1^2 >= d_g2 is saturated.
MeasureSet pure_measures(const SchmidtPair& s);

/// Concurrence of a general X state:
/// 2 max(0, |rho41| - sqrt(rho22 rho33), |rho32| - sqrt(rho11 rho44)).
double concurrence_x(const XState& x);

}  // namespace gqd
