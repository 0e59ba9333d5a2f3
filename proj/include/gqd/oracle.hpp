#pragma once

#include <array>
#include <cstdint>

#include "gqd/eigen.hpp"
#include "gqd/state_core.hpp"

namespace gqd {

/// One member of the zero-discord (classical-quantum) family:
///   chi = p |v><v| (x) rho(r0) + (1-p) |v_perp><v_perp| (x) rho(r1)
/// with |v> = (cos(theta/2), e^{i phi} sin(theta/2)) and rho(r) the qubit
/// state with Bloch vector r. Nine free parameters in all.
struct CQCandidate {
    double theta = 0, phi = 0, p = 0.5;
    std::array<double, 3> r0{}, r1{};

    Mat to_matrix() const;
};

struct OptimizerConfig {
    int starts = 64;         // scrambled low-discrepancy starts for the simplex search
    double f_tol = 1e-9;     // stop when the simplex objective spread drops below this
    int max_iters = 2000;    // per-start reflection cap
    std::uint64_t seed = 1;  // sole source of randomness
};

/// Ground-truth Hilbert-Schmidt discord by direct minimization, independent
/// of the Bloch closed form: the dephasing basis is scanned on a 181x360
/// (theta, phi) grid and then refined by alternating golden sections to
/// 1e-10 in the angles. With full_search the minimization instead runs over
/// the whole nine-parameter CQ family as a cross-check.
double gqd2_brute(const DensityMatrix& rho, const OptimizerConfig& cfg = {},
                  bool full_search = false);

/// Trace-norm discord upper bound: multistart Nelder-Mead over the CQ
/// family, objective ||rho - chi||_1 through the Jacobi eigensolver. Always
/// returns the best value found.
double gqd1_brute(const DensityMatrix& rho, const OptimizerConfig& cfg = {});

/// Wootters concurrence of a two-qubit state via the spin-flipped spectrum.
double concurrence_wootters(const DensityMatrix& rho);

}  // namespace gqd
