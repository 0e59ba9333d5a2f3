#pragma once

#include <cstdint>
#include <vector>

#include "gqd/state_core.hpp"

namespace gqd {

/// splitmix64 stream. One instance per (seed, stream) pair, so parallel
/// consumers index their own stream and never contend or depend on
/// scheduling order. Self-contained on purpose: outputs are identical on
/// every platform, unlike <random> distributions.
class Rng {
public:
    explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

    std::uint64_t next_u64();
    double next_double();  // uniform [0, 1)
    double uniform(double a, double b);
    double normal();  // Box-Muller
    cplx normal_cplx();

private:
    std::uint64_t s_;
    double spare_ = 0;
    bool has_spare_ = false;
};

/// Ginibre-ensemble density matrix: G G^dag normalized to unit trace.
DensityMatrix random_density(Rng& rng, int dim = 4);

/// General X state: diagonal from a flat simplex, both coherences with
/// magnitudes uniform inside their positivity disks and uniform phases.
XState random_x_state(Rng& rng);

/// Symmetric X state: rho32 = 0, |rho41| uniform in [0, sqrt(rho11 rho44)],
/// uniform phase. Positive by construction.
XState random_symmetric_x(Rng& rng);

/// Bell-diagonal state (vanishing local Bloch vectors), sampled by rejection
/// inside the positivity tetrahedron.
XState random_bell_diagonal(Rng& rng);

SchmidtPair random_schmidt(Rng& rng);

/// Product of two Haar-random single-qubit unitaries.
Mat random_local_unitary(Rng& rng);

/// n positive amplitudes with unit sum of squares.
std::vector<double> random_w_amplitudes(Rng& rng, int n);

}  // namespace gqd
