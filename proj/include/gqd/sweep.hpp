#pragma once

#include <cstdint>
#include <vector>

#include "gqd/monogamy.hpp"
#include "gqd/oracle.hpp"

namespace gqd {

/// Grid kernels come in two flavours: a plain serial loop kept as the
/// reference, and the OpenMP path used by the CLI. Each grid point is a pure
/// function of its inputs, so both produce bit-identical rows in a fixed
/// order regardless of scheduling.
enum class Exec { serial, parallel };

std::vector<double> linspace(double a, double b, int n);

struct SweepRow {
    double alpha = 0, kappa_t = 0;
    PairLabel pair = PairLabel::c1c2;
    double dg1 = 0, dg2 = 0, concurrence = 0;
    double hierarchy_gap = 0;  // dg1^2 - dg2
};

/// Row order: alpha outer, kappa_t inner, pair innermost.
std::vector<SweepRow> dynamics_sweep(const std::vector<double>& alphas,
                                     const std::vector<double>& kts,
                                     const std::vector<PairLabel>& pairs, Exec exec);

struct MonogamyRow {
    double alpha = 0, kappa_t = 0;
    MonogamyReport rep;
};

std::vector<MonogamyRow> monogamy_sweep(const std::vector<double>& alphas,
                                        const std::vector<double>& kts, Exec exec);

struct ClassifyRow {
    double alpha = 0;
    EvolutionClass cls;
};

std::vector<ClassifyRow> classify_scan(const std::vector<double>& alphas, Exec exec);

/// Certification tolerances, fixed here so the CLI and the acceptance suite
/// gate on the same numbers.
inline constexpr double kCertGqd2Tol = 1e-6;
inline constexpr double kCertGqd1Low = -1e-9;  // oracle may not undershoot the closed form
inline constexpr double kCertGqd1High = 5e-3;  // multistart upper bound slack
inline constexpr double kCertWoottersTol = 1e-10;

struct CertifyReport {
    int n_states = 0, n_x_states = 0;
    double gqd2_max_gap = 0;      // max |brute - closed| over random states
    double gqd1_min_gap = 0;      // min (brute - closed) over random X states
    double gqd1_max_gap = 0;      // max (brute - closed)
    double wootters_max_gap = 0;  // max |wootters - closed concurrence|

    bool pass() const {
        return gqd2_max_gap <= kCertGqd2Tol && gqd1_min_gap >= kCertGqd1Low &&
               gqd1_max_gap <= kCertGqd1High && wootters_max_gap <= kCertWoottersTol;
    }
};

/// Samples n_states random two-qubit states and n_x_states random X states
/// (streams derived from the seed, one per sample) and compares closed forms
/// against the minimization oracles.
CertifyReport oracle_certify(int n_states, int n_x_states, std::uint64_t seed,
                             const OptimizerConfig& cfg, Exec exec);

}  // namespace gqd
