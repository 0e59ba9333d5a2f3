#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "gqd/measures.hpp"

namespace gqd {

/// One point of the two-cavity / two-reservoir trajectory. The pure state is
///   alpha |0000> + beta (xi |10> + chi |01>)_{c1 r1} (x) (xi |10> + chi |01>)_{c2 r2}
/// with xi = e^{-kappa t / 2} and chi = sqrt(1 - e^{-kappa t}).
struct DynamicsPoint {
    double alpha = 0, beta = 0;
    double kappa_t = 0;
    double xi = 0, chi = 0;
};

DynamicsPoint point(double alpha, double kappa_t);

/// The xi <-> chi exchanged point, i.e. kappa_t' = -ln(1 - e^{-kappa_t}).
/// Undefined at kappa_t = 0 (chi vanishes).
DynamicsPoint swapped(const DynamicsPoint& p);

enum class PairLabel { c1c2, r1r2, c1r1, c1r2, c1_c2r2, c1_rest };

const char* pair_name(PairLabel label);
std::optional<PairLabel> pair_from_name(std::string_view name);

/// 16-amplitude pure state in (c1, r1, c2, r2) big-endian ordering.
std::vector<cplx> output_state(const DynamicsPoint& p);

/// Two-qubit reduced state for one of the four pair labels. c1c2 and r1r2
/// come from the closed-form entries (r1r2 is the xi <-> chi swap of c1c2);
/// c1r1 and c1r2 are partial traces of the output state.
XState pair_density(const DynamicsPoint& p, PairLabel label);

/// Pair measures: d_g1 from the closed forms
///   c1c2 -> 2 a b xi^2, r1r2 -> 2 a b chi^2, c1r1 -> 2 b^2 xi chi,
///   c1r2 -> 2 a b xi chi,
/// d_g2 and concurrence through the symmetric-X evaluator.
MeasureSet pair_gqd(const DynamicsPoint& p, PairLabel label);

/// Bipartite trace-norm discord for the c1|(c2 r2) logical-qubit cut or the
/// pure c1|(r1 c2 r2) cut.
double bipartition_gqd1(const DynamicsPoint& p, PairLabel label);

/// Interior roots of the sudden-change condition gamma1^2 = gamma3^2 + x3^2
/// for the pair, located by a 2000-point sign scan over kappa_t in
/// (1e-8, 12] and bisection to 1e-10. Roots closer than 1e-6 merge.
std::vector<double> sudden_change_roots(double alpha, PairLabel label);

enum class EvolutionType { I, II, III };

const char* evolution_type_name(EvolutionType t);

struct EvolutionClass {
    EvolutionType type = EvolutionType::III;
    std::vector<double> roots;  // sudden-change times for c1c2, ascending
    bool revival = false;
    double revival_time = 0;
};

/// Classification by the c1c2 evolution: type I = sudden changes plus an
/// interior strict local minimum of d_g2 (revival), type II = sudden changes
/// without revival, type III = asymptotic decay only.
EvolutionClass classify(double alpha);

struct Boundaries {
    double alpha_revival = 0;  // type I -> II transition
    double alpha_sudden = 0;   // type II -> III transition
};

/// Bisection on alpha for both transitions, each to 1e-6.
Boundaries boundary_scan();

}  // namespace gqd
