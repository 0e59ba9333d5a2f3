// Acceptance suite: one line per criterion, nonzero exit when any fails.
// Heavier sample counts than the unit tests; everything is seeded.
//
// Usage: acceptance <path-to-cli-binary>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "gqd/csv.hpp"
#include "gqd/monogamy.hpp"
#include "gqd/oracle.hpp"
#include "gqd/sampling.hpp"
#include "gqd/sweep.hpp"

using namespace gqd;

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;
constexpr std::uint64_t kSeed = 20250808;

int failures = 0;

void verdict(int criterion, bool pass, const std::string& detail) {
    std::printf("%s criterion %2d: %s\n", pass ? "PASS" : "FAIL", criterion, detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
}

std::string num(double v) { return fmt12(v); }

// --- criteria 1 + 3: hierarchy and concurrence bound on symmetric X states ---

void criteria_1_and_3() {
    double worst_gap = 1e300;      // min of d_g1^2 - d_g2
    double worst_conc = 1e300;     // min of d_g1 - concurrence
    bool exact = true;
    for (int i = 0; i < 10000; ++i) {
        Rng rng(kSeed, i);
        const auto x = random_symmetric_x(rng);
        const auto m = gqd_symmetric_x(x);
        worst_gap = std::min(worst_gap, m.d_g1 * m.d_g1 - m.d_g2);
        worst_conc = std::min(worst_conc, m.d_g1 - m.concurrence);
        if (gqd1_x(x) != x_spectral(x).gamma1) exact = false;
    }
    verdict(1, worst_gap >= -1e-12 && exact,
            "symmetric X hierarchy: min(dg1^2 - dg2) = " + num(worst_gap) +
                std::string(exact ? ", dg1 = |gamma1| exact" : ", dg1 != |gamma1|"));
    verdict(3, worst_conc >= -1e-12,
            "symmetric X concurrence bound: min(dg1 - C) = " + num(worst_conc));
}

// --- criterion 2: pure-state saturation through both routes ---

void criterion_2() {
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        Rng rng(kSeed + 1, i);
        const auto s = random_schmidt(rng);
        const auto m = pure_measures(s);
        const double c = 2.0 * std::sqrt(s.lambda0 * s.lambda1);
        worst = std::max({worst, std::abs(m.d_g1 - c), std::abs(m.concurrence - c),
                          std::abs(m.d_g2 - c * c), std::abs(m.d_g1 * m.d_g1 - m.d_g2)});

        const std::vector<cplx> psi = {std::sqrt(s.lambda0), 0.0, 0.0, std::sqrt(s.lambda1)};
        const DensityMatrix rho{outer(psi)};
        worst = std::max({worst, std::abs(gqd1_x(x_project(rho)) - c),
                          std::abs(gqd2_closed(bloch_decompose(rho)) - c * c),
                          std::abs(concurrence_x(x_project(rho)) - c)});
    }
    verdict(2, worst <= 1e-12, "pure-state saturation: worst deviation = " + num(worst));
}

// --- criterion 4: oracle certification ---

void criterion_4() {
    OptimizerConfig cfg;
    cfg.seed = kSeed;
    const auto rep = oracle_certify(1000, 100, kSeed + 2, cfg, Exec::parallel);
    verdict(4, rep.pass(),
            "oracle certification: gqd2 gap " + num(rep.gqd2_max_gap) + " (tol 1e-6), gqd1 gap [" +
                num(rep.gqd1_min_gap) + ", " + num(rep.gqd1_max_gap) +
                "] (tol [-1e-9, 5e-3]), wootters gap " + num(rep.wootters_max_gap) +
                " (tol 1e-10)");
}

// --- criterion 5: phase structure and boundaries ---

void criterion_5() {
    const auto t1 = classify(0.4);
    const auto t2 = classify(0.65);
    const auto t3 = classify(0.9);
    const auto b = boundary_scan();
    const bool ok = t1.type == EvolutionType::I && t1.revival &&
                    std::abs(t1.revival_time - std::log(2.0)) <= 1e-3 &&
                    t2.type == EvolutionType::II && t3.type == EvolutionType::III &&
                    std::abs(b.alpha_revival - 0.5774) <= 1e-3 &&
                    std::abs(b.alpha_sudden - 0.7647) <= 5e-4;
    verdict(5, ok,
            "phase structure: types " + std::string(evolution_type_name(t1.type)) + "/" +
                evolution_type_name(t2.type) + "/" + evolution_type_name(t3.type) +
                ", revival at " + num(t1.revival_time) + ", boundaries (" +
                num(b.alpha_revival) + ", " + num(b.alpha_sudden) + ")");
}

// --- criterion 6: balanced-amplitude single sudden change ---

// The pinned reference window 0.446 +/- 1e-2 does not contain the bisected
// root: the condition at alpha = 1/sqrt(2) reduces to 2u^3 - 2u^2 + 2u - 1 = 0
// in u = exp(-kappa_t), whose root gives kappa_t = 0.434175 (cross-checked by
// the independent polynomial oracle in the dynamics unit tests). The check is
// kept as pinned and reports both numbers so the discrepancy stays visible.
void criterion_6() {
    const auto roots = sudden_change_roots(kInvSqrt2, PairLabel::c1c2);
    const bool single = roots.size() == 1;
    const double r = single ? roots[0] : -1.0;
    const bool ok = single && std::abs(r - 0.446) <= 1e-2;
    verdict(6, ok,
            "balanced sudden change: " + std::to_string(roots.size()) + " root(s) at " + num(r) +
                ", required 0.446 +/- 1e-2");
}

// --- criterion 7: swap symmetry of the HS discord ---

void criterion_7() {
    double worst = 0.0;
    const auto alphas = linspace(0.005, 0.995, 100);
    const auto kts = linspace(0.02, 8.0, 100);
    for (double alpha : alphas)
        for (double kt : kts) {
            const auto p = point(alpha, kt);
            const double lhs = pair_gqd(p, PairLabel::r1r2).d_g2;
            const double rhs = pair_gqd(swapped(p), PairLabel::c1c2).d_g2;
            worst = std::max(worst, std::abs(lhs - rhs));
        }
    verdict(7, worst <= 1e-12, "amplitude-swap symmetry: worst |dg2 mismatch| = " + num(worst));
}

// --- criterion 8: closed trace-norm forms and continuity across the grid ---

void criterion_8() {
    const std::vector<PairLabel> pairs = {PairLabel::c1c2, PairLabel::r1r2, PairLabel::c1r1,
                                          PairLabel::c1r2};
    const std::vector<std::vector<int>> keeps = {{0, 2}, {1, 3}, {0, 1}, {0, 3}};
    const auto alphas = linspace(0.01, 0.99, 100);
    const auto kts = linspace(0.0, 8.0, 100);

    double worst = 0.0;
    bool continuous = true;
    for (double alpha : alphas) {
        std::vector<std::vector<double>> curves(4, std::vector<double>(kts.size()));
        for (std::size_t ik = 0; ik < kts.size(); ++ik) {
            const auto p = point(alpha, kts[ik]);
            const auto psi = output_state(p);
            for (int ip = 0; ip < 4; ++ip) {
                const double closed = pair_gqd(p, pairs[ip]).d_g1;
                const double spectral = gqd1_x(x_project(reduce(psi, 4, keeps[ip])));
                worst = std::max(worst, std::abs(closed - spectral));
                curves[ip][ik] = closed;
            }
        }
        const double h = kts[1] - kts[0];
        for (const auto& curve : curves) {
            double max_jump = 0.0, max_slope = 0.0;
            for (std::size_t i = 0; i + 1 < curve.size(); ++i) {
                max_jump = std::max(max_jump, std::abs(curve[i + 1] - curve[i]));
                if (i > 0)
                    max_slope =
                        std::max(max_slope, std::abs(curve[i + 1] - curve[i - 1]) / (2.0 * h));
            }
            if (max_jump > 10.0 * h * std::max(max_slope, 1e-6)) continuous = false;
        }
    }
    verdict(8, worst <= 1e-12 && continuous,
            "pair trace-norm closed forms: worst gap vs spectral route = " + num(worst) +
                (continuous ? ", curves smooth" : ", discontinuity detected"));
}

// --- criterion 9: monogamy signs on the balanced sweep ---

void criterion_9() {
    const auto s = sweep_reports(kInvSqrt2, linspace(0.01, 5.0, 500));
    const auto at1 = report(point(kInvSqrt2, 1.0));
    const bool ok = s.flags[0].always_nonpos && s.flags[1].always_nonpos &&
                    s.flags[2].always_nonpos && at1.m3_g1 < -1e-6 && at1.m3rho_g1 < -1e-6 &&
                    at1.m4_g1 < -1e-6 && s.flags[3].always_nonneg && s.flags[5].always_nonneg &&
                    s.flags[4].sign_changing;
    verdict(9, ok,
            "monogamy signs: m3_g1/m3rho_g1/m4_g1 nonpositive (at kt=1: " + num(at1.m3_g1) +
                ", " + num(at1.m3rho_g1) + ", " + num(at1.m4_g1) +
                "), m3_g2/m4_g2 nonnegative, m3rho_g2 sign-changing");
}

// --- criterion 10: squared-discord identities ---

void criterion_10() {
    double worst = 0.0;
    for (int ia = 1; ia <= 200; ++ia) {
        const double alpha = (ia - 0.5) / 200.0;
        for (int ik = 0; ik < 200; ++ik) {
            const auto r = report(point(alpha, 0.03 * ik));
            worst = std::max({worst, std::abs(r.m3sq), std::abs(r.m3sq_rho), std::abs(r.m4sq)});
        }
    }

    double worst_w = 0.0, worst_pair = 0.0;
    for (int n = 3; n <= 8; ++n)
        for (int rep = 0; rep < 100; ++rep) {
            Rng rng(kSeed + 3 + n, rep);
            const auto amps = random_w_amplitudes(rng, n);
            const auto wm = w_state_monogamy(WStateSpec{amps});
            worst_w = std::max(worst_w, std::abs(wm.m_n_sq));
            for (int j = 1; j < n; ++j)
                worst_pair = std::max(
                    worst_pair, std::abs(wm.pairwise_dg1[j - 1] - 2.0 * amps[0] * amps[j]));
        }
    verdict(10, worst <= 1e-12 && worst_w <= 1e-12 && worst_pair <= 1e-12,
            "squared-discord identities: trajectory worst " + num(worst) + ", W-state worst " +
                num(worst_w) + ", pairwise closed-form gap " + num(worst_pair));
}

// --- criterion 11: CLI determinism ---

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void criterion_11(const std::string& cli) {
    {
        std::ofstream out("acc_state.json");
        out << R"({"amplitudes_re": [0.7071067811865476, 0, 0, 0.7071067811865476]})";
    }
    const std::vector<std::pair<std::string, std::string>> commands = {
        {"measure", "--seed 5 --out OUT measure acc_state.json --oracle"},
        {"dynamics",
         "--seed 5 --out OUT dynamics --alpha 0.4 --alpha 0.7 --kt-min 0 --kt-max 2 "
         "--kt-step 0.05"},
        {"classify",
         "--seed 5 --out OUT classify --alpha-min 0.3 --alpha-max 0.9 --alpha-step 0.1 "
         "--no-boundaries"},
        {"monogamy",
         "--seed 5 --out OUT monogamy --alpha 0.7071067811865476 --kt-min 0.02 --kt-max 3 "
         "--kt-step 0.05"},
        {"oracle-check", "--seed 5 --out OUT oracle-check --samples 10 --x-samples 2 --starts 16"},
    };
    bool all_ok = true;
    std::string detail;
    for (const auto& [name, tmpl] : commands) {
        std::string args1 = tmpl, args2 = tmpl;
        args1.replace(args1.find("OUT"), 3, "acc_out1.tmp");
        args2.replace(args2.find("OUT"), 3, "acc_out2.tmp");
        const int rc1 = std::system((cli + " " + args1 + " > acc_so1.tmp 2>/dev/null").c_str());
        const int rc2 = std::system((cli + " " + args2 + " > acc_so2.tmp 2>/dev/null").c_str());
        const bool same = WEXITSTATUS(rc1) == WEXITSTATUS(rc2) &&
                          slurp("acc_out1.tmp") == slurp("acc_out2.tmp") &&
                          slurp("acc_so1.tmp") == slurp("acc_so2.tmp") &&
                          !slurp("acc_out1.tmp").empty();
        if (!same) {
            all_ok = false;
            detail += name + " differs; ";
        }
    }
    verdict(11, all_ok,
            all_ok ? "CLI determinism: all five commands byte-identical across reruns"
                   : "CLI determinism: " + detail);
}

}  // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "";
    std::printf("acceptance suite (seed %llu)\n", static_cast<unsigned long long>(kSeed));

    criteria_1_and_3();
    criterion_2();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    if (cli.empty())
        verdict(11, false, "CLI determinism: binary path missing (pass it as argv[1])");
    else
        criterion_11(cli);

    std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
