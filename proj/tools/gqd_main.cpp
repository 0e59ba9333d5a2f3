// Command-line front end: single-state measurement, trajectory sweeps,
// evolution-type classification, monogamy scans and oracle certification.
// All numeric output is deterministic for a fixed seed, independent of the
// thread count.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <CLI11.hpp>
#include <json.hpp>

#include "gqd/csv.hpp"
#include "gqd/state_json.hpp"

namespace {

using nlohmann::ordered_json;

void apply_jobs(int jobs) {
#ifdef _OPENMP
    if (jobs > 0) omp_set_num_threads(jobs);
#else
    (void)jobs;
#endif
}

void write_output(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) gqd::fail(gqd::Errc::InvalidArgument, "cannot open output file: " + out_path);
    out << content;
}

std::vector<double> make_range(double lo, double hi, double step) {
    if (step <= 0.0) gqd::fail(gqd::Errc::InvalidArgument, "step must be positive");
    if (hi < lo) gqd::fail(gqd::Errc::InvalidArgument, "range is empty");
    std::vector<double> v;
    for (int i = 0;; ++i) {
        const double x = lo + i * step;
        if (x > hi + 1e-12) break;
        v.push_back(std::min(x, hi));
    }
    return v;
}

int run_measure(const std::string& state_path, bool oracle, std::uint64_t seed,
                const std::string& out_path) {
    const auto rho = gqd::load_state_json(state_path);
    if (rho.dim() != 4)
        gqd::fail(gqd::Errc::InvalidArgument, "measure expects a two-qubit state");

    ordered_json j;
    bool have_closed = false;
    gqd::MeasureSet closed;
    try {
        const auto x = gqd::x_project(rho);
        closed.d_g1 = gqd::gqd1_x(x);
        closed.d_g2 = gqd::gqd2_closed(gqd::bloch_decompose(rho));
        closed.concurrence = gqd::concurrence_x(x);
        have_closed = true;
    } catch (const gqd::Error& e) {
        // Non-X states have no closed route; with --oracle they fall through
        // to the minimizers alone.
        if (e.code() != gqd::Errc::NotXShape || !oracle) throw;
    }

    if (have_closed) {
        j["dg1"] = closed.d_g1;
        j["dg2"] = closed.d_g2;
        j["concurrence"] = closed.concurrence;
    }
    if (oracle) {
        gqd::OptimizerConfig cfg;
        cfg.seed = seed;
        const double dg1_o = gqd::gqd1_brute(rho, cfg);
        const double dg2_o = gqd::gqd2_brute(rho, cfg);
        const double conc_o = gqd::concurrence_wootters(rho);
        j["dg1_oracle"] = dg1_o;
        j["dg2_oracle"] = dg2_o;
        j["concurrence_oracle"] = conc_o;
        if (have_closed) {
            j["dg1_gap"] = dg1_o - closed.d_g1;
            j["dg2_gap"] = dg2_o - closed.d_g2;
            j["concurrence_gap"] = conc_o - closed.concurrence;
        }
    }
    write_output(out_path, j.dump(2) + "\n");
    return 0;
}

std::vector<gqd::PairLabel> parse_pairs(const std::string& arg) {
    std::vector<gqd::PairLabel> pairs;
    std::string token;
    for (std::size_t i = 0; i <= arg.size(); ++i) {
        if (i == arg.size() || arg[i] == ',') {
            if (!token.empty()) {
                const auto label = gqd::pair_from_name(token);
                if (!label || *label == gqd::PairLabel::c1_c2r2 ||
                    *label == gqd::PairLabel::c1_rest)
                    gqd::fail(gqd::Errc::InvalidArgument,
                              "unknown two-qubit pair label: " + token);
                pairs.push_back(*label);
                token.clear();
            }
        } else {
            token += arg[i];
        }
    }
    if (pairs.empty()) gqd::fail(gqd::Errc::InvalidArgument, "no pair labels given");
    return pairs;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"geometric quantum discord toolkit"};
    app.require_subcommand(1);

    std::string out_path;
    std::uint64_t seed = 1;
    int jobs = 0;
    app.add_option("--out", out_path, "output path (default: stdout)");
    app.add_option("--seed", seed, "random seed")->capture_default_str();
    app.add_option("--jobs", jobs, "worker threads (default: all cores)");

    auto* measure = app.add_subcommand("measure", "measures of a single two-qubit state");
    std::string state_path;
    bool oracle = false;
    measure->add_option("state", state_path, "state JSON file")->required();
    measure->add_flag("--oracle", oracle, "also run the minimization oracles");

    auto* dynamics = app.add_subcommand("dynamics", "pair-measure sweep over (alpha, kappa_t)");
    std::vector<double> alpha_list;
    double alpha_min = 0.1, alpha_max = 0.9, alpha_step = 0.1;
    double kt_min = 0.0, kt_max = 12.0, kt_step = 0.01;
    std::string pairs_arg = "c1c2,r1r2,c1r1,c1r2";
    dynamics->add_option("--alpha", alpha_list, "explicit alpha values");
    dynamics->add_option("--alpha-min", alpha_min)->capture_default_str();
    dynamics->add_option("--alpha-max", alpha_max)->capture_default_str();
    dynamics->add_option("--alpha-step", alpha_step)->capture_default_str();
    dynamics->add_option("--kt-min", kt_min)->capture_default_str();
    dynamics->add_option("--kt-max", kt_max)->capture_default_str();
    dynamics->add_option("--kt-step", kt_step)->capture_default_str();
    dynamics->add_option("--pairs", pairs_arg, "comma-separated pair labels")
        ->capture_default_str();

    auto* classify_cmd = app.add_subcommand("classify", "evolution types over an alpha scan");
    double c_alpha_min = 0.1, c_alpha_max = 0.95, c_alpha_step = 0.05;
    bool skip_boundaries = false;
    classify_cmd->add_option("--alpha-min", c_alpha_min)->capture_default_str();
    classify_cmd->add_option("--alpha-max", c_alpha_max)->capture_default_str();
    classify_cmd->add_option("--alpha-step", c_alpha_step)->capture_default_str();
    classify_cmd->add_flag("--no-boundaries", skip_boundaries,
                           "skip the transition bisections");

    auto* monogamy_cmd = app.add_subcommand("monogamy", "monogamy deficits over a kappa_t range");
    double m_alpha = 0.70710678118654752440;
    double m_kt_min = 0.0, m_kt_max = 5.0, m_kt_step = 0.01;
    monogamy_cmd->add_option("--alpha", m_alpha)->capture_default_str();
    monogamy_cmd->add_option("--kt-min", m_kt_min)->capture_default_str();
    monogamy_cmd->add_option("--kt-max", m_kt_max)->capture_default_str();
    monogamy_cmd->add_option("--kt-step", m_kt_step)->capture_default_str();

    auto* check = app.add_subcommand("oracle-check", "closed forms vs minimization oracles");
    int samples = 0, x_samples = 0, starts = 64;
    check->add_option("--samples", samples, "random two-qubit states")->required();
    check->add_option("--x-samples", x_samples, "random X states (default samples/10)");
    check->add_option("--starts", starts, "simplex starts per state")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        apply_jobs(jobs);

        if (*measure) return run_measure(state_path, oracle, seed, out_path);

        if (*dynamics) {
            const std::vector<double> alphas =
                alpha_list.empty() ? make_range(alpha_min, alpha_max, alpha_step) : alpha_list;
            const auto kts = make_range(kt_min, kt_max, kt_step);
            const auto pairs = parse_pairs(pairs_arg);
            const auto rows = gqd::dynamics_sweep(alphas, kts, pairs, gqd::Exec::parallel);
            write_output(out_path, gqd::dynamics_csv(rows));
            return 0;
        }

        if (*classify_cmd) {
            const auto alphas = make_range(c_alpha_min, c_alpha_max, c_alpha_step);
            const auto rows = gqd::classify_scan(alphas, gqd::Exec::parallel);
            write_output(out_path, gqd::classification_csv(rows));
            if (!skip_boundaries) {
                const auto b = gqd::boundary_scan();
                std::cout << "alpha_revival," << gqd::fmt12(b.alpha_revival) << "\n";
                std::cout << "alpha_sudden," << gqd::fmt12(b.alpha_sudden) << "\n";
            }
            return 0;
        }

        if (*monogamy_cmd) {
            const auto kts = make_range(m_kt_min, m_kt_max, m_kt_step);
            const auto rows = gqd::monogamy_sweep({m_alpha}, kts, gqd::Exec::parallel);
            write_output(out_path, gqd::monogamy_csv(rows));
            const auto sweep = gqd::sweep_reports(m_alpha, kts);
            static const char* names[9] = {"m3_g1",    "m3rho_g1", "m4_g1",
                                           "m3_g2",    "m3rho_g2", "m4_g2",
                                           "m3sq",     "m3sq_rho", "m4sq"};
            for (int c = 0; c < 9; ++c) {
                const auto& fl = sweep.flags[c];
                const char* verdict = fl.sign_changing          ? "sign-changing"
                                      : fl.always_nonneg && fl.always_nonpos ? "zero"
                                      : fl.always_nonneg        ? "always-nonnegative"
                                                                : "always-nonpositive";
                std::cout << "flag," << names[c] << "," << verdict << "\n";
            }
            return 0;
        }

        if (*check) {
            if (samples <= 0) gqd::fail(gqd::Errc::InvalidArgument, "--samples must be positive");
            if (x_samples <= 0) x_samples = std::max(1, samples / 10);
            gqd::OptimizerConfig cfg;
            cfg.seed = seed;
            cfg.starts = starts;
            const auto rep =
                gqd::oracle_certify(samples, x_samples, seed, cfg, gqd::Exec::parallel);
            std::string out;
            out += "samples," + std::to_string(rep.n_states) + "\n";
            out += "x_samples," + std::to_string(rep.n_x_states) + "\n";
            out += "gqd2_max_gap," + gqd::fmt12(rep.gqd2_max_gap) + ",tol," +
                   gqd::fmt12(gqd::kCertGqd2Tol) + "," +
                   (rep.gqd2_max_gap <= gqd::kCertGqd2Tol ? "PASS" : "FAIL") + "\n";
            out += "gqd1_min_gap," + gqd::fmt12(rep.gqd1_min_gap) + ",tol," +
                   gqd::fmt12(gqd::kCertGqd1Low) + "," +
                   (rep.gqd1_min_gap >= gqd::kCertGqd1Low ? "PASS" : "FAIL") + "\n";
            out += "gqd1_max_gap," + gqd::fmt12(rep.gqd1_max_gap) + ",tol," +
                   gqd::fmt12(gqd::kCertGqd1High) + "," +
                   (rep.gqd1_max_gap <= gqd::kCertGqd1High ? "PASS" : "FAIL") + "\n";
            out += "wootters_max_gap," + gqd::fmt12(rep.wootters_max_gap) + ",tol," +
                   gqd::fmt12(gqd::kCertWoottersTol) + "," +
                   (rep.wootters_max_gap <= gqd::kCertWoottersTol ? "PASS" : "FAIL") + "\n";
            out += std::string("overall,") + (rep.pass() ? "PASS" : "FAIL") + "\n";
            write_output(out_path, out);
            return rep.pass() ? 0 : 3;
        }
    } catch (const gqd::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
