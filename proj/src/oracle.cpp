#include "gqd/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "gqd/optimize.hpp"

namespace gqd {

namespace {

constexpr double kPi = 3.14159265358979323846;

Mat qubit_from_bloch(const std::array<double, 3>& r) {
    Mat m(2, 2);
    m(0, 0) = 0.5 * (1.0 + r[2]);
    m(1, 1) = 0.5 * (1.0 - r[2]);
    m(0, 1) = 0.5 * cplx(r[0], -r[1]);
    m(1, 0) = 0.5 * cplx(r[0], r[1]);
    return m;
}

void basis_pair(double theta, double phi, cplx v[2], cplx w[2]) {
    const double c = std::cos(0.5 * theta);
    const double s = std::sin(0.5 * theta);
    const cplx e = std::polar(1.0, phi);
    v[0] = c;
    v[1] = e * s;
    w[0] = -std::conj(v[1]);
    w[1] = std::conj(v[0]);
}

Mat rank1(const cplx v[2]) {
    Mat m(2, 2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) m(i, j) = v[i] * std::conj(v[j]);
    return m;
}

}  // namespace

Mat CQCandidate::to_matrix() const {
    cplx v[2], w[2];
    basis_pair(theta, phi, v, w);
    Mat chi = kron(rank1(v), qubit_from_bloch(r0)) * cplx(p) +
              kron(rank1(w), qubit_from_bloch(r1)) * cplx(1.0 - p);
    return chi;
}

namespace {

// --- shared CQ parameter transform ------------------------------------------

// u[0] = theta (periodic), u[1] = phi (periodic), u[2] -> p via sine,
// u[3..5] / u[6..8] -> conditional Bloch vectors, projected onto the ball.
CQCandidate decode_candidate(const std::vector<double>& u) {
    CQCandidate c;
    c.theta = u[0];
    c.phi = u[1];
    c.p = 0.5 * (1.0 + std::sin(u[2]));
    for (int k = 0; k < 3; ++k) {
        c.r0[k] = u[3 + k];
        c.r1[k] = u[6 + k];
    }
    auto project = [](std::array<double, 3>& r) {
        const double n = std::sqrt(r[0] * r[0] + r[1] * r[1] + r[2] * r[2]);
        if (n > 1.0)
            for (double& v : r) v /= n;
    };
    project(c.r0);
    project(c.r1);
    return c;
}

// Scrambled 9-dim low-discrepancy starts: an additive Weyl sequence with the
// generalized golden-ratio steps, offset derived from the seed.
std::vector<std::vector<double>> weyl_starts(int count, std::uint64_t seed) {
    constexpr int kDim = 9;
    double phi = 1.5;
    for (int it = 0; it < 64; ++it) phi = std::pow(1.0 + phi, 1.0 / (kDim + 1));
    double g[kDim];
    double p = 1.0;
    for (int k = 0; k < kDim; ++k) {
        p /= phi;
        g[k] = p;
    }

    std::uint64_t z = seed;
    auto mix = [&z] {
        z += 0x9e3779b97f4a7c15ull;
        std::uint64_t x = z;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
        x = x ^ (x >> 31);
        return static_cast<double>(x >> 11) * 0x1.0p-53;
    };
    double offset[kDim];
    for (double& o : offset) o = mix();

    std::vector<std::vector<double>> starts(count, std::vector<double>(kDim));
    for (int j = 0; j < count; ++j)
        for (int k = 0; k < kDim; ++k) {
            double t = offset[k] + (j + 1) * g[k];
            t -= std::floor(t);
            switch (k) {
                case 0: starts[j][k] = kPi * t; break;
                case 1: starts[j][k] = 2.0 * kPi * t; break;
                case 2: starts[j][k] = kPi * (t - 0.5); break;
                default: starts[j][k] = 2.0 * t - 1.0; break;
            }
        }
    return starts;
}

// Encodes the dephased state in the (theta, phi) basis as a CQ start point:
// the exact optimum for the HS norm in a fixed basis and a strong warm start
// for the trace norm.
std::vector<double> dephased_start(const DensityMatrix& rho, double theta, double phi) {
    cplx v[2], w[2];
    basis_pair(theta, phi, v, w);
    const cplx* basis[2] = {v, w};

    std::vector<double> u(9, 0.0);
    u[0] = theta;
    u[1] = phi;
    double prob0 = 0.5;
    for (int which = 0; which < 2; ++which) {
        const cplx* b = basis[which];
        Mat cond(2, 2);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                cplx s = 0.0;
                for (int a = 0; a < 2; ++a)
                    for (int c = 0; c < 2; ++c)
                        s += std::conj(b[a]) * rho.m(2 * a + i, 2 * c + j) * b[c];
                cond(i, j) = s;
            }
        const double prob = std::max(1e-12, cond.trace().real());
        if (which == 0) prob0 = prob;
        for (int k = 1; k <= 3; ++k) {
            cplx t = 0.0;
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) t += cond(i, j) * pauli(k)(j, i);
            u[3 + 3 * which + (k - 1)] = t.real() / prob;
        }
    }
    u[2] = std::asin(std::clamp(2.0 * prob0 - 1.0, -1.0, 1.0));
    return u;
}

// --- HS-norm dephasing objective ---------------------------------------------

// f(theta, phi) = 2 (Tr rho^2 - ||R00||^2 - ||R11||^2) where R00/R11 are the
// conditional blocks in the measured basis. Equals 2 ||rho - Pi(rho)||_2^2.
struct DephaseObjective {
    cplx b[2][2][2][2];  // b[a][c][i][j] = <a i| rho |c j>
    double tr_rho_sq;

    explicit DephaseObjective(const DensityMatrix& rho) {
        for (int a = 0; a < 2; ++a)
            for (int c = 0; c < 2; ++c)
                for (int i = 0; i < 2; ++i)
                    for (int j = 0; j < 2; ++j) b[a][c][i][j] = rho.m(2 * a + i, 2 * c + j);
        tr_rho_sq = rho.m.frobenius_sq();
    }

    double operator()(double theta, double phi) const {
        const double v0 = std::cos(0.5 * theta);
        const cplx v1 = std::polar(std::sin(0.5 * theta), phi);
        const double c00 = v0 * v0;
        const double c11 = std::norm(v1);
        const cplx c01 = v0 * v1;  // conj(v0) v1 with real v0
        const cplx c10 = std::conj(c01);

        double captured = 0.0;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                const cplx r00 = c00 * b[0][0][i][j] + c01 * b[0][1][i][j] +
                                 c10 * b[1][0][i][j] + c11 * b[1][1][i][j];
                const cplx r11 = c11 * b[0][0][i][j] - c01 * b[0][1][i][j] -
                                 c10 * b[1][0][i][j] + c00 * b[1][1][i][j];
                captured += std::norm(r00) + std::norm(r11);
            }
        return 2.0 * (tr_rho_sq - captured);
    }
};

double multistart_cq_min(const std::function<double(const std::vector<double>&)>& objective,
                         const DensityMatrix& rho, const OptimizerConfig& cfg) {
    auto starts = weyl_starts(cfg.starts, cfg.seed);
    starts.push_back(dephased_start(rho, 0.0, 0.0));
    starts.push_back(dephased_start(rho, 0.5 * kPi, 0.0));

    const std::vector<double> step = {0.4, 0.4, 0.3, 0.25, 0.25, 0.25, 0.25, 0.25, 0.25};
    const int n = static_cast<int>(starts.size());
    std::vector<NMResult> results(n);
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n; ++i)
        results[i] = nelder_mead(objective, starts[i], step, cfg.max_iters, cfg.f_tol);

    int best = 0;
    for (int i = 1; i < n; ++i)
        if (results[i].value < results[best].value) best = i;

    // Local polish around the winner tightens the tail without new starts.
    const std::vector<double> fine_step(9, 0.02);
    const auto polished =
        nelder_mead(objective, results[best].x, fine_step, cfg.max_iters, 1e-13);
    return std::max(0.0, std::min(results[best].value, polished.value));
}

}  // namespace

double gqd2_brute(const DensityMatrix& rho, const OptimizerConfig& cfg, bool full_search) {
    if (rho.dim() != 4) fail(Errc::InvalidArgument, "discord oracle expects a two-qubit state");

    if (full_search) {
        auto objective = [&rho](const std::vector<double>& u) {
            const Mat chi = decode_candidate(u).to_matrix();
            return 2.0 * hs_norm_sq(rho.m - chi);
        };
        return multistart_cq_min(objective, rho, cfg);
    }

    const DephaseObjective f(rho);

    // Coarse basis grid: 181 polar x 360 azimuthal points.
    const double dth = kPi / 180.0;
    const double dph = 2.0 * kPi / 360.0;
    double best_val = f(0.0, 0.0);
    double best_th = 0.0, best_ph = 0.0;
    for (int it = 0; it <= 180; ++it) {
        const double th = it * dth;
        for (int ip = 0; ip < 360; ++ip) {
            const double ph = ip * dph;
            const double val = f(th, ph);
            if (val < best_val) {
                best_val = val;
                best_th = th;
                best_ph = ph;
            }
        }
    }

    // Alternating golden sections shrink the angles to 1e-10.
    double th = best_th, ph = best_ph, val = best_val;
    for (int round = 0; round < 40; ++round) {
        auto [t, vt] = golden_min([&](double a) { return f(a, ph); }, th - 2.0 * dth,
                                  th + 2.0 * dth, 1e-10);
        th = t;
        auto [q, vq] = golden_min([&](double a) { return f(th, a); }, ph - 2.0 * dph,
                                  ph + 2.0 * dph, 1e-10);
        ph = q;
        if (val - vq < 1e-16) {
            val = std::min(val, vq);
            break;
        }
        val = std::min({val, vt, vq});
    }
    return std::max(0.0, val);
}

double gqd1_brute(const DensityMatrix& rho, const OptimizerConfig& cfg) {
    if (rho.dim() != 4) fail(Errc::InvalidArgument, "discord oracle expects a two-qubit state");
    auto objective = [&rho](const std::vector<double>& u) {
        const Mat chi = decode_candidate(u).to_matrix();
        return trace_norm(rho.m - chi);
    };
    return multistart_cq_min(objective, rho, cfg);
}

double concurrence_wootters(const DensityMatrix& rho) {
    if (rho.dim() != 4) fail(Errc::InvalidArgument, "concurrence expects a two-qubit state");
    const Mat yy = kron(pauli(2), pauli(2));
    const Mat rho_tilde = yy * rho.m.conjugate() * yy;

    const auto es = hermitian_eigs(rho.m, /*want_vectors=*/true);
    Mat sqrt_rho(4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            cplx s = 0.0;
            for (int k = 0; k < 4; ++k)
                s += es.vectors(i, k) * std::sqrt(std::max(0.0, es.values[k])) *
                     std::conj(es.vectors(j, k));
            sqrt_rho(i, j) = s;
        }

    // Eigenvalues of rho * rho_tilde equal those of the Hermitian
    // sqrt(rho) rho_tilde sqrt(rho).
    const auto mu = hermitian_eigs(sqrt_rho * rho_tilde * sqrt_rho, /*want_vectors=*/false);
    double c = 0.0;
    for (int i = 3; i >= 0; --i) {
        const double root = std::sqrt(std::max(0.0, mu.values[i]));
        c += (i == 3) ? root : -root;
    }
    return std::max(0.0, c);
}

}  // namespace gqd
