#include "gqd/sampling.hpp"

#include <cmath>

namespace gqd {

namespace {

std::uint64_t splitmix(std::uint64_t& s) {
    s += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

constexpr double kTwoPi = 6.28318530717958647692;

}  // namespace

Rng::Rng(std::uint64_t seed, std::uint64_t stream) : s_(seed) {
    // Fold the stream id in through two rounds so neighbouring streams decorrelate.
    s_ ^= 0xd1342543de82ef95ull * (stream + 1);
    splitmix(s_);
    splitmix(s_);
}

std::uint64_t Rng::next_u64() { return splitmix(s_); }

double Rng::next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

double Rng::uniform(double a, double b) { return a + (b - a) * next_double(); }

double Rng::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    double u1 = next_double();
    while (u1 <= 0.0) u1 = next_double();
    const double u2 = next_double();
    const double r = std::sqrt(-2.0 * std::log(u1));
    spare_ = r * std::sin(kTwoPi * u2);
    has_spare_ = true;
    return r * std::cos(kTwoPi * u2);
}

cplx Rng::normal_cplx() {
    const double re = normal();
    const double im = normal();
    return cplx(re, im);
}

DensityMatrix random_density(Rng& rng, int dim) {
    Mat g(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) g(i, j) = rng.normal_cplx();
    Mat rho = g * g.adjoint();
    rho *= 1.0 / rho.trace().real();
    // Exact Hermitian symmetrization; the product can be off by an ulp.
    for (int i = 0; i < dim; ++i) {
        rho(i, i) = rho(i, i).real();
        for (int j = i + 1; j < dim; ++j) {
            const cplx m = 0.5 * (rho(i, j) + std::conj(rho(j, i)));
            rho(i, j) = m;
            rho(j, i) = std::conj(m);
        }
    }
    return DensityMatrix{rho};
}

namespace {

std::array<double, 4> flat_simplex4(Rng& rng) {
    // Exponential spacings normalized to the probability simplex.
    std::array<double, 4> e{};
    double sum = 0.0;
    for (double& v : e) {
        double u = rng.next_double();
        while (u <= 0.0) u = rng.next_double();
        v = -std::log(u);
        sum += v;
    }
    for (double& v : e) v /= sum;
    return e;
}

}  // namespace

XState random_x_state(Rng& rng) {
    const auto d = flat_simplex4(rng);
    XState x;
    x.rho11 = d[0];
    x.rho22 = d[1];
    x.rho33 = d[2];
    x.rho44 = d[3];
    x.rho41 = std::polar(rng.next_double() * std::sqrt(x.rho11 * x.rho44),
                         rng.uniform(0.0, kTwoPi));
    x.rho32 = std::polar(rng.next_double() * std::sqrt(x.rho22 * x.rho33),
                         rng.uniform(0.0, kTwoPi));
    return x;
}

XState random_symmetric_x(Rng& rng) {
    const auto d = flat_simplex4(rng);
    XState x;
    x.rho11 = d[0];
    x.rho22 = d[1];
    x.rho33 = d[2];
    x.rho44 = d[3];
    x.rho41 = std::polar(rng.next_double() * std::sqrt(x.rho11 * x.rho44),
                         rng.uniform(0.0, kTwoPi));
    x.rho32 = 0.0;
    return x;
}

XState random_bell_diagonal(Rng& rng) {
    // rho = (I + sum_i c_i sigma_i x sigma_i) / 4, positive iff (c1,c2,c3)
    // lies in the tetrahedron with vertices (1,-1,1),(-1,1,1),(1,1,-1),(-1,-1,-1).
    double c1, c2, c3;
    for (;;) {
        c1 = rng.uniform(-1.0, 1.0);
        c2 = rng.uniform(-1.0, 1.0);
        c3 = rng.uniform(-1.0, 1.0);
        const double e1 = 1.0 - c1 - c2 - c3;
        const double e2 = 1.0 - c1 + c2 + c3;
        const double e3 = 1.0 + c1 - c2 + c3;
        const double e4 = 1.0 + c1 + c2 - c3;
        if (e1 >= 0.0 && e2 >= 0.0 && e3 >= 0.0 && e4 >= 0.0) break;
    }
    XState x;
    x.rho11 = x.rho44 = 0.25 * (1.0 + c3);
    x.rho22 = x.rho33 = 0.25 * (1.0 - c3);
    x.rho41 = 0.25 * (c1 - c2);
    x.rho32 = 0.25 * (c1 + c2);
    return x;
}

SchmidtPair random_schmidt(Rng& rng) {
    const double l0 = rng.uniform(0.5, 1.0);
    return SchmidtPair(l0, 1.0 - l0);
}

Mat random_local_unitary(Rng& rng) {
    auto haar_su2 = [&rng] {
        // Normalized complex Gaussian pair -> Haar-uniform SU(2).
        cplx a = rng.normal_cplx();
        cplx b = rng.normal_cplx();
        const double n = std::sqrt(std::norm(a) + std::norm(b));
        a /= n;
        b /= n;
        Mat u(2, 2);
        u(0, 0) = a;
        u(0, 1) = b;
        u(1, 0) = -std::conj(b);
        u(1, 1) = std::conj(a);
        return u;
    };
    return kron(haar_su2(), haar_su2());
}

std::vector<double> random_w_amplitudes(Rng& rng, int n) {
    std::vector<double> a(n);
    double sum = 0.0;
    for (double& v : a) {
        v = rng.uniform(0.05, 1.0);
        sum += v * v;
    }
    const double inv = 1.0 / std::sqrt(sum);
    for (double& v : a) v *= inv;
    return a;
}

}  // namespace gqd
