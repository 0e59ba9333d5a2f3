#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "gqd/measures.hpp"
#include "gqd/oracle.hpp"
#include "gqd/sampling.hpp"
#include "helpers.hpp"

using namespace gqd;
using namespace gqd::test;

namespace {

// A zero-discord state with a tilted measurement basis, so the minimizers
// actually have to find the basis.
DensityMatrix tilted_cq_state() {
    CQCandidate cq;
    cq.theta = 1.1;
    cq.phi = 0.6;
    cq.p = 0.35;
    cq.r0 = {0.3, 0.2, -0.4};
    cq.r1 = {-0.5, 0.1, 0.6};
    return DensityMatrix{cq.to_matrix()};
}

}  // namespace

TEST_CASE("hermitian_eigs on fixed matrices") {
    Mat d(3, 3);
    d(0, 0) = 3.0;
    d(1, 1) = 1.0;
    d(2, 2) = 2.0;
    const auto es = hermitian_eigs(d);
    CHECK(es.values[0] == 1.0);
    CHECK(es.values[1] == 2.0);
    CHECK(es.values[2] == 3.0);

    const auto sx = hermitian_eigs(pauli(1));
    CHECK(sx.values[0] == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(sx.values[1] == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("hermitian_eigs reconstructs random Hermitian matrices") {
    for (int dim : {2, 3, 4, 8, 16}) {
        for (int rep = 0; rep < 20; ++rep) {
            Rng rng(201 + dim, rep);
            Mat h(dim, dim);
            for (int i = 0; i < dim; ++i) {
                h(i, i) = rng.normal();
                for (int j = i + 1; j < dim; ++j) {
                    h(i, j) = 0.5 * rng.normal_cplx();
                    h(j, i) = std::conj(h(i, j));
                }
            }
            const auto es = hermitian_eigs(h);

            Mat recon(dim, dim);
            for (int i = 0; i < dim; ++i)
                for (int j = 0; j < dim; ++j) {
                    cplx s = 0.0;
                    for (int k = 0; k < dim; ++k)
                        s += es.vectors(i, k) * es.values[k] * std::conj(es.vectors(j, k));
                    recon(i, j) = s;
                }
            CHECK(max_entry_diff(recon, h) <= 1e-10);

            double sum = 0.0;
            for (double l : es.values) sum += l;
            CHECK(std::abs(sum - h.trace().real()) <= 1e-12);
        }
    }
}

TEST_CASE("hermitian_eigs keeps positive semidefinite spectra nonnegative") {
    for (int rep = 0; rep < 50; ++rep) {
        Rng rng(207, rep);
        const auto rho = random_density(rng, 8);
        CHECK(hermitian_eigs(rho.m, false).values.front() >= -1e-10);
    }
}

TEST_CASE("hermitian_eigs rejects non-Hermitian input") {
    Mat m(2, 2);
    m(0, 1) = 1.0;  // no conjugate partner
    CHECK_THROWS_AS(hermitian_eigs(m), Error);
}

TEST_CASE("norm evaluators") {
    Mat d(2, 2);
    d(0, 0) = 0.5;
    d(1, 1) = -0.5;
    CHECK(trace_norm(d) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(trace_norm(Mat(3, 3)) == 0.0);
    CHECK(hs_norm_sq(Mat(3, 3)) == 0.0);

    for (int rep = 0; rep < 50; ++rep) {
        Rng rng(211, rep);
        Mat h(4, 4);
        for (int i = 0; i < 4; ++i) {
            h(i, i) = rng.normal();
            for (int j = i + 1; j < 4; ++j) {
                h(i, j) = 0.5 * rng.normal_cplx();
                h(j, i) = std::conj(h(i, j));
            }
        }
        CHECK(trace_norm(h) >= std::sqrt(hs_norm_sq(h)) - 1e-12);
    }
}

TEST_CASE("gqd2_brute reference values") {
    CHECK(gqd2_brute(tilted_cq_state()) <= 1e-12);
    CHECK(std::abs(gqd2_brute(bell_state()) - 1.0) <= 1e-6);
}

TEST_CASE("gqd2_brute full CQ search cross-checks the dephasing route") {
    for (int i = 0; i < 5; ++i) {
        Rng rng(223, i);
        const auto rho = random_density(rng);
        const double dephased = gqd2_brute(rho);
        const double full = gqd2_brute(rho, {}, /*full_search=*/true);
        CHECK(full >= dephased - 1e-9);  // dephased state is the in-basis optimum
        CHECK(full <= dephased + 5e-4);
    }
}

TEST_CASE("gqd1_brute reference values") {
    CHECK(gqd1_brute(tilted_cq_state()) <= 1e-8);
    CHECK(std::abs(gqd1_brute(bell_state()) - 1.0) <= 5e-3);
}

TEST_CASE("gqd1_brute upper-bounds the closed form") {
    for (int i = 0; i < 10; ++i) {
        Rng rng(227, i);
        const auto x = random_symmetric_x(rng);
        const double closed = gqd1_x(x);
        const double brute = gqd1_brute(DensityMatrix{x.to_matrix()});
        CHECK(brute >= closed - 1e-9);
        CHECK(brute <= closed + 5e-3);
    }
}

TEST_CASE("concurrence_wootters reference values") {
    CHECK(concurrence_wootters(bell_state()) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(concurrence_wootters(maximally_mixed()) == 0.0);
}

TEST_CASE("trace norm distance is invariant under joint local rotation") {
    for (int i = 0; i < 10; ++i) {
        Rng rng(229, i);
        const auto rho = random_density(rng);
        const auto chi = tilted_cq_state();
        const Mat u = random_local_unitary(rng);
        CHECK(std::abs(trace_norm(u * (rho.m - chi.m) * u.adjoint()) -
                       trace_norm(rho.m - chi.m)) <= 1e-10);
    }
}
