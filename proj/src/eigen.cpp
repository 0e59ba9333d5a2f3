#include "gqd/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "gqd/errors.hpp"

namespace gqd {

namespace {

double off_diagonal_norm(const Mat& a) {
    double s = 0.0;
    const int n = a.rows();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

}  // namespace

EigenSystem hermitian_eigs(const Mat& h, bool want_vectors) {
    const int n = h.rows();
    if (n != h.cols() || n < 1 || n > 16)
        fail(Errc::InvalidArgument, "eigensolver expects a square matrix of dim <= 16");
    const double defect = h.hermiticity_defect();
    if (defect > 1e-10) fail(Errc::NotHermitian, "eigensolver input", defect);

    Mat a = h;
    // Symmetrize away the sub-tolerance defect so the iteration sees an
    // exactly Hermitian matrix.
    for (int i = 0; i < n; ++i) {
        a(i, i) = a(i, i).real();
        for (int j = i + 1; j < n; ++j) {
            const cplx m = 0.5 * (a(i, j) + std::conj(a(j, i)));
            a(i, j) = m;
            a(j, i) = std::conj(m);
        }
    }

    Mat v = want_vectors ? Mat::identity(n) : Mat();

    constexpr int kMaxSweeps = 100;
    constexpr double kOffTol = 1e-12;
    bool converged = false;
    for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
        if (off_diagonal_norm(a) < kOffTol) {
            converged = true;
            break;
        }
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const cplx g = a(p, q);
                const double ag = std::abs(g);
                if (ag == 0.0) continue;
                const cplx w = g / ag;  // phase of the pivot
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double tau = (aqq - app) / (2.0 * ag);
                // smaller-angle root of t^2 + 2 tau t - 1 = 0
                const double t = (tau >= 0.0) ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                              : -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                // Rotation U: U(p,p)=c, U(p,q)=s*w, U(q,p)=-s*conj(w), U(q,q)=c.
                for (int k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    const cplx akp = a(k, p);
                    const cplx akq = a(k, q);
                    a(k, p) = c * akp - s * std::conj(w) * akq;
                    a(k, q) = s * w * akp + c * akq;
                    a(p, k) = std::conj(a(k, p));
                    a(q, k) = std::conj(a(k, q));
                }
                const double anew_p = c * c * app + s * s * aqq - 2.0 * c * s * ag;
                const double anew_q = s * s * app + c * c * aqq + 2.0 * c * s * ag;
                a(p, p) = anew_p;
                a(q, q) = anew_q;
                a(p, q) = 0.0;
                a(q, p) = 0.0;

                if (want_vectors) {
                    for (int k = 0; k < n; ++k) {
                        const cplx vkp = v(k, p);
                        const cplx vkq = v(k, q);
                        v(k, p) = c * vkp - s * std::conj(w) * vkq;
                        v(k, q) = s * w * vkp + c * vkq;
                    }
                }
            }
        }
    }
    if (!converged && off_diagonal_norm(a) >= kOffTol)
        fail(Errc::NoConvergence, "Jacobi sweeps exhausted", off_diagonal_norm(a));

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int i, int j) { return a(i, i).real() < a(j, j).real(); });

    EigenSystem es;
    es.values.resize(n);
    for (int i = 0; i < n; ++i) es.values[i] = a(order[i], order[i]).real();
    if (want_vectors) {
        es.vectors = Mat(n, n);
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) es.vectors(k, j) = v(k, order[j]);
    }
    return es;
}

double trace_norm(const Mat& a) {
    const auto es = hermitian_eigs(a, /*want_vectors=*/false);
    double s = 0.0;
    for (double l : es.values) s += std::abs(l);
    return s;
}

double hs_norm_sq(const Mat& a) { return a.frobenius_sq(); }

}  // namespace gqd
