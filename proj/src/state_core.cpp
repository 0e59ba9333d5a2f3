#include "gqd/state_core.hpp"

#include <algorithm>
#include <cmath>

#include "gqd/eigen.hpp"

namespace gqd {

const Mat& pauli(int i) {
    static const std::array<Mat, 4> sigma = [] {
        std::array<Mat, 4> s{Mat(2, 2), Mat(2, 2), Mat(2, 2), Mat(2, 2)};
        s[0](0, 0) = 1.0;
        s[0](1, 1) = 1.0;
        s[1](0, 1) = 1.0;
        s[1](1, 0) = 1.0;
        s[2](0, 1) = cplx(0.0, -1.0);
        s[2](1, 0) = cplx(0.0, 1.0);
        s[3](0, 0) = 1.0;
        s[3](1, 1) = -1.0;
        return s;
    }();
    return sigma[i];
}

int DensityMatrix::qubits() const {
    int n = 0, d = dim();
    while (d > 1) {
        d >>= 1;
        ++n;
    }
    return n;
}

DensityMatrix validate_density(const Mat& m) {
    const int d = m.rows();
    if (d != m.cols() || (d != 2 && d != 4 && d != 8 && d != 16))
        fail(Errc::InvalidArgument, "density matrix dimension must be one of 2, 4, 8, 16");

    const double hdef = m.hermiticity_defect();
    if (hdef > 1e-12) fail(Errc::NotHermitian, "density matrix", hdef);

    const double tdef = std::abs(m.trace() - cplx(1.0));
    if (tdef > 1e-12) fail(Errc::TraceNotOne, "density matrix", tdef);

    const auto es = hermitian_eigs(m, /*want_vectors=*/false);
    if (es.values.front() < -1e-10)
        fail(Errc::NotPositive, "density matrix", es.values.front());

    return DensityMatrix{m};
}

namespace {

cplx trace_product(const Mat& rho, const Mat& op) {
    // Tr(rho * op) without forming the product.
    cplx t = 0.0;
    for (int i = 0; i < rho.rows(); ++i)
        for (int k = 0; k < rho.cols(); ++k) t += rho(i, k) * op(k, i);
    return t;
}

}  // namespace

BlochForm bloch_decompose(const DensityMatrix& rho) {
    if (rho.dim() != 4) fail(Errc::InvalidArgument, "Bloch decomposition expects a two-qubit state");
    BlochForm b;
    for (int i = 1; i <= 3; ++i) {
        b.x[i - 1] = trace_product(rho.m, kron(pauli(i), pauli(0))).real();
        b.y[i - 1] = trace_product(rho.m, kron(pauli(0), pauli(i))).real();
        for (int j = 1; j <= 3; ++j)
            b.gamma[i - 1][j - 1] = trace_product(rho.m, kron(pauli(i), pauli(j))).real();
    }
    return b;
}

DensityMatrix bloch_compose(const BlochForm& b) {
    Mat m = Mat::identity(4);
    for (int i = 1; i <= 3; ++i) {
        m += b.x[i - 1] * kron(pauli(i), pauli(0));
        m += b.y[i - 1] * kron(pauli(0), pauli(i));
        for (int j = 1; j <= 3; ++j) m += b.gamma[i - 1][j - 1] * kron(pauli(i), pauli(j));
    }
    m *= 0.25;
    return validate_density(m);
}

Mat XState::to_matrix() const {
    Mat m(4, 4);
    m(0, 0) = rho11;
    m(1, 1) = rho22;
    m(2, 2) = rho33;
    m(3, 3) = rho44;
    m(2, 1) = rho32;
    m(1, 2) = std::conj(rho32);
    m(3, 0) = rho41;
    m(0, 3) = std::conj(rho41);
    return m;
}

XState x_project(const DensityMatrix& rho) {
    if (rho.dim() != 4) fail(Errc::InvalidArgument, "X projection expects a two-qubit state");
    double worst = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            const bool on_pattern = (i == j) || (i + j == 3);
            if (!on_pattern) worst = std::max(worst, std::abs(rho.m(i, j)));
        }
    if (worst > 1e-10) fail(Errc::NotXShape, "off-pattern entry", worst);

    XState x;
    x.rho11 = rho.m(0, 0).real();
    x.rho22 = rho.m(1, 1).real();
    x.rho33 = rho.m(2, 2).real();
    x.rho44 = rho.m(3, 3).real();
    x.rho32 = rho.m(2, 1);
    x.rho41 = rho.m(3, 0);
    return x;
}

XSpectralData x_spectral(const XState& x) {
    // Phase canonicalization: local z-rotations can give both coherences any
    // phase independently, so only the magnitudes are physical. Taking them
    // nonnegative orders gamma1 >= |gamma2|.
    const double a32 = std::abs(x.rho32);
    const double a41 = std::abs(x.rho41);

    XSpectralData d;
    d.gamma1 = 2.0 * (a32 + a41);
    d.gamma2 = 2.0 * (a32 - a41);
    d.gamma3 = 1.0 - 2.0 * (x.rho22 + x.rho33);
    d.x3 = 2.0 * (x.rho11 + x.rho22) - 1.0;
    d.gamma_min = std::min(d.gamma3 * d.gamma3, d.gamma1 * d.gamma1);
    d.gamma_max = std::max(d.gamma3 * d.gamma3, d.gamma2 * d.gamma2 + d.x3 * d.x3);
    d.gamma_min_prime = std::min(d.gamma1 * d.gamma1, d.gamma3 * d.gamma3 + d.x3 * d.x3);
    d.eta = (a41 >= a32) ? std::sqrt(x.rho22 * x.rho33) : std::sqrt(x.rho11 * x.rho44);
    return d;
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
    if (a.dim() * b.dim() > 16)
        fail(Errc::InvalidArgument, "tensor product exceeds the 4-qubit ceiling");
    return DensityMatrix{kron(a.m, b.m)};
}

namespace {

void check_keep(const std::vector<int>& keep, int n_qubits) {
    if (keep.empty()) fail(Errc::InvalidArgument, "empty qubit subset");
    for (std::size_t i = 0; i < keep.size(); ++i) {
        if (keep[i] < 0 || keep[i] >= n_qubits)
            fail(Errc::InvalidArgument, "qubit index out of range");
        if (i > 0 && keep[i] <= keep[i - 1])
            fail(Errc::InvalidArgument, "qubit subset must be strictly increasing");
    }
}

// Assembles a full basis index from kept-subsystem and environment indices.
// Big-endian: qubit q owns bit (n-1-q).
int assemble_index(int kept_bits, int env_bits, const std::vector<int>& keep,
                   const std::vector<int>& env, int n_qubits) {
    int idx = 0;
    const int k = static_cast<int>(keep.size());
    const int e = static_cast<int>(env.size());
    for (int i = 0; i < k; ++i) {
        const int bit = (kept_bits >> (k - 1 - i)) & 1;
        idx |= bit << (n_qubits - 1 - keep[i]);
    }
    for (int i = 0; i < e; ++i) {
        const int bit = (env_bits >> (e - 1 - i)) & 1;
        idx |= bit << (n_qubits - 1 - env[i]);
    }
    return idx;
}

std::vector<int> complement_of(const std::vector<int>& keep, int n_qubits) {
    std::vector<int> env;
    for (int q = 0; q < n_qubits; ++q)
        if (std::find(keep.begin(), keep.end(), q) == keep.end()) env.push_back(q);
    return env;
}

}  // namespace

DensityMatrix reduce(const DensityMatrix& rho, const std::vector<int>& keep) {
    const int n = rho.qubits();
    check_keep(keep, n);
    const auto env = complement_of(keep, n);
    const int dk = 1 << keep.size();
    const int de = 1 << env.size();

    Mat out(dk, dk);
    for (int i = 0; i < dk; ++i)
        for (int j = 0; j < dk; ++j) {
            cplx s = 0.0;
            for (int e = 0; e < de; ++e)
                s += rho.m(assemble_index(i, e, keep, env, n), assemble_index(j, e, keep, env, n));
            out(i, j) = s;
        }
    return DensityMatrix{out};
}

DensityMatrix reduce(const std::vector<cplx>& psi, int n_qubits, const std::vector<int>& keep) {
    if (static_cast<int>(psi.size()) != (1 << n_qubits))
        fail(Errc::InvalidArgument, "amplitude count does not match the qubit count");
    check_keep(keep, n_qubits);
    if (keep.size() > 4) fail(Errc::InvalidArgument, "kept marginal exceeds the 4-qubit ceiling");
    const auto env = complement_of(keep, n_qubits);
    const int dk = 1 << keep.size();
    const int de = 1 << env.size();

    Mat out(dk, dk);
    for (int i = 0; i < dk; ++i)
        for (int j = 0; j < dk; ++j) {
            cplx s = 0.0;
            for (int e = 0; e < de; ++e)
                s += psi[assemble_index(i, e, keep, env, n_qubits)] *
                     std::conj(psi[assemble_index(j, e, keep, env, n_qubits)]);
            out(i, j) = s;
        }
    return DensityMatrix{out};
}

XState logical_compress(const DensityMatrix& rho, const std::vector<cplx>& basis0,
                        const std::vector<cplx>& basis1) {
    if (rho.dim() != 8) fail(Errc::InvalidArgument, "logical compression expects a 2x4 state");
    if (basis0.size() != 4 || basis1.size() != 4)
        fail(Errc::InvalidArgument, "logical basis vectors must live in the 4-dim factor");

    cplx overlap = 0.0;
    for (int k = 0; k < 4; ++k) overlap += std::conj(basis0[k]) * basis1[k];
    if (std::abs(overlap) > 1e-10 || std::abs(vec_norm_sq(basis0) - 1.0) > 1e-10 ||
        std::abs(vec_norm_sq(basis1) - 1.0) > 1e-10)
        fail(Errc::InvalidArgument, "logical basis is not orthonormal", std::abs(overlap));

    const std::vector<cplx>* basis[2] = {&basis0, &basis1};
    Mat logical(4, 4);
    for (int a = 0; a < 2; ++a)
        for (int i = 0; i < 2; ++i)
            for (int b = 0; b < 2; ++b)
                for (int j = 0; j < 2; ++j) {
                    cplx s = 0.0;
                    for (int k = 0; k < 4; ++k)
                        for (int l = 0; l < 4; ++l)
                            s += std::conj((*basis[i])[k]) * rho.m(4 * a + k, 4 * b + l) *
                                 (*basis[j])[l];
                    logical(2 * a + i, 2 * b + j) = s;
                }

    const double leak = 1.0 - logical.trace().real();
    if (leak > 1e-10) fail(Errc::SupportLeak, "state weight outside the logical span", leak);

    return x_project(DensityMatrix{logical});
}

}  // namespace gqd
