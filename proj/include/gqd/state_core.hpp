#pragma once

#include <array>
#include <cmath>
#include <vector>

#include "gqd/errors.hpp"
#include "gqd/matrix.hpp"

namespace gqd {

/// pauli(0) is the 2x2 identity, pauli(1..3) the Pauli matrices.
const Mat& pauli(int i);

/// A validated few-qubit density matrix (dim in {2,4,8,16}). Construct
/// through validate_density for untrusted input; internal operations that
/// preserve the invariants by construction fill the struct directly.
struct DensityMatrix {
    Mat m;
    int dim() const { return m.rows(); }
    int qubits() const;
};

/// Validation gate: Hermitian to 1e-12, unit trace to 1e-12, smallest
/// eigenvalue >= -1e-10 (via the Jacobi eigensolver).
DensityMatrix validate_density(const Mat& m);

/// Two-qubit Bloch data: local vectors and the 3x3 correlation matrix.
struct BlochForm {
    std::array<double, 3> x{};
    std::array<double, 3> y{};
    double gamma[3][3] = {};
};

BlochForm bloch_decompose(const DensityMatrix& rho);

/// Inverse of bloch_decompose; validates the result, so unphysical Bloch
/// data surfaces as NotPositive.
DensityMatrix bloch_compose(const BlochForm& b);

/// The seven entries of an X-form two-qubit state: diagonal plus the two
/// anti-diagonal coherences rho41 = <11|rho|00> and rho32 = <10|rho|01>.
struct XState {
    double rho11 = 0, rho22 = 0, rho33 = 0, rho44 = 0;
    cplx rho32{}, rho41{};

    bool symmetric(double tol = 1e-12) const {
        return std::abs(rho32) <= tol || std::abs(rho41) <= tol;
    }
    Mat to_matrix() const;
};

/// Extracts the X entries; throws NotXShape (with the largest offending
/// magnitude) when any off-pattern entry exceeds 1e-10.
XState x_project(const DensityMatrix& rho);

/// Correlation data of an X state after phase canonicalization: local
/// z-rotations make both coherences real nonnegative, which fixes the
/// ordering gamma1 >= |gamma2| the trace-norm closed form expects.
struct XSpectralData {
    double gamma1 = 0;           // 2(|rho32| + |rho41|)
    double gamma2 = 0;           // 2(|rho32| - |rho41|)
    double gamma3 = 0;           // 1 - 2(rho22 + rho33)
    double x3 = 0;               // 2(rho11 + rho22) - 1
    double gamma_min = 0;        // min(gamma3^2, gamma1^2)
    double gamma_max = 0;        // max(gamma3^2, gamma2^2 + x3^2)
    double gamma_min_prime = 0;  // min(gamma1^2, gamma3^2 + x3^2)
    double eta = 0;              // geometric mean of the diagonal pair opposite the dominant coherence
};

XSpectralData x_spectral(const XState& x);

/// Eigenvalue pair of a one-party reduced state of a pure bipartition.
struct SchmidtPair {
    double lambda0, lambda1;  // lambda0 >= lambda1, sum 1

    SchmidtPair(double l0, double l1) : lambda0(l0), lambda1(l1) {
        if (lambda0 < lambda1) std::swap(lambda0, lambda1);
        if (std::abs(lambda0 + lambda1 - 1.0) > 1e-9 || lambda1 < -1e-12)
            fail(Errc::InvalidArgument, "Schmidt eigenvalues must be a probability pair",
                 std::abs(lambda0 + lambda1 - 1.0));
    }
};

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);

/// Partial trace keeping the given strictly-increasing qubit subset.
/// Qubit indexing is big-endian: qubit 0 is the most significant bit of the
/// computational-basis index.
DensityMatrix reduce(const DensityMatrix& rho, const std::vector<int>& keep);

/// Same, directly from a pure-state amplitude vector of n_qubits qubits
/// (n_qubits may exceed 4 as long as the kept marginal fits in 16 dims).
DensityMatrix reduce(const std::vector<cplx>& psi, int n_qubits, const std::vector<int>& keep);

/// Compresses the 4-dim factor of a (2 x 4)-dim state onto the logical qubit
/// spanned by two orthonormal 4-vectors. Support outside the span above
/// 1e-10 throws SupportLeak with the leaked weight.
XState logical_compress(const DensityMatrix& rho, const std::vector<cplx>& basis0,
                        const std::vector<cplx>& basis1);

}  // namespace gqd
