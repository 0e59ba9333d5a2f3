#pragma once

#include <vector>

#include "gqd/matrix.hpp"

namespace gqd {

struct EigenSystem {
    std::vector<double> values;  // ascending
    Mat vectors;                 // eigenvectors as columns; empty unless requested
};

/// Cyclic Jacobi diagonalization of a complex Hermitian matrix (dim <= 16).
/// The (p,q) sweep order is fixed, so results are bit-for-bit reproducible.
/// Stops once the off-diagonal Frobenius norm drops below 1e-12; throws
/// NoConvergence after 100 sweeps and NotHermitian when the input deviates
/// from Hermiticity by more than 1e-10.
EigenSystem hermitian_eigs(const Mat& h, bool want_vectors = true);

/// Schatten-1 norm of a Hermitian matrix: sum of |eigenvalue|.
double trace_norm(const Mat& a);

/// Squared Hilbert-Schmidt norm Tr(A^dag A); defined for any matrix.
double hs_norm_sq(const Mat& a);

}  // namespace gqd
