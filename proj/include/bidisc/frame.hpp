#pragma once

// Orthonormal frames over the symmetric subspace: the carrier for wandering
// subspaces and invariant-subspace bases.  Orthogonalization is ordered
// Gram-Schmidt with two re-orthogonalization passes; rank is decided by
// discarding directions whose residual falls below rank_tol times the largest
// input norm.  Output is deterministic given the input order, including the
// phase of each vector (largest coordinate rotated to the positive real axis).

#include <vector>

#include "bidisc/hardy.hpp"

namespace bidisc {

struct Frame {
    std::vector<SymVector> vectors;  // orthonormal
    double rank_tol = 1e-10;
    int source_count = 0;  // raw inputs before rank reduction

    int rank() const { return static_cast<int>(vectors.size()); }
};

Frame orthonormalize(const std::vector<SymVector>& raw, double rank_tol = 1e-10);

/// v minus its orthogonal projection onto span(f), two passes.
SymVector project_residual(const Frame& f, const SymVector& v);

struct ContainsResult {
    bool inside = false;
    double residual = 0.0;
};

/// True iff ||v - P_span(f) v|| <= tol * ||v||.
ContainsResult contains(const Frame& f, const SymVector& v, double tol);

/// Max |<v_i, v_j> - delta_ij| over the frame; diagnostic for tests.
double gram_defect(const Frame& f);

}  // namespace bidisc
