#pragma once

// Sequence-space machinery between wandering subspaces.
//
// lw_map sends q to the rows (q(0,w), T_w^* q(0,w), ...); for a genuine
// wandering frame these rows are pointwise orthonormal across frame members
// at every point of the circle, so the basis pairing source_k |-> target_k
// extends linearly to a pointwise isometry between the two sequence spans.
// The residual operations certify the isometry, the intertwining construction,
// and the two-leg factorization through an intermediate subspace; all of them
// evaluate on equispaced circle samples against a fixed probe set.

#include <vector>

#include "bidisc/subspace.hpp"

namespace bidisc {

/// Rows of backward shifts of the z = 0 slice; row j+1 is the backward shift
/// of row j, and depth counts the nonzero rows (at most deg(q)+1).
struct LwImage {
    std::vector<CirclePoly> rows;
    int depth() const { return static_cast<int>(rows.size()); }
};

LwImage lw_map(const SymVector& q);

/// Rows evaluated at a point of the circle, as a finite sequence vector.
std::vector<Complex> eval_rows(const LwImage& img, Complex w);

/// Basis-paired map between two wandering frames; the pairing is k -> k.
struct PairedIsometry {
    Frame source;
    Frame target;
};

/// Frames must have equal rank.
PairedIsometry make_paired_isometry(Frame source, Frame target);

/// count equispaced points exp(2*pi*i*k/count) on the circle.
std::vector<Complex> circle_samples(int count);

/// Image of sum_k coeffs_k lw(source_k) under the paired map, evaluated at
/// each sample: one sequence vector per sample.
std::vector<std::vector<Complex>> apply_paired(const PairedIsometry& iso,
                                               const std::vector<Complex>& coeffs,
                                               const std::vector<Complex>& w_samples);

/// Max over samples and probe coefficient vectors of
/// | ||T x||^2 - ||x||^2 | in the pointwise sequence norm.  Both frames must
/// pass orthonormal_system_check at premise_rel_tol.
double isometry_residual(const PairedIsometry& iso, const std::vector<Complex>& w_samples,
                         double premise_rel_tol = 1e-8);

using ComplexMatrix = std::vector<std::vector<Complex>>;

/// Commutation residual of V(T x) := T(U x), with V built by pointwise
/// decomposition on the target images and extended by the identity on the
/// orthogonal complement of the sampled section.  Certifies the construction
/// is well defined; u must be unitary on the source coordinates.
double intertwiner_check(const PairedIsometry& iso, const ComplexMatrix& u,
                         const std::vector<Complex>& w_samples,
                         double premise_rel_tol = 1e-8);

/// Max over samples/probes of || direct(x) - second(first(x)) || where each
/// leg decomposes its input pointwise on its own source images.  With
/// index-consistent legs this is at the rounding floor; an inconsistent
/// pairing (e.g. a sign-flipped middle frame) is detected.
double factorization_residual(const PairedIsometry& direct, const PairedIsometry& first,
                              const PairedIsometry& second,
                              const std::vector<Complex>& w_samples);

/// Nested models with their wandering frames, containments verified.
struct SubspaceChain {
    InvariantModel m, l, n;
    Frame wm, wl, wn;
};

/// Verifies generator containment N <= L <= M (ChainBroken otherwise), extracts
/// the wandering frames, and requires equal ranks and per-frame
/// orthonormal_system_check (PremiseViolated otherwise).
SubspaceChain make_chain(const InvariantModel& m, const InvariantModel& l,
                         const InvariantModel& n, double contain_tol = 1e-8,
                         double premise_rel_tol = 1e-8);

/// Factorization residual for the consistently paired legs of a chain.
double factorization_residual(const SubspaceChain& chain, const std::vector<Complex>& w_samples);

}  // namespace bidisc
