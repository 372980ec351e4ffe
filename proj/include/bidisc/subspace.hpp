#pragma once

// Invariant-subspace machinery at a finite degree cap.
//
// A model is the span of the B-orbits of its generators, cut at the cap.  The
// wandering frame of a model is the orthogonal complement, inside the model,
// of the shifted span {B v : v basis, deg(v) < cap}.  Because the cap cuts
// B-orbits, that complement can pick up spurious directions within `guard`
// degrees of the cap when the generators are not genuine wandering vectors;
// assertions should stay at degrees <= cap - guard.

#include <vector>

#include "bidisc/criteria.hpp"
#include "bidisc/frame.hpp"

namespace bidisc {

inline constexpr int kWanderingGuard = 2;

struct InvariantModel {
    std::vector<SymVector> generators;
    int cap = 0;
    Frame basis;  // spans {B^j g : g generator, degree <= cap}
};

/// Span of the B-orbits of the generators up to the cap.  Orbit iteration
/// stops when a forward shift would exceed the cap; a generator already past
/// the cap is an error.
InvariantModel generate_invariant(const std::vector<SymVector>& generators, int cap,
                                  double rank_tol = 1e-10);
InvariantModel generate_invariant(const Frame& wandering, int cap);

/// Wandering frame M (-) BM of a model (rank may be zero).
Frame wandering_of(const InvariantModel& m);

/// Max residual of B v against span(basis) over basis vectors of degree < cap.
double invariance_residual(const InvariantModel& m);

/// Zero-based invariant subspace: polynomials vanishing on `zeros`, modeled by
/// the explicit generators (z - a_1)...(z - a_r) z^j mapped through the
/// Bergman-to-symmetric unitary.  Zeros must lie inside the open disk.
InvariantModel zero_set_model(const std::vector<Complex>& zeros, int cap,
                              double rank_tol = 1e-10);

/// Intermediate-subspace constructor: given a wandering frame and a unit
/// vector q_hat orthogonal to it, with every vector individually wandering
/// and every pair passing cross_condition, returns the model generated by the
/// union.  Any failed premise raises PremiseViolated naming the check; the
/// construction never proceeds from invalid premises.
InvariantModel construct_intermediate(const Frame& wn_basis, const SymVector& q_hat, int cap);

}  // namespace bidisc
