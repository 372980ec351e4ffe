#pragma once

// Dirichlet-space side of the model: the weighted inner product
// <f,g>_D = sum (k+1) f_k conj(g_k), the isometric embedding
// f  |->  sum_j z^j T_w^{*j} f into the symmetric subspace (inverse: the
// z = 0 slice), and the adjoint-relation identity between the two spaces.

#include <vector>

#include "bidisc/hardy.hpp"

namespace bidisc {

struct DirichletPoly {
    int deg = 0;
    std::vector<Complex> coeffs;  // f_k for w^k

    Complex at(int k) const;
    double norm_sq() const;  // sum (k+1)|f_k|^2
};

Complex dirichlet_inner(const DirichletPoly& f, const DirichletPoly& g);

DirichletPoly backward_shift(const DirichletPoly& f);

CirclePoly as_circle(const DirichletPoly& f);
DirichletPoly as_dirichlet(const CirclePoly& q);

/// Isometry onto the symmetric subspace: ||embed(f)||^2 = <f,f>_D.
SymVector embed(const DirichletPoly& f);

/// |<embed(f), T_w^* embed(g)>_{H^2(T^2)} - <f, T_w^* g>_D|, where the left
/// adjoint shift acts in the ambient bidisc space before any projection.
/// Zero in exact arithmetic.
double adjoint_relation_residual(const DirichletPoly& f, const DirichletPoly& g);

}  // namespace bidisc
