#pragma once

// Truncated model of the Hardy space of the bidisc.
//
// Monomials z^m w^n are orthonormal.  The symmetric subspace is spanned by
// p_n(z,w) = sum_{i=0}^n z^i w^{n-i}; its orthonormal basis is
// e_n = p_n / sqrt(n+1), and the compression of multiplication by z (or w,
// they agree) to that subspace is the weighted shift
//
//     B e_n = sqrt((n+1)/(n+2)) e_{n+1},
//
// a copy of the Bergman shift.  Everything here is dense polynomial
// coefficient arithmetic: values are immutable, operations are pure, and a
// forward shift past a caller-supplied degree cap is an error rather than a
// truncation.

#include <complex>
#include <optional>
#include <vector>

#include "bidisc/errors.hpp"

namespace bidisc {

using Complex = std::complex<double>;

enum class Var { Z, W };
enum class ShiftDir { Forward, Adjoint };

/// Polynomial on the bidisc, stored as a dense triangle of coefficients
/// a_{m,n} for m+n <= deg.  The squared norm is sum |a_{m,n}|^2.
struct BidiscPoly {
    int deg = 0;
    std::vector<Complex> coeffs;  // triangle-packed, row m holds n = 0..deg-m

    static BidiscPoly zero(int deg);
    static BidiscPoly monomial(int m, int n, Complex amplitude = 1.0);

    Complex at(int m, int n) const;  // 0 outside the triangle
    Complex& ref(int m, int n);
    double norm_sq() const;
    double norm() const;
};

/// Coordinates b_n against the orthonormal basis e_n = p_n/sqrt(n+1) of the
/// symmetric subspace.  The squared norm is sum |b_n|^2.
struct SymVector {
    int deg = 0;
    std::vector<Complex> coords;  // index n = 0..deg

    static SymVector zero(int deg);
    static SymVector basis(int n);  // e_n

    Complex at(int n) const;
    double norm_sq() const;
    double norm() const;
};

/// Bergman-space polynomial sum c_n z^n; squared norm is sum |c_n|^2/(n+1)
/// (area measure normalized to total mass one).
struct BergmanPoly {
    int deg = 0;
    std::vector<Complex> coeffs;

    Complex at(int n) const;
    double norm_sq() const;
};

/// One-variable analytic polynomial in w; squared norm is sum |q_k|^2.
struct CirclePoly {
    int deg = 0;
    std::vector<Complex> coeffs;

    Complex at(int k) const;
    double norm_sq() const;
    double norm() const;
    Complex eval(Complex w) const;
};

// --- bidisc grid operations -------------------------------------------------

/// sum a_{m,n} conj(b_{m,n}); conjugate-linear in the second argument.
Complex inner_product(const BidiscPoly& f, const BidiscPoly& g);

/// Toeplitz shift by one variable.  Forward multiplies by the variable and
/// raises deg by one (error if that violates `cap`); Adjoint is the backward
/// shift, dropping the index-0 slice.
BidiscPoly shift(const BidiscPoly& f, Var var, ShiftDir dir,
                 std::optional<int> cap = std::nullopt);

/// Orthogonal projection onto the symmetric subspace:
/// b_n = (sum_i a_{i,n-i}) / sqrt(n+1).
SymVector project_sym(const BidiscPoly& f);

/// Expansion of a symmetric vector back into the ambient grid:
/// a_{i,n-i} = b_n / sqrt(n+1).
BidiscPoly to_bidisc(const SymVector& v);

// --- symmetric-subspace operations ------------------------------------------

/// B^power (Forward) or B*^power (Adjoint) in e_n coordinates.
SymVector bergman_shift(const SymVector& v, int power, ShiftDir dir,
                        std::optional<int> cap = std::nullopt);

/// The unitary between the Bergman space and the symmetric subspace:
/// z^n has norm 1/sqrt(n+1) and maps to e_n/sqrt(n+1).
SymVector to_symmetric(const BergmanPoly& f);
BergmanPoly to_bergman(const SymVector& v);

/// Slice at z = 0: q_k = b_k / sqrt(k+1), since p_k(0,w) = w^k.
CirclePoly slice_z0(const SymVector& v);

/// Series reconstruction sum_j z^j T_w^{*j} q(0,w) of a symmetric vector from
/// its z = 0 slice.  Builds the grid literally, certifies that antidiagonals
/// are constant, and converts.  Inverse of slice_z0.
SymVector reconstruct(const CirclePoly& q0);

// --- small vector algebra ----------------------------------------------------

Complex inner(const SymVector& a, const SymVector& b);  // conj-linear in b
SymVector add(const SymVector& a, const SymVector& b);
SymVector sub(const SymVector& a, const SymVector& b);
SymVector scale(Complex c, const SymVector& v);
SymVector resized(const SymVector& v, int deg);

/// Index of the last exactly nonzero coefficient; -1 for the zero vector.
int exact_degree(const SymVector& v);
int exact_degree(const CirclePoly& q);

/// Largest n with |b_n| > rel_tol * ||v||; -1 if none.
int numeric_degree(const SymVector& v, double rel_tol = 1e-12);

/// Copy with the exactly-zero tail removed (degree >= 0 always).
SymVector trimmed(const SymVector& v);
CirclePoly trimmed(const CirclePoly& q);

CirclePoly backward_shift(const CirclePoly& q);

}  // namespace bidisc
