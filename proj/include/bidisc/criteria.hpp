#pragma once

// Wandering-vector criteria on the symmetric subspace.
//
// A unit vector q lies in the wandering subspace M (-) BM of some invariant
// subspace of the Bergman shift exactly when the radial sum
// sum_j |T_w^{*j} q(0,w)|^2 is constant on the circle.  That constancy is
// equivalent to vanishing of the (j+1)-weighted coefficient sums
// s_k = sum_j (j+1) q_j conj(q_{j+k}) and to orthogonality of q against
// z^k q in the ambient bidisc space; shift_gram computes the latter directly
// and serves as the ground-truth oracle for the other two routes.
//
// All constancy and holomorphy verdicts come from exact Laurent coefficients
// (coefficient convolution), never from sampling.

#include <string>
#include <vector>

#include "bidisc/hardy.hpp"

namespace bidisc {

/// Laurent polynomial on the unit circle, coefficients c_k for |k| <= half_deg.
struct TrigPoly {
    int half_deg = 0;
    std::vector<Complex> coeffs;  // index k + half_deg

    static TrigPoly zero(int half_deg);
    Complex at(int k) const;
    Complex& ref(int k);
    Complex eval_at_angle(double theta) const;
};

struct CriterionReport {
    bool passed = true;
    long worst_index = 0;
    double worst_value = 0.0;
    double tol = 0.0;
    std::string blame;  // name of the failing sub-check, when there is one
};

enum class CoeffWeight {
    PaperJ,            // literal printed weight j; kept to document the discrepancy
    CorrectedJPlus1,   // weight j+1, the one consistent with the radial sum and the oracle
};

/// sum_j T_w^{*j} a(w) conj(T_w^{*j} b(w)) on the circle, as exact Laurent
/// coefficients: c_m = sum_{k-l=m} (min(k,l)+1) a_k conj(b_l).
TrigPoly trig_of_pair(const CirclePoly& a, const CirclePoly& b);

/// Radial sum sum_j |T_w^{*j} q(0,w)|^2 of a symmetric vector.  c_0 equals
/// ||q||^2; q is wandering iff every other coefficient vanishes.
TrigPoly radial_sum(const SymVector& q);

/// Pass iff all nonzero-frequency coefficients of radial_sum(q) are below
/// rel_tol * ||q||^2.
CriterionReport radial_constancy(const SymVector& q, double rel_tol = 1e-10);

/// Coefficient criterion: s_k = sum_j weight(j) q_j conj(q_{j+k}) over the
/// z = 0 slice coefficients, for 1 <= k <= deg; pass iff max |s_k| is below
/// rel_tol * ||q||^2.
CriterionReport coeff_criterion(const SymVector& q,
                                CoeffWeight weight = CoeffWeight::CorrectedJPlus1,
                                double rel_tol = 1e-10);

/// Raw values s_1..s_kmax of the coefficient criterion sums.
std::vector<Complex> coeff_criterion_values(const SymVector& q, CoeffWeight weight, int kmax);

/// Ground-truth oracle g_k = <T_z^k q1, q2> for k = 1..kmax, computed in the
/// ambient bidisc space with no projection.
std::vector<Complex> shift_gram(const SymVector& q1, const SymVector& q2, int kmax,
                                std::optional<int> cap = std::nullopt);

/// Pairwise condition: sum_j T_w^{*j} q1(0,w) conj(T_w^{*j} q2(0,w)) must be
/// holomorphic, i.e. all strictly negative Laurent coefficients vanish.
CriterionReport cross_condition(const SymVector& q1, const SymVector& q2,
                                double rel_tol = 1e-10);

/// A span is wandering iff every vector passes the corrected coefficient
/// criterion and every pair passes cross_condition in both orders (the two
/// orders carry mirrored spectra, so together they certify the pair sum is
/// constant; one order alone can miss a violation).
CriterionReport is_wandering_span(const std::vector<SymVector>& basis,
                                  double rel_tol = 1e-10);

/// For an orthonormal system of wandering vectors the pair sums must equal
/// the constant delta_{kk'} exactly: every coefficient vanishes except c_0 on
/// the diagonal, which is 1.  Full-strength version of cross_condition.
CriterionReport orthonormal_system_check(const std::vector<SymVector>& basis,
                                         double rel_tol = 1e-10);

}  // namespace bidisc
