#include "bidisc/subspace.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace bidisc {

InvariantModel generate_invariant(const std::vector<SymVector>& generators, int cap,
                                  double rank_tol) {
    std::vector<SymVector> raw;
    for (const SymVector& g : generators) {
        SymVector cur = trimmed(g);
        if (exact_degree(cur) > cap)
            throw CapExceededError("generator of degree " + std::to_string(exact_degree(cur)) +
                                   " exceeds cap " + std::to_string(cap));
        while (true) {
            raw.push_back(cur);
            int d = exact_degree(cur);
            if (d < 0 || d >= cap) break;  // zero vector, or no headroom left
            cur = bergman_shift(cur, 1, ShiftDir::Forward, cap);
        }
    }
    InvariantModel m;
    m.generators = generators;
    m.cap = cap;
    m.basis = orthonormalize(raw, rank_tol);
    return m;
}

InvariantModel generate_invariant(const Frame& wandering, int cap) {
    return generate_invariant(wandering.vectors, cap, wandering.rank_tol);
}

Frame wandering_of(const InvariantModel& m) {
    std::vector<SymVector> shifted;
    for (const SymVector& v : m.basis.vectors) {
        int d = exact_degree(v);
        if (d >= 0 && d < m.cap)
            shifted.push_back(bergman_shift(v, 1, ShiftDir::Forward, m.cap));
    }
    if (shifted.empty()) return m.basis;  // BM is trivial at this cap, W = M

    Frame s = orthonormalize(shifted, m.basis.rank_tol);
    std::vector<SymVector> residuals;
    residuals.reserve(m.basis.vectors.size());
    for (const SymVector& v : m.basis.vectors) residuals.push_back(project_residual(s, v));
    try {
        return orthonormalize(residuals, m.basis.rank_tol);
    } catch (const EmptySpanError&) {
        Frame empty;
        empty.rank_tol = m.basis.rank_tol;
        empty.source_count = static_cast<int>(residuals.size());
        return empty;
    }
}

double invariance_residual(const InvariantModel& m) {
    double worst = 0.0;
    for (const SymVector& v : m.basis.vectors) {
        int d = exact_degree(v);
        if (d < 0 || d >= m.cap) continue;
        SymVector bv = bergman_shift(v, 1, ShiftDir::Forward, m.cap);
        worst = std::max(worst, contains(m.basis, bv, 0.0).residual);
    }
    return worst;
}

InvariantModel zero_set_model(const std::vector<Complex>& zeros, int cap, double rank_tol) {
    if (zeros.empty()) throw std::invalid_argument("zero_set_model: no zeros given");
    for (const Complex& a : zeros)
        if (std::abs(a) >= 1.0)
            throw std::invalid_argument("zero_set_model: zeros must lie inside the open disk");
    if (static_cast<int>(zeros.size()) > cap)
        throw CapExceededError("zero_set_model: " + std::to_string(zeros.size()) +
                               " zeros need degree past cap " + std::to_string(cap));

    // P(z) = prod (z - a_i), by coefficient convolution.
    std::vector<Complex> p{Complex{1.0, 0.0}};
    for (const Complex& a : zeros) {
        std::vector<Complex> next(p.size() + 1, Complex{0.0, 0.0});
        for (size_t i = 0; i < p.size(); ++i) {
            next[i] += -a * p[i];
            next[i + 1] += p[i];
        }
        p = std::move(next);
    }
    int d = static_cast<int>(p.size()) - 1;

    std::vector<SymVector> gens;
    for (int j = 0; j + d <= cap; ++j) {
        BergmanPoly b;
        b.deg = j + d;
        b.coeffs.assign(static_cast<size_t>(b.deg) + 1, Complex{0.0, 0.0});
        for (int i = 0; i <= d; ++i) b.coeffs[static_cast<size_t>(j + i)] = p[static_cast<size_t>(i)];
        gens.push_back(to_symmetric(b));
    }
    return generate_invariant(gens, cap, rank_tol);
}

InvariantModel construct_intermediate(const Frame& wn_basis, const SymVector& q_hat, int cap) {
    constexpr double kTol = 1e-10;
    if (std::abs(q_hat.norm() - 1.0) > kTol)
        throw PremiseViolatedError("unit_norm", "q_hat is not a unit vector");
    for (size_t i = 0; i < wn_basis.vectors.size(); ++i)
        if (std::abs(inner(q_hat, wn_basis.vectors[i])) > kTol)
            throw PremiseViolatedError("orthogonality",
                                       "q_hat is not orthogonal to wn_basis[" + std::to_string(i) + "]");

    std::vector<SymVector> all = wn_basis.vectors;
    all.push_back(q_hat);
    auto name_of = [&](size_t i) {
        return i + 1 == all.size() ? std::string("q_hat") : "wn_basis[" + std::to_string(i) + "]";
    };
    for (size_t i = 0; i < all.size(); ++i) {
        CriterionReport r = coeff_criterion(all[i]);
        if (!r.passed)
            throw PremiseViolatedError("coeff_criterion",
                                       "coeff_criterion(" + name_of(i) + ") fails, worst " +
                                           std::to_string(r.worst_value));
    }
    // both orders: holomorphy of the pair sum is order-sensitive
    for (size_t i = 0; i < all.size(); ++i)
        for (size_t j = 0; j < all.size(); ++j) {
            if (i == j) continue;
            CriterionReport r = cross_condition(all[i], all[j]);
            if (!r.passed)
                throw PremiseViolatedError("cross_condition",
                                           "cross_condition(" + name_of(i) + ", " + name_of(j) +
                                               ") fails, worst " + std::to_string(r.worst_value));
        }

    return generate_invariant(all, cap, wn_basis.rank_tol);
}

}  // namespace bidisc
