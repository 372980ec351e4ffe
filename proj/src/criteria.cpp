#include "bidisc/criteria.hpp"

#include <algorithm>
#include <cmath>

namespace bidisc {

TrigPoly TrigPoly::zero(int half_deg) {
    TrigPoly t;
    t.half_deg = std::max(half_deg, 0);
    t.coeffs.assign(2 * static_cast<size_t>(t.half_deg) + 1, Complex{0.0, 0.0});
    return t;
}

Complex TrigPoly::at(int k) const {
    if (k < -half_deg || k > half_deg) return {0.0, 0.0};
    return coeffs[static_cast<size_t>(k + half_deg)];
}

Complex& TrigPoly::ref(int k) { return coeffs[static_cast<size_t>(k + half_deg)]; }

Complex TrigPoly::eval_at_angle(double theta) const {
    Complex s{0.0, 0.0};
    for (int k = -half_deg; k <= half_deg; ++k)
        s += at(k) * std::polar(1.0, k * theta);
    return s;
}

TrigPoly trig_of_pair(const CirclePoly& a, const CirclePoly& b) {
    int D = std::max(a.deg, b.deg);
    TrigPoly t = TrigPoly::zero(D);
    for (int k = 0; k <= a.deg; ++k) {
        Complex ak = a.at(k);
        if (ak == Complex{0.0, 0.0}) continue;
        for (int l = 0; l <= b.deg; ++l) {
            // j ranges over 0..min(k,l): each backward shift pairs a_k with b_l
            // at frequency k-l, once per surviving shift level.
            t.ref(k - l) += double(std::min(k, l) + 1) * ak * std::conj(b.at(l));
        }
    }
    return t;
}

TrigPoly radial_sum(const SymVector& q) {
    CirclePoly s = slice_z0(q);
    return trig_of_pair(s, s);
}

namespace {

CriterionReport report_from_max(long worst_index, double worst_value, double tol,
                                std::string blame = {}) {
    CriterionReport r;
    r.worst_index = worst_index;
    r.worst_value = worst_value;
    r.tol = tol;
    r.passed = worst_value <= tol;
    r.blame = std::move(blame);
    return r;
}

}  // namespace

CriterionReport radial_constancy(const SymVector& q, double rel_tol) {
    TrigPoly t = radial_sum(q);
    long worst_index = 0;
    double worst = 0.0;
    for (int k = -t.half_deg; k <= t.half_deg; ++k) {
        if (k == 0) continue;
        double v = std::abs(t.at(k));
        if (v > worst) {
            worst = v;
            worst_index = k;
        }
    }
    return report_from_max(worst_index, worst, rel_tol * q.norm_sq());
}

std::vector<Complex> coeff_criterion_values(const SymVector& q, CoeffWeight weight, int kmax) {
    CirclePoly a = slice_z0(q);
    std::vector<Complex> out;
    out.reserve(static_cast<size_t>(std::max(kmax, 0)));
    for (int k = 1; k <= kmax; ++k) {
        Complex s{0.0, 0.0};
        for (int j = 0; j + k <= a.deg; ++j) {
            double w = (weight == CoeffWeight::CorrectedJPlus1) ? double(j + 1) : double(j);
            s += w * a.at(j) * std::conj(a.at(j + k));
        }
        out.push_back(s);
    }
    return out;
}

CriterionReport coeff_criterion(const SymVector& q, CoeffWeight weight, double rel_tol) {
    std::vector<Complex> s = coeff_criterion_values(q, weight, q.deg);
    long worst_index = 0;
    double worst = 0.0;
    for (size_t i = 0; i < s.size(); ++i) {
        double v = std::abs(s[i]);
        if (v > worst) {
            worst = v;
            worst_index = static_cast<long>(i) + 1;
        }
    }
    return report_from_max(worst_index, worst, rel_tol * q.norm_sq());
}

std::vector<Complex> shift_gram(const SymVector& q1, const SymVector& q2, int kmax,
                                std::optional<int> cap) {
    if (cap && q1.deg + kmax > *cap)
        throw CapExceededError("shift_gram needs degree " + std::to_string(q1.deg + kmax) +
                               ", cap is " + std::to_string(*cap));
    BidiscPoly f = to_bidisc(q1);
    BidiscPoly g = to_bidisc(q2);
    std::vector<Complex> out;
    out.reserve(static_cast<size_t>(std::max(kmax, 0)));
    for (int k = 1; k <= kmax; ++k) {
        f = shift(f, Var::Z, ShiftDir::Forward, cap);
        out.push_back(inner_product(f, g));
    }
    return out;
}

CriterionReport cross_condition(const SymVector& q1, const SymVector& q2, double rel_tol) {
    TrigPoly t = trig_of_pair(slice_z0(q1), slice_z0(q2));
    long worst_index = 0;
    double worst = 0.0;
    for (int k = -t.half_deg; k < 0; ++k) {
        double v = std::abs(t.at(k));
        if (v > worst) {
            worst = v;
            worst_index = k;
        }
    }
    return report_from_max(worst_index, worst, rel_tol * q1.norm() * q2.norm());
}

CriterionReport is_wandering_span(const std::vector<SymVector>& basis, double rel_tol) {
    if (basis.empty()) throw EmptySpanError("is_wandering_span: empty basis");

    CriterionReport out;
    out.passed = true;
    double worst_ratio = -1.0;
    auto consider = [&](const CriterionReport& r, const std::string& blame) {
        double ratio = r.tol > 0.0 ? r.worst_value / r.tol : (r.worst_value > 0.0 ? 1e300 : 0.0);
        if (ratio > worst_ratio) {
            worst_ratio = ratio;
            out.worst_index = r.worst_index;
            out.worst_value = r.worst_value;
            out.tol = r.tol;
            out.blame = blame;
        }
        out.passed = out.passed && r.passed;
    };

    for (size_t i = 0; i < basis.size(); ++i)
        consider(coeff_criterion(basis[i], CoeffWeight::CorrectedJPlus1, rel_tol),
                 "coeff_criterion(" + std::to_string(i) + ")");
    // Holomorphy of the pair sum is order-sensitive (the two orders carry
    // conjugate-mirrored spectra), so each unordered pair is checked both
    // ways; together that is the constancy condition on the pair.
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = i + 1; j < basis.size(); ++j) {
            consider(cross_condition(basis[i], basis[j], rel_tol),
                     "cross_condition(" + std::to_string(i) + "," + std::to_string(j) + ")");
            consider(cross_condition(basis[j], basis[i], rel_tol),
                     "cross_condition(" + std::to_string(j) + "," + std::to_string(i) + ")");
        }
    if (out.passed) out.blame.clear();
    return out;
}

CriterionReport orthonormal_system_check(const std::vector<SymVector>& basis, double rel_tol) {
    CriterionReport out;
    out.tol = rel_tol;
    out.passed = true;
    for (size_t i = 0; i < basis.size(); ++i) {
        for (size_t j = i; j < basis.size(); ++j) {
            TrigPoly t = trig_of_pair(slice_z0(basis[i]), slice_z0(basis[j]));
            Complex target = (i == j) ? Complex{1.0, 0.0} : Complex{0.0, 0.0};
            for (int k = -t.half_deg; k <= t.half_deg; ++k) {
                double v = std::abs(t.at(k) - (k == 0 ? target : Complex{0.0, 0.0}));
                if (v > out.worst_value) {
                    out.worst_value = v;
                    out.worst_index = k;
                    out.blame = "pair(" + std::to_string(i) + "," + std::to_string(j) + ")";
                }
            }
        }
    }
    out.passed = out.worst_value <= out.tol;
    if (out.passed) out.blame.clear();
    return out;
}

}  // namespace bidisc
