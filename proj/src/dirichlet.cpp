#include "bidisc/dirichlet.hpp"

#include <algorithm>
#include <cmath>

namespace bidisc {

Complex DirichletPoly::at(int k) const {
    if (k < 0 || k > deg) return {0.0, 0.0};
    return coeffs[static_cast<size_t>(k)];
}

double DirichletPoly::norm_sq() const {
    double s = 0.0;
    for (int k = 0; k <= deg; ++k) s += (k + 1) * std::norm(coeffs[static_cast<size_t>(k)]);
    return s;
}

Complex dirichlet_inner(const DirichletPoly& f, const DirichletPoly& g) {
    int d = std::min(f.deg, g.deg);
    Complex s{0.0, 0.0};
    for (int k = 0; k <= d; ++k) s += double(k + 1) * f.at(k) * std::conj(g.at(k));
    return s;
}

DirichletPoly backward_shift(const DirichletPoly& f) {
    DirichletPoly out;
    out.deg = std::max(f.deg - 1, 0);
    out.coeffs.assign(static_cast<size_t>(out.deg) + 1, Complex{0.0, 0.0});
    for (int k = 0; k + 1 <= f.deg; ++k) out.coeffs[static_cast<size_t>(k)] = f.at(k + 1);
    return out;
}

CirclePoly as_circle(const DirichletPoly& f) {
    CirclePoly q;
    q.deg = f.deg;
    q.coeffs = f.coeffs;
    return q;
}

DirichletPoly as_dirichlet(const CirclePoly& q) {
    DirichletPoly f;
    f.deg = q.deg;
    f.coeffs = q.coeffs;
    return f;
}

SymVector embed(const DirichletPoly& f) { return reconstruct(as_circle(f)); }

double adjoint_relation_residual(const DirichletPoly& f, const DirichletPoly& g) {
    BidiscPoly qf = to_bidisc(embed(f));
    BidiscPoly qg = to_bidisc(embed(g));
    Complex lhs = inner_product(qf, shift(qg, Var::W, ShiftDir::Adjoint));
    Complex rhs = dirichlet_inner(f, backward_shift(g));
    return std::abs(lhs - rhs);
}

}  // namespace bidisc
