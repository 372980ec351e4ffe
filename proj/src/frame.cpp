#include "bidisc/frame.hpp"

#include <algorithm>
#include <cmath>

namespace bidisc {

namespace {

// Rotate so the largest-magnitude coordinate (lowest index on ties) is real
// and positive.  Keeps frames reproducible across runs and input phases.
SymVector phase_normalized(const SymVector& v) {
    int best = 0;
    double best_mag = -1.0;
    for (int n = 0; n <= v.deg; ++n) {
        double m = std::abs(v.at(n));
        if (m > best_mag + 1e-15 * best_mag && m > best_mag) {
            best_mag = m;
            best = n;
        }
    }
    if (best_mag <= 0.0) return v;
    Complex phase = v.at(best) / best_mag;
    return scale(std::conj(phase), v);
}

}  // namespace

Frame orthonormalize(const std::vector<SymVector>& raw, double rank_tol) {
    if (raw.empty()) throw EmptySpanError("orthonormalize: no input vectors");
    double scale_norm = 0.0;
    for (const SymVector& v : raw) scale_norm = std::max(scale_norm, v.norm());
    if (scale_norm == 0.0) throw EmptySpanError("orthonormalize: all inputs are zero");

    Frame out;
    out.rank_tol = rank_tol;
    out.source_count = static_cast<int>(raw.size());
    for (const SymVector& v : raw) {
        SymVector r = v;
        for (int pass = 0; pass < 2; ++pass)
            for (const SymVector& u : out.vectors) r = sub(r, scale(inner(r, u), u));
        double n = r.norm();
        if (n > rank_tol * scale_norm)
            out.vectors.push_back(phase_normalized(scale(1.0 / n, r)));
    }
    if (out.vectors.empty()) throw EmptySpanError("orthonormalize: rank zero at tolerance");
    return out;
}

SymVector project_residual(const Frame& f, const SymVector& v) {
    SymVector r = v;
    for (int pass = 0; pass < 2; ++pass)
        for (const SymVector& u : f.vectors) r = sub(r, scale(inner(r, u), u));
    return r;
}

ContainsResult contains(const Frame& f, const SymVector& v, double tol) {
    double vn = v.norm();
    double resid = project_residual(f, v).norm();
    return {resid <= tol * vn, resid};
}

double gram_defect(const Frame& f) {
    double worst = 0.0;
    for (size_t i = 0; i < f.vectors.size(); ++i)
        for (size_t j = 0; j < f.vectors.size(); ++j) {
            Complex g = inner(f.vectors[i], f.vectors[j]);
            worst = std::max(worst, std::abs(g - (i == j ? 1.0 : 0.0)));
        }
    return worst;
}

}  // namespace bidisc
