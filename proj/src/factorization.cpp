#include "bidisc/factorization.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace bidisc {

namespace {

Complex seq_dot(const std::vector<Complex>& a, const std::vector<Complex>& b) {
    size_t n = std::min(a.size(), b.size());
    Complex s{0.0, 0.0};
    for (size_t i = 0; i < n; ++i) s += a[i] * std::conj(b[i]);
    return s;
}

double seq_norm_sq(const std::vector<Complex>& a) {
    double s = 0.0;
    for (const Complex& c : a) s += std::norm(c);
    return s;
}

void seq_axpy(std::vector<Complex>& acc, Complex c, const std::vector<Complex>& x) {
    if (acc.size() < x.size()) acc.resize(x.size(), Complex{0.0, 0.0});
    for (size_t i = 0; i < x.size(); ++i) acc[i] += c * x[i];
}

std::vector<LwImage> frame_images(const Frame& f) {
    std::vector<LwImage> out;
    out.reserve(f.vectors.size());
    for (const SymVector& v : f.vectors) out.push_back(lw_map(v));
    return out;
}

// Deterministic unit-coefficient-norm probes: the standard basis, the flat
// vector, and a fourth-root-of-unity ramp.
std::vector<std::vector<Complex>> probe_set(int rank) {
    std::vector<std::vector<Complex>> probes;
    for (int k = 0; k < rank; ++k) {
        std::vector<Complex> e(static_cast<size_t>(rank), Complex{0.0, 0.0});
        e[static_cast<size_t>(k)] = 1.0;
        probes.push_back(std::move(e));
    }
    if (rank > 1) {
        std::vector<Complex> flat(static_cast<size_t>(rank), Complex{0.0, 0.0});
        std::vector<Complex> ramp(static_cast<size_t>(rank), Complex{0.0, 0.0});
        const Complex i4{0.0, 1.0};
        Complex ph{1.0, 0.0};
        for (int k = 0; k < rank; ++k) {
            flat[static_cast<size_t>(k)] = 1.0 / std::sqrt(double(rank));
            ramp[static_cast<size_t>(k)] = ph / std::sqrt(double(rank));
            ph *= i4;
        }
        probes.push_back(std::move(flat));
        probes.push_back(std::move(ramp));
    }
    return probes;
}

void require_orthonormal_system(const Frame& f, double rel_tol, const std::string& which) {
    CriterionReport r = orthonormal_system_check(f.vectors, rel_tol);
    if (!r.passed)
        throw PremiseViolatedError("orthonormal_system(" + which + ")",
                                   which + " frame fails orthonormal_system_check, worst " +
                                       std::to_string(r.worst_value) + " at index " +
                                       std::to_string(r.worst_index));
}

}  // namespace

LwImage lw_map(const SymVector& q) {
    LwImage img;
    CirclePoly row = trimmed(slice_z0(q));
    if (exact_degree(row) < 0) return img;  // zero vector
    int depth = exact_degree(row) + 1;
    for (int j = 0; j < depth; ++j) {
        img.rows.push_back(row);
        row = backward_shift(row);
    }
    return img;
}

std::vector<Complex> eval_rows(const LwImage& img, Complex w) {
    std::vector<Complex> out;
    out.reserve(img.rows.size());
    for (const CirclePoly& r : img.rows) out.push_back(r.eval(w));
    return out;
}

PairedIsometry make_paired_isometry(Frame source, Frame target) {
    if (source.rank() != target.rank())
        throw RankMismatchError("paired isometry needs equal ranks, got " +
                                std::to_string(source.rank()) + " and " +
                                std::to_string(target.rank()));
    return {std::move(source), std::move(target)};
}

std::vector<Complex> circle_samples(int count) {
    std::vector<Complex> out;
    out.reserve(static_cast<size_t>(std::max(count, 0)));
    for (int k = 0; k < count; ++k)
        out.push_back(std::polar(1.0, 2.0 * std::numbers::pi * k / count));
    return out;
}

std::vector<std::vector<Complex>> apply_paired(const PairedIsometry& iso,
                                               const std::vector<Complex>& coeffs,
                                               const std::vector<Complex>& w_samples) {
    if (static_cast<int>(coeffs.size()) != iso.source.rank())
        throw RankMismatchError("coefficient vector length " + std::to_string(coeffs.size()) +
                                " does not match source rank " + std::to_string(iso.source.rank()));
    std::vector<LwImage> tgt = frame_images(iso.target);
    std::vector<std::vector<Complex>> out;
    out.reserve(w_samples.size());
    for (const Complex& w : w_samples) {
        std::vector<Complex> seq;
        for (size_t k = 0; k < coeffs.size(); ++k) seq_axpy(seq, coeffs[k], eval_rows(tgt[k], w));
        out.push_back(std::move(seq));
    }
    return out;
}

double isometry_residual(const PairedIsometry& iso, const std::vector<Complex>& w_samples,
                         double premise_rel_tol) {
    require_orthonormal_system(iso.source, premise_rel_tol, "source");
    require_orthonormal_system(iso.target, premise_rel_tol, "target");

    std::vector<LwImage> src = frame_images(iso.source);
    std::vector<LwImage> tgt = frame_images(iso.target);
    double worst = 0.0;
    for (const auto& c : probe_set(iso.source.rank())) {
        for (const Complex& w : w_samples) {
            std::vector<Complex> x, y;
            for (size_t k = 0; k < c.size(); ++k) {
                seq_axpy(x, c[k], eval_rows(src[k], w));
                seq_axpy(y, c[k], eval_rows(tgt[k], w));
            }
            worst = std::max(worst, std::abs(seq_norm_sq(y) - seq_norm_sq(x)));
        }
    }
    return worst;
}

double intertwiner_check(const PairedIsometry& iso, const ComplexMatrix& u,
                         const std::vector<Complex>& w_samples, double premise_rel_tol) {
    const int rank = iso.source.rank();
    if (static_cast<int>(u.size()) != rank)
        throw RankMismatchError("u_matrix dimension does not match rank");
    for (const auto& row : u)
        if (static_cast<int>(row.size()) != rank)
            throw RankMismatchError("u_matrix is not square");
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) {
            Complex g{0.0, 0.0};
            for (int k = 0; k < rank; ++k)
                g += std::conj(u[static_cast<size_t>(k)][static_cast<size_t>(i)]) *
                     u[static_cast<size_t>(k)][static_cast<size_t>(j)];
            if (std::abs(g - (i == j ? 1.0 : 0.0)) > 1e-10)
                throw PremiseViolatedError("u_not_unitary", "u_matrix is not unitary to 1e-10");
        }
    require_orthonormal_system(iso.source, premise_rel_tol, "source");
    require_orthonormal_system(iso.target, premise_rel_tol, "target");

    auto apply_u = [&](const std::vector<Complex>& c) {
        std::vector<Complex> out(static_cast<size_t>(rank), Complex{0.0, 0.0});
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j)
                out[static_cast<size_t>(i)] +=
                    u[static_cast<size_t>(i)][static_cast<size_t>(j)] * c[static_cast<size_t>(j)];
        return out;
    };

    std::vector<LwImage> tgt = frame_images(iso.target);
    double worst = 0.0;
    for (const auto& c : probe_set(rank)) {
        std::vector<Complex> uc = apply_u(c);
        for (const Complex& w : w_samples) {
            std::vector<std::vector<Complex>> t(static_cast<size_t>(rank));
            for (int k = 0; k < rank; ++k) t[static_cast<size_t>(k)] = eval_rows(tgt[k], w);

            // Direct image T(Ux).
            std::vector<Complex> direct;
            for (int k = 0; k < rank; ++k) seq_axpy(direct, uc[static_cast<size_t>(k)], t[static_cast<size_t>(k)]);

            // V(Tx): decompose y = Tx on the target images, push the
            // coordinates through U, keep the complement untouched.
            std::vector<Complex> y;
            for (int k = 0; k < rank; ++k) seq_axpy(y, c[static_cast<size_t>(k)], t[static_cast<size_t>(k)]);
            std::vector<Complex> chat(static_cast<size_t>(rank));
            for (int k = 0; k < rank; ++k) chat[static_cast<size_t>(k)] = seq_dot(y, t[static_cast<size_t>(k)]);
            std::vector<Complex> uchat = apply_u(chat);
            std::vector<Complex> vy = y;
            for (int k = 0; k < rank; ++k)
                seq_axpy(vy, uchat[static_cast<size_t>(k)] - chat[static_cast<size_t>(k)], t[static_cast<size_t>(k)]);

            std::vector<Complex> diff = direct;
            for (Complex& x : diff) x = -x;
            seq_axpy(diff, Complex{1.0, 0.0}, vy);
            worst = std::max(worst, std::sqrt(seq_norm_sq(diff)));
        }
    }
    return worst;
}

double factorization_residual(const PairedIsometry& direct, const PairedIsometry& first,
                              const PairedIsometry& second,
                              const std::vector<Complex>& w_samples) {
    const int rank = direct.source.rank();
    if (first.source.rank() != rank || first.target.rank() != rank ||
        second.source.rank() != rank || second.target.rank() != rank ||
        direct.target.rank() != rank)
        throw PremiseViolatedError("rank", "all three legs must share one rank");

    std::vector<LwImage> d_src = frame_images(direct.source);
    std::vector<LwImage> d_tgt = frame_images(direct.target);
    std::vector<LwImage> f_src = frame_images(first.source);
    std::vector<LwImage> f_tgt = frame_images(first.target);
    std::vector<LwImage> s_src = frame_images(second.source);
    std::vector<LwImage> s_tgt = frame_images(second.target);

    // One leg applied pointwise: decompose on the leg's source images, map the
    // coordinates onto its target images.
    auto apply_leg = [rank](const std::vector<Complex>& y, const std::vector<LwImage>& src,
                            const std::vector<LwImage>& tgt, Complex w) {
        std::vector<Complex> out;
        for (int k = 0; k < rank; ++k) {
            Complex ck = seq_dot(y, eval_rows(src[static_cast<size_t>(k)], w));
            seq_axpy(out, ck, eval_rows(tgt[static_cast<size_t>(k)], w));
        }
        return out;
    };

    double worst = 0.0;
    for (const auto& c : probe_set(rank)) {
        for (const Complex& w : w_samples) {
            std::vector<Complex> x;
            for (int k = 0; k < rank; ++k) seq_axpy(x, c[static_cast<size_t>(k)], eval_rows(d_src[static_cast<size_t>(k)], w));

            std::vector<Complex> straight = apply_leg(x, d_src, d_tgt, w);
            std::vector<Complex> via = apply_leg(apply_leg(x, f_src, f_tgt, w), s_src, s_tgt, w);

            std::vector<Complex> diff = straight;
            for (Complex& v : diff) v = -v;
            seq_axpy(diff, Complex{1.0, 0.0}, via);
            worst = std::max(worst, std::sqrt(seq_norm_sq(diff)));
        }
    }
    return worst;
}

SubspaceChain make_chain(const InvariantModel& m, const InvariantModel& l,
                         const InvariantModel& n, double contain_tol, double premise_rel_tol) {
    for (const SymVector& g : l.generators) {
        ContainsResult c = contains(m.basis, g, contain_tol);
        if (!c.inside)
            throw ChainBrokenError("middle model is not contained in the outer one, residual " +
                                   std::to_string(c.residual));
    }
    for (const SymVector& g : n.generators) {
        ContainsResult c = contains(l.basis, g, contain_tol);
        if (!c.inside)
            throw ChainBrokenError("inner model is not contained in the middle one, residual " +
                                   std::to_string(c.residual));
    }
    SubspaceChain chain{m, l, n, wandering_of(m), wandering_of(l), wandering_of(n)};
    if (chain.wm.rank() != chain.wl.rank() || chain.wl.rank() != chain.wn.rank())
        throw PremiseViolatedError("rank", "wandering frames of the chain have unequal ranks");
    require_orthonormal_system(chain.wm, premise_rel_tol, "outer");
    require_orthonormal_system(chain.wl, premise_rel_tol, "middle");
    require_orthonormal_system(chain.wn, premise_rel_tol, "inner");
    return chain;
}

double factorization_residual(const SubspaceChain& chain, const std::vector<Complex>& w_samples) {
    PairedIsometry mn = make_paired_isometry(chain.wm, chain.wn);
    PairedIsometry ml = make_paired_isometry(chain.wm, chain.wl);
    PairedIsometry ln = make_paired_isometry(chain.wl, chain.wn);
    return factorization_residual(mn, ml, ln, w_samples);
}

}  // namespace bidisc
