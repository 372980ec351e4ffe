#include "bidisc/hardy.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace bidisc {

namespace {

int triangle_size(int deg) { return (deg + 1) * (deg + 2) / 2; }

// Row m starts after the previous m rows of lengths deg+1, deg, ...
int triangle_offset(int deg, int m) { return m * (deg + 1) - m * (m - 1) / 2; }

}  // namespace

BidiscPoly BidiscPoly::zero(int deg) {
    BidiscPoly p;
    p.deg = std::max(deg, 0);
    p.coeffs.assign(triangle_size(p.deg), Complex{0.0, 0.0});
    return p;
}

BidiscPoly BidiscPoly::monomial(int m, int n, Complex amplitude) {
    BidiscPoly p = zero(m + n);
    p.ref(m, n) = amplitude;
    return p;
}

Complex BidiscPoly::at(int m, int n) const {
    if (m < 0 || n < 0 || m + n > deg) return {0.0, 0.0};
    return coeffs[static_cast<size_t>(triangle_offset(deg, m) + n)];
}

Complex& BidiscPoly::ref(int m, int n) {
    return coeffs[static_cast<size_t>(triangle_offset(deg, m) + n)];
}

double BidiscPoly::norm_sq() const {
    double s = 0.0;
    for (const Complex& c : coeffs) s += std::norm(c);
    return s;
}

double BidiscPoly::norm() const { return std::sqrt(norm_sq()); }

SymVector SymVector::zero(int deg) {
    SymVector v;
    v.deg = std::max(deg, 0);
    v.coords.assign(static_cast<size_t>(v.deg) + 1, Complex{0.0, 0.0});
    return v;
}

SymVector SymVector::basis(int n) {
    SymVector v = zero(n);
    v.coords[static_cast<size_t>(n)] = 1.0;
    return v;
}

Complex SymVector::at(int n) const {
    if (n < 0 || n > deg) return {0.0, 0.0};
    return coords[static_cast<size_t>(n)];
}

double SymVector::norm_sq() const {
    double s = 0.0;
    for (const Complex& c : coords) s += std::norm(c);
    return s;
}

double SymVector::norm() const { return std::sqrt(norm_sq()); }

Complex BergmanPoly::at(int n) const {
    if (n < 0 || n > deg) return {0.0, 0.0};
    return coeffs[static_cast<size_t>(n)];
}

double BergmanPoly::norm_sq() const {
    double s = 0.0;
    for (int n = 0; n <= deg; ++n) s += std::norm(coeffs[static_cast<size_t>(n)]) / (n + 1);
    return s;
}

Complex CirclePoly::at(int k) const {
    if (k < 0 || k > deg) return {0.0, 0.0};
    return coeffs[static_cast<size_t>(k)];
}

double CirclePoly::norm_sq() const {
    double s = 0.0;
    for (const Complex& c : coeffs) s += std::norm(c);
    return s;
}

double CirclePoly::norm() const { return std::sqrt(norm_sq()); }

Complex CirclePoly::eval(Complex w) const {
    Complex acc{0.0, 0.0};
    for (int k = deg; k >= 0; --k) acc = acc * w + coeffs[static_cast<size_t>(k)];
    return acc;
}

Complex inner_product(const BidiscPoly& f, const BidiscPoly& g) {
    const BidiscPoly& lo = f.deg <= g.deg ? f : g;
    const BidiscPoly& hi = f.deg <= g.deg ? g : f;
    Complex s{0.0, 0.0};
    for (int m = 0; m <= lo.deg; ++m)
        for (int n = 0; n + m <= lo.deg; ++n) {
            if (&lo == &f)
                s += lo.at(m, n) * std::conj(hi.at(m, n));
            else
                s += hi.at(m, n) * std::conj(lo.at(m, n));
        }
    return s;
}

BidiscPoly shift(const BidiscPoly& f, Var var, ShiftDir dir, std::optional<int> cap) {
    if (dir == ShiftDir::Forward) {
        if (cap && f.deg + 1 > *cap)
            throw CapExceededError("forward shift to degree " + std::to_string(f.deg + 1) +
                                   " exceeds cap " + std::to_string(*cap));
        BidiscPoly out = BidiscPoly::zero(f.deg + 1);
        for (int m = 0; m <= f.deg; ++m)
            for (int n = 0; n + m <= f.deg; ++n) {
                if (var == Var::Z)
                    out.ref(m + 1, n) = f.at(m, n);
                else
                    out.ref(m, n + 1) = f.at(m, n);
            }
        return out;
    }
    BidiscPoly out = BidiscPoly::zero(std::max(f.deg - 1, 0));
    for (int m = 0; m <= out.deg; ++m)
        for (int n = 0; n + m <= out.deg; ++n) {
            out.ref(m, n) = (var == Var::Z) ? f.at(m + 1, n) : f.at(m, n + 1);
        }
    return out;
}

SymVector project_sym(const BidiscPoly& f) {
    SymVector v = SymVector::zero(f.deg);
    for (int n = 0; n <= f.deg; ++n) {
        Complex s{0.0, 0.0};
        for (int i = 0; i <= n; ++i) s += f.at(i, n - i);
        v.coords[static_cast<size_t>(n)] = s / std::sqrt(double(n + 1));
    }
    return v;
}

BidiscPoly to_bidisc(const SymVector& v) {
    BidiscPoly f = BidiscPoly::zero(v.deg);
    for (int n = 0; n <= v.deg; ++n) {
        Complex a = v.coords[static_cast<size_t>(n)] / std::sqrt(double(n + 1));
        for (int i = 0; i <= n; ++i) f.ref(i, n - i) = a;
    }
    return f;
}

SymVector bergman_shift(const SymVector& v, int power, ShiftDir dir, std::optional<int> cap) {
    SymVector cur = v;
    for (int p = 0; p < power; ++p) {
        if (dir == ShiftDir::Forward) {
            if (cap && cur.deg + 1 > *cap)
                throw CapExceededError("Bergman shift to degree " + std::to_string(cur.deg + 1) +
                                       " exceeds cap " + std::to_string(*cap));
            SymVector out = SymVector::zero(cur.deg + 1);
            for (int n = 0; n <= cur.deg; ++n)
                out.coords[static_cast<size_t>(n) + 1] =
                    std::sqrt(double(n + 1) / double(n + 2)) * cur.coords[static_cast<size_t>(n)];
            cur = std::move(out);
        } else {
            SymVector out = SymVector::zero(std::max(cur.deg - 1, 0));
            for (int n = 0; n + 1 <= cur.deg; ++n)
                out.coords[static_cast<size_t>(n)] =
                    std::sqrt(double(n + 1) / double(n + 2)) * cur.coords[static_cast<size_t>(n) + 1];
            cur = std::move(out);
        }
    }
    return cur;
}

SymVector to_symmetric(const BergmanPoly& f) {
    SymVector v = SymVector::zero(f.deg);
    for (int n = 0; n <= f.deg; ++n)
        v.coords[static_cast<size_t>(n)] = f.at(n) / std::sqrt(double(n + 1));
    return v;
}

BergmanPoly to_bergman(const SymVector& v) {
    BergmanPoly f;
    f.deg = v.deg;
    f.coeffs.assign(static_cast<size_t>(v.deg) + 1, Complex{0.0, 0.0});
    for (int n = 0; n <= v.deg; ++n)
        f.coeffs[static_cast<size_t>(n)] = v.at(n) * std::sqrt(double(n + 1));
    return f;
}

CirclePoly slice_z0(const SymVector& v) {
    CirclePoly q;
    q.deg = v.deg;
    q.coeffs.assign(static_cast<size_t>(v.deg) + 1, Complex{0.0, 0.0});
    for (int k = 0; k <= v.deg; ++k)
        q.coeffs[static_cast<size_t>(k)] = v.at(k) / std::sqrt(double(k + 1));
    return q;
}

SymVector reconstruct(const CirclePoly& q0) {
    const int deg = q0.deg;
    BidiscPoly grid = BidiscPoly::zero(deg);
    // Row j of the grid carries T_w^{*j} q0 against powers of w.
    CirclePoly row = q0;
    for (int j = 0; j <= deg; ++j) {
        for (int t = 0; t + j <= deg; ++t) grid.ref(j, t) = row.at(t);
        row = backward_shift(row);
    }
    // Self-check: the construction must have produced constant antidiagonals.
    double scale = 0.0;
    for (const Complex& c : grid.coeffs) scale = std::max(scale, std::abs(c));
    for (int n = 0; n <= deg; ++n) {
        Complex first = grid.at(0, n);
        for (int i = 1; i <= n; ++i)
            if (std::abs(grid.at(i, n - i) - first) > 1e-12 * std::max(scale, 1.0))
                throw NotSymmetricError("reconstructed grid breaks antidiagonal constancy at degree " +
                                        std::to_string(n));
    }
    return project_sym(grid);
}

Complex inner(const SymVector& a, const SymVector& b) {
    int d = std::min(a.deg, b.deg);
    Complex s{0.0, 0.0};
    for (int n = 0; n <= d; ++n)
        s += a.coords[static_cast<size_t>(n)] * std::conj(b.coords[static_cast<size_t>(n)]);
    return s;
}

SymVector add(const SymVector& a, const SymVector& b) {
    SymVector out = SymVector::zero(std::max(a.deg, b.deg));
    for (int n = 0; n <= out.deg; ++n) out.coords[static_cast<size_t>(n)] = a.at(n) + b.at(n);
    return out;
}

SymVector sub(const SymVector& a, const SymVector& b) {
    SymVector out = SymVector::zero(std::max(a.deg, b.deg));
    for (int n = 0; n <= out.deg; ++n) out.coords[static_cast<size_t>(n)] = a.at(n) - b.at(n);
    return out;
}

SymVector scale(Complex c, const SymVector& v) {
    SymVector out = v;
    for (Complex& x : out.coords) x *= c;
    return out;
}

SymVector resized(const SymVector& v, int deg) {
    SymVector out = SymVector::zero(deg);
    for (int n = 0; n <= std::min(deg, v.deg); ++n)
        out.coords[static_cast<size_t>(n)] = v.coords[static_cast<size_t>(n)];
    return out;
}

int exact_degree(const SymVector& v) {
    for (int n = v.deg; n >= 0; --n)
        if (v.coords[static_cast<size_t>(n)] != Complex{0.0, 0.0}) return n;
    return -1;
}

int exact_degree(const CirclePoly& q) {
    for (int k = q.deg; k >= 0; --k)
        if (q.coeffs[static_cast<size_t>(k)] != Complex{0.0, 0.0}) return k;
    return -1;
}

int numeric_degree(const SymVector& v, double rel_tol) {
    double thr = rel_tol * v.norm();
    for (int n = v.deg; n >= 0; --n)
        if (std::abs(v.coords[static_cast<size_t>(n)]) > thr) return n;
    return -1;
}

SymVector trimmed(const SymVector& v) {
    int d = std::max(exact_degree(v), 0);
    return resized(v, d);
}

CirclePoly trimmed(const CirclePoly& q) {
    int d = std::max(exact_degree(q), 0);
    CirclePoly out;
    out.deg = d;
    out.coeffs.assign(q.coeffs.begin(), q.coeffs.begin() + d + 1);
    return out;
}

CirclePoly backward_shift(const CirclePoly& q) {
    CirclePoly out;
    out.deg = std::max(q.deg - 1, 0);
    out.coeffs.assign(static_cast<size_t>(out.deg) + 1, Complex{0.0, 0.0});
    for (int k = 0; k + 1 <= q.deg; ++k) out.coeffs[static_cast<size_t>(k)] = q.at(k + 1);
    return out;
}

}  // namespace bidisc
