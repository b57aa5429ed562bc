#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "fields.hpp"

namespace skewcodes {

/// An element of R = F_q + uF_q + vF_q + uvF_q (u^2 = u, v^2 = v, uv = vu).
///
/// The canonical internal representation is the idempotent basis
///   eta1 = 1-u-v+uv, eta2 = uv, eta3 = u-uv, eta4 = v-uv,
/// in which ring operations are coordinatewise and the automorphism theta is a
/// Frobenius plus an eta3/eta4 swap. The standard basis (1, u, v, uv) appears
/// only at I/O boundaries.
class RElem {
   public:
    RElem() = default;

    static RElem from_eta(FqElem a1, FqElem a2, FqElem a3, FqElem a4) {
        RElem r;
        r.a_ = {a1, a2, a3, a4};
        return r;
    }

    /// (b0, b1, b2, b3) in basis (1, u, v, uv) -> eta coordinates
    /// (b0, b0+b1+b2+b3, b0+b1, b0+b2).
    static RElem from_std(const FqElem& b0, const FqElem& b1, const FqElem& b2, const FqElem& b3) {
        return from_eta(b0, b0 + b1 + b2 + b3, b0 + b1, b0 + b2);
    }

    static RElem from_eta_values(const FieldCtx& ctx, std::array<std::uint64_t, 4> v) {
        return from_eta(FqElem(ctx, v[0]), FqElem(ctx, v[1]), FqElem(ctx, v[2]), FqElem(ctx, v[3]));
    }
    static RElem from_std_values(const FieldCtx& ctx, std::array<std::uint64_t, 4> v) {
        return from_std(FqElem(ctx, v[0]), FqElem(ctx, v[1]), FqElem(ctx, v[2]), FqElem(ctx, v[3]));
    }

    static RElem zero(const FieldCtx& ctx) { return from_eta_values(ctx, {0, 0, 0, 0}); }
    static RElem one(const FieldCtx& ctx) { return from_eta_values(ctx, {1, 1, 1, 1}); }
    static RElem u(const FieldCtx& ctx) { return from_eta_values(ctx, {0, 1, 1, 0}); }
    static RElem v(const FieldCtx& ctx) { return from_eta_values(ctx, {0, 1, 0, 1}); }
    static RElem uv(const FieldCtx& ctx) { return from_eta_values(ctx, {0, 1, 0, 0}); }

    /// eta_i as an element, i in 1..4.
    static RElem eta(const FieldCtx& ctx, int i) {
        std::array<std::uint64_t, 4> v{0, 0, 0, 0};
        v[static_cast<std::size_t>(i - 1)] = 1;
        return from_eta_values(ctx, v);
    }

    const FqElem& eta_coord(int i) const { return a_[static_cast<std::size_t>(i - 1)]; }
    const std::array<FqElem, 4>& eta_coords() const { return a_; }

    /// Inverse of from_std: coordinates in the basis (1, u, v, uv).
    std::array<FqElem, 4> std_coords() const {
        const FqElem &a1 = a_[0], &a2 = a_[1], &a3 = a_[2], &a4 = a_[3];
        return {a1, a3 - a1, a4 - a1, a1 + a2 - a3 - a4};
    }

    const FieldCtx& ctx() const { return a_[0].ctx(); }
    bool is_zero() const { return a_[0].is_zero() && a_[1].is_zero() && a_[2].is_zero() && a_[3].is_zero(); }
    bool is_unit() const {
        return !a_[0].is_zero() && !a_[1].is_zero() && !a_[2].is_zero() && !a_[3].is_zero();
    }

    friend RElem operator+(const RElem& x, const RElem& y) {
        return from_eta(x.a_[0] + y.a_[0], x.a_[1] + y.a_[1], x.a_[2] + y.a_[2], x.a_[3] + y.a_[3]);
    }
    friend RElem operator-(const RElem& x, const RElem& y) {
        return from_eta(x.a_[0] - y.a_[0], x.a_[1] - y.a_[1], x.a_[2] - y.a_[2], x.a_[3] - y.a_[3]);
    }
    friend RElem operator*(const RElem& x, const RElem& y) {
        return from_eta(x.a_[0] * y.a_[0], x.a_[1] * y.a_[1], x.a_[2] * y.a_[2], x.a_[3] * y.a_[3]);
    }
    RElem operator-() const { return from_eta(-a_[0], -a_[1], -a_[2], -a_[3]); }

    /// F_q-scalar action (lambda embeds as lambda * 1 = (l,l,l,l)).
    friend RElem operator*(const FqElem& s, const RElem& x) {
        return from_eta(s * x.a_[0], s * x.a_[1], s * x.a_[2], s * x.a_[3]);
    }

    RElem inv() const {
        return from_eta(a_[0].inv(), a_[1].inv(), a_[2].inv(), a_[3].inv());
    }

    friend bool operator==(const RElem& x, const RElem& y) { return x.a_ == y.a_; }
    friend bool operator!=(const RElem& x, const RElem& y) { return !(x == y); }

   private:
    std::array<FqElem, 4> a_;
};

/// The ring automorphism: Frobenius on every eta coordinate plus a swap of the
/// eta3/eta4 coordinates. (In the standard basis: b0+b1 u+b2 v+b3 uv maps to
/// b0^p + b2^p u + b1^p v + b3^p uv.)
inline RElem theta(const RElem& x) {
    const auto& a = x.eta_coords();
    return RElem::from_eta(frobenius(a[0], 1), frobenius(a[1], 1), frobenius(a[3], 1), frobenius(a[2], 1));
}

inline RElem theta_pow(const RElem& x, int t) {
    RElem r = x;
    for (int i = 0; i < t; ++i) r = theta(r);
    return r;
}

/// Order of theta as an automorphism of R: m when m is even, otherwise 2m.
inline int theta_order(const FieldCtx& ctx) { return ctx.m() % 2 == 0 ? ctx.m() : 2 * ctx.m(); }

/// Gray map on one element: eta coordinates (a, b, c, d) -> (a, a+b, a+c, a+b+c+d).
inline std::array<FqElem, 4> gray(const RElem& x) {
    const auto& e = x.eta_coords();
    return {e[0], e[0] + e[1], e[0] + e[2], e[0] + e[1] + e[2] + e[3]};
}

inline RElem gray_inverse(const std::array<FqElem, 4>& y) {
    // a = y0, b = y1-y0, c = y2-y0, d = y3-y1-y2+y0
    return RElem::from_eta(y[0], y[1] - y[0], y[2] - y[0], y[3] - y[1] - y[2] + y[0]);
}

/// Lee weight: Hamming weight of the 4-symbol Gray image (between 0 and 4).
inline int lee_weight(const RElem& x) {
    auto g = gray(x);
    int w = 0;
    for (const auto& s : g) w += s.is_zero() ? 0 : 1;
    return w;
}

inline int lee_distance(const RElem& x, const RElem& y) { return lee_weight(x - y); }

/// A word in R^n.
class RVector {
   public:
    RVector() = default;
    explicit RVector(std::vector<RElem> entries) : e_(std::move(entries)) {}
    RVector(const FieldCtx& ctx, std::size_t n) : e_(n, RElem::zero(ctx)) {}

    std::size_t n() const { return e_.size(); }
    const RElem& operator[](std::size_t i) const { return e_[i]; }
    RElem& operator[](std::size_t i) { return e_[i]; }
    const std::vector<RElem>& entries() const { return e_; }

    friend RVector operator+(const RVector& x, const RVector& y) {
        if (x.n() != y.n()) raise(Errc::LengthMismatch, "vector lengths differ");
        std::vector<RElem> r;
        r.reserve(x.n());
        for (std::size_t i = 0; i < x.n(); ++i) r.push_back(x[i] + y[i]);
        return RVector(std::move(r));
    }
    friend RVector operator-(const RVector& x, const RVector& y) {
        if (x.n() != y.n()) raise(Errc::LengthMismatch, "vector lengths differ");
        std::vector<RElem> r;
        r.reserve(x.n());
        for (std::size_t i = 0; i < x.n(); ++i) r.push_back(x[i] - y[i]);
        return RVector(std::move(r));
    }
    friend bool operator==(const RVector& x, const RVector& y) { return x.e_ == y.e_; }
    friend bool operator!=(const RVector& x, const RVector& y) { return !(x == y); }

   private:
    std::vector<RElem> e_;
};

/// Skew cyclic shift rho(r) = (theta(r_{n-1}), theta(r_0), ..., theta(r_{n-2})).
inline RVector skew_shift(const RVector& w) {
    std::size_t n = w.n();
    std::vector<RElem> r;
    r.reserve(n);
    r.push_back(theta(w[n - 1]));
    for (std::size_t i = 0; i + 1 < n; ++i) r.push_back(theta(w[i]));
    return RVector(std::move(r));
}

/// Gray map on words, component-major block layout: output positions
/// (j, n+j, 2n+j, 3n+j) hold the four Gray coordinates of entry j. This exact
/// ordering is what makes the Gray image generator matrix block-triangular and
/// the nested Plotkin-sum identity hold verbatim.
inline std::vector<FqElem> gray(const RVector& w) {
    std::size_t n = w.n();
    std::vector<FqElem> out(4 * n);
    for (std::size_t j = 0; j < n; ++j) {
        auto g = gray(w[j]);
        for (std::size_t s = 0; s < 4; ++s) out[s * n + j] = g[s];
    }
    return out;
}

inline RVector gray_inverse(const std::vector<FqElem>& y) {
    if (y.size() % 4 != 0) raise(Errc::LengthMismatch, "Gray image length must be a multiple of 4");
    std::size_t n = y.size() / 4;
    std::vector<RElem> r;
    r.reserve(n);
    for (std::size_t j = 0; j < n; ++j)
        r.push_back(gray_inverse(std::array<FqElem, 4>{y[j], y[n + j], y[2 * n + j], y[3 * n + j]}));
    return RVector(std::move(r));
}

inline int lee_weight(const RVector& w) {
    int s = 0;
    for (std::size_t i = 0; i < w.n(); ++i) s += lee_weight(w[i]);
    return s;
}

inline int lee_distance(const RVector& x, const RVector& y) { return lee_weight(x - y); }

}  // namespace skewcodes
