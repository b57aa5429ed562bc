#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "ring.hpp"

namespace skewcodes {

// Coefficient-domain hooks for SkewPoly: the base automorphism (Frobenius for
// F_q, theta for R) and unit handling.
template <class C>
struct SkewDomain;

template <>
struct SkewDomain<FqElem> {
    static FqElem sigma(const FqElem& c, long long s) {
        return frobenius(c, static_cast<int>(s % c.ctx().m()));
    }
    static bool invertible(const FqElem& c) { return !c.is_zero(); }
    static FqElem inv(const FqElem& c) {
        if (c.is_zero()) raise(Errc::NonInvertibleLead, "leading coefficient is zero");
        return c.inv();
    }
    static FqElem zero(const FieldCtx& ctx) { return FqElem::zero(ctx); }
    static FqElem one(const FieldCtx& ctx) { return FqElem::one(ctx); }
};

template <>
struct SkewDomain<RElem> {
    static RElem sigma(const RElem& c, long long s) {
        return theta_pow(c, static_cast<int>(s % theta_order(c.ctx())));
    }
    static bool invertible(const RElem& c) { return c.is_unit(); }
    static RElem inv(const RElem& c) {
        if (!c.is_unit()) raise(Errc::NonInvertibleLead, "leading coefficient is not a unit of R");
        return c.inv();
    }
    static RElem zero(const FieldCtx& ctx) { return RElem::zero(ctx); }
    static RElem one(const FieldCtx& ctx) { return RElem::one(ctx); }
};

/// A polynomial in the skew ring D[x; sigma^t], coefficients written on the
/// left of x and multiplied by the rule (a x^i)(b x^j) = a sigma^{ti}(b) x^{i+j}.
/// D is F_q (sigma = Frobenius) or R (sigma = theta). t = 0 gives the ordinary
/// commutative polynomial ring, which doubles as the cross-check oracle.
///
/// Coefficients are stored low-to-high with trailing zeros stripped; the zero
/// polynomial has degree -1 (the "minus infinity" sentinel).
template <class C>
class SkewPoly {
    using D = SkewDomain<C>;

   public:
    SkewPoly(const FieldCtx& ctx, std::vector<C> coeffs, int auto_pow)
        : ctx_(&ctx), c_(std::move(coeffs)), t_(auto_pow) {
        prune();
    }

    static SkewPoly zero(const FieldCtx& ctx, int auto_pow) { return SkewPoly(ctx, {}, auto_pow); }
    static SkewPoly one(const FieldCtx& ctx, int auto_pow) {
        return SkewPoly(ctx, {D::one(ctx)}, auto_pow);
    }

    const FieldCtx& ctx() const { return *ctx_; }
    int auto_pow() const { return t_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    C coeff(std::size_t i) const { return i < c_.size() ? c_[i] : D::zero(*ctx_); }
    const std::vector<C>& coeffs() const { return c_; }

    const C& lead() const {
        if (c_.empty()) raise(Errc::DivisorZero, "zero polynomial has no leading coefficient");
        return c_.back();
    }
    bool is_monic() const { return !c_.empty() && c_.back() == D::one(*ctx_); }

    /// Left-scale by the inverse of the leading coefficient (does not change
    /// the generated left module).
    SkewPoly monic() const {
        if (is_monic()) return *this;
        C s = D::inv(lead());
        std::vector<C> out;
        out.reserve(c_.size());
        for (const auto& a : c_) out.push_back(s * a);
        return SkewPoly(*ctx_, std::move(out), t_);
    }

    friend SkewPoly operator+(const SkewPoly& f, const SkewPoly& g) {
        check_domains(f, g);
        std::vector<C> out(std::max(f.c_.size(), g.c_.size()), D::zero(*f.ctx_));
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.coeff(i) + g.coeff(i);
        return SkewPoly(*f.ctx_, std::move(out), f.t_);
    }

    friend SkewPoly operator-(const SkewPoly& f, const SkewPoly& g) {
        check_domains(f, g);
        std::vector<C> out(std::max(f.c_.size(), g.c_.size()), D::zero(*f.ctx_));
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.coeff(i) - g.coeff(i);
        return SkewPoly(*f.ctx_, std::move(out), f.t_);
    }

    SkewPoly operator-() const {
        std::vector<C> out;
        out.reserve(c_.size());
        for (const auto& a : c_) out.push_back(-a);
        return SkewPoly(*ctx_, std::move(out), t_);
    }

    /// Twisted product: bilinear extension of (a x^i)(b x^j) = a sigma^{ti}(b) x^{i+j}.
    friend SkewPoly operator*(const SkewPoly& f, const SkewPoly& g) {
        check_domains(f, g);
        if (f.is_zero() || g.is_zero()) return zero(*f.ctx_, f.t_);
        std::vector<C> out(f.c_.size() + g.c_.size() - 1, D::zero(*f.ctx_));
        for (std::size_t i = 0; i < f.c_.size(); ++i) {
            if (f.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < g.c_.size(); ++j) {
                if (g.c_[j].is_zero()) continue;
                out[i + j] = out[i + j] + f.c_[i] * twist(g.c_[j], i, f.t_);
            }
        }
        return SkewPoly(*f.ctx_, std::move(out), f.t_);
    }

    friend bool operator==(const SkewPoly& f, const SkewPoly& g) {
        return f.t_ == g.t_ && f.ctx_->same_field(*g.ctx_) && f.c_ == g.c_;
    }
    friend bool operator!=(const SkewPoly& f, const SkewPoly& g) { return !(f == g); }

    static C twist(const C& c, std::size_t deg, int t) {
        return D::sigma(c, static_cast<long long>(deg) * t);
    }

    static void check_domains(const SkewPoly& f, const SkewPoly& g) {
        if (f.t_ != g.t_ || !f.ctx_->same_field(*g.ctx_))
            raise(Errc::DomainMismatch, "polynomials live in different skew rings");
    }

   private:
    void prune() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    const FieldCtx* ctx_;
    std::vector<C> c_;
    int t_;
};

template <class C>
struct DivModResult {
    SkewPoly<C> quot;
    SkewPoly<C> rem;
};

/// Right division f = quot * g + rem with deg(rem) < deg(g). Each elimination
/// step with k = deg(f') - deg(g) uses c = lead(f') * sigma^{tk}(lead(g))^{-1},
/// so (c x^k) * g cancels the leading term. Requires an invertible leading
/// coefficient (always true over F_q; over R all four eta coordinates must be
/// nonzero, otherwise NonInvertibleLead).
template <class C>
DivModResult<C> right_divmod(const SkewPoly<C>& f, const SkewPoly<C>& g) {
    using D = SkewDomain<C>;
    SkewPoly<C>::check_domains(f, g);
    if (g.is_zero()) raise(Errc::DivisorZero, "right division by the zero polynomial");
    if (!D::invertible(g.lead()))
        raise(Errc::NonInvertibleLead, "leading coefficient of divisor is not invertible");

    const FieldCtx& ctx = f.ctx();
    const int t = f.auto_pow();
    const int dg = g.degree();
    if (f.degree() < dg) return {SkewPoly<C>::zero(ctx, t), f};

    std::vector<C> rem(f.coeffs());
    std::vector<C> quot(static_cast<std::size_t>(f.degree() - dg) + 1, D::zero(ctx));
    int df = f.degree();
    while (df >= dg) {
        const C& lf = rem[static_cast<std::size_t>(df)];
        if (!lf.is_zero()) {
            int k = df - dg;
            C c = lf * D::inv(SkewPoly<C>::twist(g.lead(), static_cast<std::size_t>(k), t));
            quot[static_cast<std::size_t>(k)] = c;
            for (int j = 0; j <= dg; ++j) {
                C term = c * SkewPoly<C>::twist(g.coeff(static_cast<std::size_t>(j)),
                                                static_cast<std::size_t>(k), t);
                rem[static_cast<std::size_t>(k + j)] = rem[static_cast<std::size_t>(k + j)] - term;
            }
        }
        --df;
    }
    rem.resize(static_cast<std::size_t>(dg >= 0 ? dg : 0));
    return {SkewPoly<C>(ctx, std::move(quot), t), SkewPoly<C>(ctx, std::move(rem), t)};
}

/// True when g right-divides f, i.e. f = q * g exactly.
template <class C>
bool right_divides(const SkewPoly<C>& g, const SkewPoly<C>& f) {
    return right_divmod(f, g).rem.is_zero();
}

/// x^n - 1 in the requested skew ring.
template <class C>
SkewPoly<C> x_pow_minus_one(const FieldCtx& ctx, std::size_t n, int auto_pow) {
    using D = SkewDomain<C>;
    if (n < 1) raise(Errc::DegreeMismatch, "n must be >= 1");
    std::vector<C> c(n + 1, D::zero(ctx));
    c[0] = -D::one(ctx);
    c[n] = D::one(ctx);
    return SkewPoly<C>(ctx, std::move(c), auto_pow);
}

/// The dual-generator transform: for h of degree n - t (t = deg of the paired
/// generator), coefficient i of the output is sigma^i(h_{n-t-i}). Preserves the
/// degree when h has a nonzero constant term.
template <class C>
SkewPoly<C> h_tilde(const SkewPoly<C>& h, std::size_t n, std::size_t t) {
    if (h.degree() < 0 || static_cast<std::size_t>(h.degree()) != n - t)
        raise(Errc::DegreeMismatch, "deg(h) must equal n - t");
    std::size_t d = n - t;
    std::vector<C> out;
    out.reserve(d + 1);
    for (std::size_t i = 0; i <= d; ++i)
        out.push_back(SkewDomain<C>::sigma(h.coeff(d - i), static_cast<long long>(i) * h.auto_pow()));
    return SkewPoly<C>(h.ctx(), std::move(out), h.auto_pow());
}

/// Coefficients from integer literals: non-negative values are element
/// encodings (must be < q); negative values mean the field negation of |v|.
inline SkewPoly<FqElem> make_fq_poly(const FieldCtx& ctx, const std::vector<long long>& values,
                                     int auto_pow) {
    std::vector<FqElem> c;
    c.reserve(values.size());
    for (long long v : values) {
        if (v >= 0) {
            if (static_cast<std::uint64_t>(v) >= ctx.q())
                raise(Errc::DomainMismatch, "coefficient literal out of range");
            c.emplace_back(ctx, static_cast<std::uint64_t>(v));
        } else {
            c.push_back(-FqElem(ctx, static_cast<std::uint64_t>(-v)));
        }
    }
    return SkewPoly<FqElem>(ctx, std::move(c), auto_pow);
}

/// sum_i eta_i g_i(x): the R-polynomial whose k-th coefficient has eta
/// coordinates ((g1)_k, ..., (g4)_k). All four inputs must share one skew ring.
inline SkewPoly<RElem> combine_eta(const std::array<SkewPoly<FqElem>, 4>& g) {
    for (int i = 1; i < 4; ++i) SkewPoly<FqElem>::check_domains(g[0], g[static_cast<std::size_t>(i)]);
    const FieldCtx& ctx = g[0].ctx();
    int deg = -1;
    for (const auto& gi : g) deg = std::max(deg, gi.degree());
    std::vector<RElem> c;
    c.reserve(static_cast<std::size_t>(deg + 1));
    for (int k = 0; k <= deg; ++k) {
        std::size_t i = static_cast<std::size_t>(k);
        c.push_back(RElem::from_eta(g[0].coeff(i), g[1].coeff(i), g[2].coeff(i), g[3].coeff(i)));
    }
    return SkewPoly<RElem>(ctx, std::move(c), g[0].auto_pow());
}

/// Projection onto the i-th eta coordinate (i in 1..4), an F_q polynomial.
inline SkewPoly<FqElem> eta_component(const SkewPoly<RElem>& f, int i) {
    std::vector<FqElem> c;
    c.reserve(static_cast<std::size_t>(f.degree() + 1));
    for (int k = 0; k <= f.degree(); ++k)
        c.push_back(f.coeff(static_cast<std::size_t>(k)).eta_coord(i));
    return SkewPoly<FqElem>(f.ctx(), std::move(c), f.auto_pow());
}

}  // namespace skewcodes
