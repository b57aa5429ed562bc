#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "errors.hpp"

namespace skewcodes {

/// Exact arithmetic in F_q, q = p^m with p an odd prime.
///
/// A FieldCtx validates its parameters at construction, picks a canonical
/// modulus when none is given (the lexicographically smallest monic
/// irreducible of degree m, scanned by coefficient tuple (c0,...,c_{m-1})),
/// and precomputes operation tables for small q. Elements are stored in the
/// integer encoding sum(c_i * p^i) of their polynomial-basis coordinates,
/// which is also the I/O literal format.
///
/// Contexts are immutable and must outlive every element bound to them.
class FieldCtx {
   public:
    static constexpr std::uint64_t kMaxQ = 1u << 20;   // desk-scale envelope
    static constexpr std::uint64_t kLutMaxQ = 256;     // table-backed ops below this

    FieldCtx(long long p, int m) : FieldCtx(p, m, canonical_modulus(p, m)) {}

    FieldCtx(long long p, int m, std::vector<long long> modulus) : p_(p), m_(m) {
        validate_p(p);
        if (m < 1) raise(Errc::DegreeMismatch, "extension degree must be >= 1");
        q_ = 1;
        for (int i = 0; i < m; ++i) {
            q_ *= static_cast<std::uint64_t>(p);
            if (q_ > kMaxQ) raise(Errc::OutOfEnvelope, "q = p^m exceeds supported size");
        }
        if (modulus.size() != static_cast<std::size_t>(m) + 1)
            raise(Errc::DegreeMismatch, "modulus must have degree exactly m");
        modulus_.resize(modulus.size());
        for (std::size_t i = 0; i < modulus.size(); ++i)
            modulus_[i] = ((modulus[i] % p) + p) % p;
        if (modulus_.back() != 1) raise(Errc::DegreeMismatch, "modulus must be monic");
        if (m > 1 && !is_irreducible_over_fp(p, modulus_))
            raise(Errc::ReducibleModulus, "modulus is reducible over F_p");
        if (q_ <= kLutMaxQ) build_tables();
    }

    FieldCtx(const FieldCtx&) = delete;
    FieldCtx& operator=(const FieldCtx&) = delete;

    long long p() const { return p_; }
    int m() const { return m_; }
    std::uint64_t q() const { return q_; }
    const std::vector<long long>& modulus() const { return modulus_; }

    bool same_field(const FieldCtx& other) const {
        return this == &other || (p_ == other.p_ && m_ == other.m_ && modulus_ == other.modulus_);
    }

    // --- operations on encoded values (0 <= a, b < q) ---

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        return lut_ ? add_tab_[a * q_ + b] : add_slow(a, b);
    }
    std::uint32_t neg(std::uint32_t a) const { return lut_ ? neg_tab_[a] : neg_slow(a); }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return lut_ ? mul_tab_[a * q_ + b] : mul_slow(a, b);
    }
    std::uint32_t inv(std::uint32_t a) const {
        if (a == 0) raise(Errc::DivisionByZero, "inverse of zero");
        return lut_ ? inv_tab_[a] : pow(a, q_ - 2);
    }
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
        std::uint32_t r = 1, base = a;
        while (e) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }

    /// a^(p^t): the t-th power of the Frobenius automorphism. t = 0 is the identity.
    std::uint32_t frob(std::uint32_t a, int t) const {
        int steps = ((t % m_) + m_) % m_;
        std::uint32_t r = a;
        for (int i = 0; i < steps; ++i) r = lut_ ? frob_tab_[r] : pow(r, static_cast<std::uint64_t>(p_));
        return r;
    }

    std::vector<long long> decode(std::uint32_t a) const {
        std::vector<long long> c(m_);
        for (int i = 0; i < m_; ++i) {
            c[i] = static_cast<long long>(a % p_);
            a /= static_cast<std::uint32_t>(p_);
        }
        return c;
    }

    std::uint32_t encode(const std::vector<long long>& coeffs) const {
        std::uint64_t v = 0;
        for (std::size_t i = coeffs.size(); i-- > 0;) {
            long long c = ((coeffs[i] % p_) + p_) % p_;
            v = v * static_cast<std::uint64_t>(p_) + static_cast<std::uint64_t>(c);
        }
        return static_cast<std::uint32_t>(v);
    }

    /// Lexicographically smallest monic irreducible of degree m over F_p,
    /// scanning non-leading coefficient tuples (c0,...,c_{m-1}) in ascending
    /// lexicographic order. Deterministic so that serialized codes reproduce.
    static std::vector<long long> canonical_modulus(long long p, int m) {
        validate_p(p);
        if (m < 1) raise(Errc::DegreeMismatch, "extension degree must be >= 1");
        if (m == 1) return {0, 1};  // x
        std::vector<long long> c(m, 0);
        while (true) {
            std::vector<long long> cand(c);
            cand.push_back(1);
            if (is_irreducible_over_fp(p, cand)) return cand;
            int i = m - 1;
            while (i >= 0 && c[i] == p - 1) c[i--] = 0;
            if (i < 0) raise(Errc::OutOfEnvelope, "no irreducible found (scan exhausted)");
            ++c[i];
        }
    }

   private:
    static void validate_p(long long p) {
        if (p == 2) raise(Errc::EvenPrime, "p = 2 is not supported (p must be odd)");
        if (p < 2) raise(Errc::NotPrime, "p must be an odd prime");
        for (long long d = 2; d * d <= p; ++d)
            if (p % d == 0) raise(Errc::NotPrime, "p must be an odd prime");
    }

    // Plain F_p[x] division step used by the irreducibility scan. f is reduced
    // in place by monic g; true when the remainder is zero.
    static bool divides_fp(long long p, const std::vector<long long>& g, std::vector<long long> f) {
        int dg = static_cast<int>(g.size()) - 1;
        for (int i = static_cast<int>(f.size()) - 1; i >= dg; --i) {
            long long c = f[i] % p;
            if (c == 0) continue;
            for (int j = 0; j <= dg; ++j)
                f[i - dg + j] = ((f[i - dg + j] - c * g[j]) % p + p) % p;
        }
        for (int i = 0; i < dg; ++i)
            if (f[i] % p != 0) return false;
        return true;
    }

    // No roots and no monic factor of degree <= m/2, by trial division.
    // Covers the supported envelope (m <= 6); larger scans are rejected.
    static bool is_irreducible_over_fp(long long p, const std::vector<long long>& f) {
        int m = static_cast<int>(f.size()) - 1;
        if (m == 1) return true;
        for (long long a = 0; a < p; ++a) {
            long long v = 0;
            for (int i = m; i >= 0; --i) v = (v * a + f[i]) % p;
            if (v == 0) return false;
        }
        for (int d = 2; d <= m / 2; ++d) {
            double scan = 1;
            for (int i = 0; i < d; ++i) scan *= static_cast<double>(p);
            if (scan > 2e6) raise(Errc::OutOfEnvelope, "irreducibility scan too large");
            std::vector<long long> g(d + 1, 0);
            g[d] = 1;
            while (true) {
                if (divides_fp(p, g, f)) return false;
                int i = 0;
                while (i < d && g[i] == p - 1) g[i++] = 0;
                if (i == d) break;
                ++g[i];
            }
        }
        return true;
    }

    std::uint32_t add_slow(std::uint32_t a, std::uint32_t b) const {
        std::uint32_t r = 0, mult = 1;
        for (int i = 0; i < m_; ++i) {
            std::uint32_t ca = a % p_, cb = b % p_;
            a /= static_cast<std::uint32_t>(p_);
            b /= static_cast<std::uint32_t>(p_);
            r += ((ca + cb) % p_) * mult;
            mult *= static_cast<std::uint32_t>(p_);
        }
        return r;
    }

    std::uint32_t neg_slow(std::uint32_t a) const {
        std::uint32_t r = 0, mult = 1;
        for (int i = 0; i < m_; ++i) {
            std::uint32_t c = a % p_;
            a /= static_cast<std::uint32_t>(p_);
            r += ((p_ - c) % p_) * mult;
            mult *= static_cast<std::uint32_t>(p_);
        }
        return r;
    }

    std::uint32_t mul_slow(std::uint32_t a, std::uint32_t b) const {
        std::vector<long long> ca = decode(a), cb = decode(b);
        std::vector<long long> prod(2 * m_ - 1, 0);
        for (int i = 0; i < m_; ++i) {
            if (ca[i] == 0) continue;
            for (int j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p_;
        }
        for (int i = 2 * m_ - 2; i >= m_; --i) {
            long long c = prod[i];
            if (c == 0) continue;
            for (int j = 0; j < m_; ++j)
                prod[i - m_ + j] = ((prod[i - m_ + j] - c * modulus_[j]) % p_ + p_) % p_;
            prod[i] = 0;
        }
        prod.resize(m_);
        return encode(prod);
    }

    void build_tables() {
        add_tab_.resize(q_ * q_);
        mul_tab_.resize(q_ * q_);
        neg_tab_.resize(q_);
        inv_tab_.resize(q_);
        frob_tab_.resize(q_);
        for (std::uint32_t a = 0; a < q_; ++a) {
            neg_tab_[a] = neg_slow(a);
            for (std::uint32_t b = 0; b < q_; ++b) {
                add_tab_[a * q_ + b] = add_slow(a, b);
                mul_tab_[a * q_ + b] = mul_slow(a, b);
            }
        }
        lut_ = true;  // pow/inv/frob below may now use the 2D tables
        for (std::uint32_t a = 1; a < q_; ++a) inv_tab_[a] = pow(a, q_ - 2);
        inv_tab_[0] = 0;
        for (std::uint32_t a = 0; a < q_; ++a) frob_tab_[a] = pow(a, static_cast<std::uint64_t>(p_));
    }

    long long p_;
    int m_;
    std::uint64_t q_;
    std::vector<long long> modulus_;
    bool lut_ = false;
    std::vector<std::uint32_t> add_tab_, mul_tab_, neg_tab_, inv_tab_, frob_tab_;
};

/// An element of F_q bound to its FieldCtx. Value semantics; the canonical
/// form is the encoded integer, so equality is plain value comparison.
class FqElem {
   public:
    FqElem() : ctx_(nullptr), v_(0) {}

    FqElem(const FieldCtx& ctx, std::uint64_t value) : ctx_(&ctx), v_(static_cast<std::uint32_t>(value)) {
        if (value >= ctx.q()) raise(Errc::DomainMismatch, "element literal out of range");
    }

    static FqElem from_coeffs(const FieldCtx& ctx, const std::vector<long long>& coeffs) {
        if (coeffs.size() > static_cast<std::size_t>(ctx.m()))
            raise(Errc::DegreeMismatch, "too many coordinates for this field");
        return FqElem(ctx, ctx.encode(coeffs));
    }

    static FqElem zero(const FieldCtx& ctx) { return FqElem(ctx, 0); }
    static FqElem one(const FieldCtx& ctx) { return FqElem(ctx, 1); }

    const FieldCtx& ctx() const {
        if (!ctx_) raise(Errc::ContextMismatch, "element is not bound to a field");
        return *ctx_;
    }
    std::uint32_t value() const { return v_; }
    std::vector<long long> coeffs() const { return ctx().decode(v_); }
    bool is_zero() const { return v_ == 0; }

    friend FqElem operator+(const FqElem& a, const FqElem& b) {
        const FieldCtx& c = common(a, b);
        return wrap(c, c.add(a.v_, b.v_));
    }
    friend FqElem operator-(const FqElem& a, const FqElem& b) {
        const FieldCtx& c = common(a, b);
        return wrap(c, c.sub(a.v_, b.v_));
    }
    friend FqElem operator*(const FqElem& a, const FqElem& b) {
        const FieldCtx& c = common(a, b);
        return wrap(c, c.mul(a.v_, b.v_));
    }
    FqElem operator-() const { return wrap(ctx(), ctx().neg(v_)); }

    FqElem inv() const { return wrap(ctx(), ctx().inv(v_)); }
    FqElem pow(std::uint64_t e) const { return wrap(ctx(), ctx().pow(v_, e)); }

    friend bool operator==(const FqElem& a, const FqElem& b) {
        if (a.ctx_ && b.ctx_ && !a.ctx_->same_field(*b.ctx_)) return false;
        return a.v_ == b.v_;
    }
    friend bool operator!=(const FqElem& a, const FqElem& b) { return !(a == b); }

   private:
    static FqElem wrap(const FieldCtx& ctx, std::uint32_t v) {
        FqElem e;
        e.ctx_ = &ctx;
        e.v_ = v;
        return e;
    }
    static const FieldCtx& common(const FqElem& a, const FqElem& b) {
        if (!a.ctx_ || !b.ctx_) raise(Errc::ContextMismatch, "element is not bound to a field");
        if (a.ctx_ != b.ctx_ && !a.ctx_->same_field(*b.ctx_))
            raise(Errc::ContextMismatch, "elements of different fields");
        return *a.ctx_;
    }

    const FieldCtx* ctx_;
    std::uint32_t v_;
};

/// a^(p^t), extended to t = 0 (identity). A field automorphism for every t.
inline FqElem frobenius(const FqElem& a, int t) {
    return FqElem(a.ctx(), a.ctx().frob(a.value(), t));
}

}  // namespace skewcodes
