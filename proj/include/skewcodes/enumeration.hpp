#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "skew_cyclic.hpp"

namespace skewcodes {

/// Commutative factorization x^n - 1 = prod p_i^{s_i} over F_q, with the p_i
/// monic, irreducible and pairwise distinct (t = 0 polynomials).
struct Factorization {
    struct Term {
        SkewPoly<FqElem> poly;
        int mult;
    };
    std::vector<Term> terms;
    std::size_t n = 0;
    std::uint64_t q = 0;
};

namespace detail {

// Monic polynomials of degree d over F_q in ascending (c_0, ..., c_{d-1})
// lexicographic order, by encoded coefficient value.
inline bool next_coeff_tuple(std::vector<std::uint64_t>& c, std::uint64_t q) {
    std::size_t i = c.size();
    while (i-- > 0) {
        if (c[i] + 1 < q) {
            ++c[i];
            return true;
        }
        c[i] = 0;
    }
    return false;
}

inline SkewPoly<FqElem> monic_from_tuple(const FieldCtx& ctx, const std::vector<std::uint64_t>& c,
                                         int auto_pow) {
    std::vector<FqElem> coeffs;
    coeffs.reserve(c.size() + 1);
    for (std::uint64_t v : c) coeffs.emplace_back(ctx, v);
    coeffs.push_back(FqElem::one(ctx));
    return SkewPoly<FqElem>(ctx, std::move(coeffs), auto_pow);
}

}  // namespace detail

/// Desk-scale factorization by repeated trial division with monic polynomials
/// enumerated in degree-then-lexicographic order. A composite candidate can
/// never divide the running cofactor (its smaller irreducible factors were
/// exhausted first), so every hit is irreducible. Supported for n <= 30,
/// q <= 81; a step budget guards the scan.
inline Factorization factor_xn_minus_1(const FieldCtx& ctx, std::size_t n) {
    if (n < 1) raise(Errc::DegreeMismatch, "n must be >= 1");
    if (n > 30 || ctx.q() > 81) raise(Errc::OutOfEnvelope, "factorization supports n <= 30, q <= 81");

    Factorization out;
    out.n = n;
    out.q = ctx.q();
    SkewPoly<FqElem> f = x_pow_minus_one<FqElem>(ctx, n, 0);
    std::uint64_t budget = 10'000'000;

    for (int d = 1; f.degree() > 0; ++d) {
        if (2 * d > f.degree()) {  // remaining cofactor is irreducible
            out.terms.push_back({f, 1});
            break;
        }
        std::vector<std::uint64_t> tuple(static_cast<std::size_t>(d), 0);
        do {
            if (budget-- == 0) raise(Errc::OutOfEnvelope, "factorization scan budget exhausted");
            SkewPoly<FqElem> cand = detail::monic_from_tuple(ctx, tuple, 0);
            int mult = 0;
            while (f.degree() >= cand.degree()) {
                auto dm = right_divmod(f, cand);
                if (!dm.rem.is_zero()) break;
                f = dm.quot;
                ++mult;
            }
            if (mult > 0) out.terms.push_back({cand, mult});
        } while (f.degree() >= 2 * d && detail::next_coeff_tuple(tuple, ctx.q()));
        if (f.degree() == 0) break;
    }

    // re-expansion postcondition, every run
    SkewPoly<FqElem> prod = SkewPoly<FqElem>::one(ctx, 0);
    for (const auto& t : out.terms)
        for (int i = 0; i < t.mult; ++i) prod = prod * t.poly;
    if (prod != x_pow_minus_one<FqElem>(ctx, n, 0))
        throw std::logic_error("factorization re-expansion mismatch");
    return out;
}

/// Number of distinct skew cyclic codes of odd length n over R:
/// prod (s_i + 1)^4 over the factorization of x^n - 1.
inline std::uint64_t count_skew_cyclic_r(const FieldCtx& ctx, std::size_t n) {
    if (n % 2 == 0) raise(Errc::EvenLength, "counting requires odd n");
    Factorization f = factor_xn_minus_1(ctx, n);
    std::uint64_t count = 1;
    for (const auto& t : f.terms) {
        std::uint64_t base = static_cast<std::uint64_t>(t.mult) + 1;
        for (int i = 0; i < 4; ++i) {
            if (count > UINT64_MAX / base) raise(Errc::OutOfEnvelope, "count exceeds 64 bits");
            count *= base;
        }
    }
    return count;
}

/// Brute-force oracle: all monic right divisors of x^n - 1 in F_q[x; theta^t],
/// found by scanning every monic polynomial of degree 0..n and testing the
/// right-division remainder. Sorted by (degree, coefficient lexicographic).
inline std::vector<SkewPoly<FqElem>> enumerate_right_divisors_fq(const FieldCtx& ctx, std::size_t n,
                                                                 int auto_pow) {
    double steps = static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) steps *= static_cast<double>(ctx.q());
    if (steps > 1e8) raise(Errc::OutOfEnvelope, "divisor scan q^n * n too large");

    SkewPoly<FqElem> target = x_pow_minus_one<FqElem>(ctx, n, auto_pow);
    std::vector<SkewPoly<FqElem>> out;
    for (std::size_t d = 0; d <= n; ++d) {
        std::vector<std::uint64_t> tuple(d, 0);
        do {
            SkewPoly<FqElem> cand = detail::monic_from_tuple(ctx, tuple, auto_pow);
            if (right_divides(cand, target)) out.push_back(cand);
        } while (detail::next_coeff_tuple(tuple, ctx.q()));
    }
    return out;
}

/// Iterate all 4-tuples of right divisors as constructed codes. Requires odd n
/// (the counting regime). The total equals |divisors|^4.
inline std::uint64_t for_each_code_r(const FieldCtx& ctx, std::size_t n,
                                     const std::function<void(const SkewCyclicCodeR&)>& fn,
                                     int auto_pow = 1) {
    if (n % 2 == 0) raise(Errc::EvenLength, "code enumeration requires odd n");
    auto divisors = enumerate_right_divisors_fq(ctx, n, auto_pow);
    std::uint64_t total = 0;
    for (const auto& g1 : divisors)
        for (const auto& g2 : divisors)
            for (const auto& g3 : divisors)
                for (const auto& g4 : divisors) {
                    fn(SkewCyclicCodeR(ctx, n, {g1, g2, g3, g4}));
                    ++total;
                }
    return total;
}

/// Distinctness witness: a word in exactly one of the two codes, located via
/// the component generators (no exhaustive word-set comparison needed).
inline bool codes_distinct(const SkewCyclicCodeR& a, const SkewCyclicCodeR& b) {
    for (int i = 1; i <= 4; ++i) {
        const auto& ga = a.component(i).gen();
        const auto& gb = b.component(i).gen();
        if (ga == gb) continue;
        // the lower-degree generator (either one, when degrees tie) lies in
        // exactly one of the two component codes
        std::vector<FqElem> w(a.n(), FqElem::zero(a.ctx()));
        const auto& g = ga.degree() <= gb.degree() ? ga : gb;
        for (int j = 0; j <= g.degree(); ++j)
            w[static_cast<std::size_t>(j)] = g.coeff(static_cast<std::size_t>(j));
        if (a.component(i).contains(w) != b.component(i).contains(w)) return true;
    }
    return false;
}

}  // namespace skewcodes
