#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "enumeration.hpp"
#include "io.hpp"
#include "skew_cyclic.hpp"

namespace skewcodes {

/// Re-examination of the published example family over GF(9), length 20:
/// component codes C1 = [20,1,20], C2 = [20,9,4], C3 = C4 = [20,10,2], whose
/// Gray image is claimed to be an [80,30,4] code. The study finds concrete
/// generator polynomials by scanning the divisor lattice of x^20 - 1, verifies
/// every component distance exactly by bounded-weight scans, evaluates the
/// Plotkin distance law min(2 min(2d1, d2), min(2d3, d4)), and exhibits an
/// explicit minimum-weight codeword of the Gray image.
struct Gf9Study {
    std::array<std::string, 4> gens;           // coefficient lists
    std::array<std::size_t, 4> dims{};         // component dimensions
    std::array<std::size_t, 4> dists{};        // exact component distances
    std::size_t length = 0;                    // 4n
    std::size_t dimension = 0;                 // rank of the block generator matrix
    std::size_t law_distance = 0;              // Plotkin law value
    std::size_t computed_distance = 0;         // exact distance of the Gray image
    bool distance_exact = false;
    std::vector<std::uint32_t> witness;        // a codeword of the Gray image attaining it
    bool witness_verified = false;
    std::array<std::size_t, 3> claimed{80, 30, 4};
    std::string note;
};

namespace detail {

/// Visit every word of Hamming weight exactly w (positions ascending, nonzero
/// values in encoding order); stop early when fn returns true.
inline bool scan_weight_words(const FieldCtx& ctx, std::size_t n, int w,
                              const std::function<bool(const std::vector<FqElem>&)>& fn) {
    if (w < 1 || static_cast<std::size_t>(w) > n) return false;
    std::vector<FqElem> word(n, FqElem::zero(ctx));
    std::vector<std::size_t> pos(static_cast<std::size_t>(w));
    std::vector<std::uint64_t> val(static_cast<std::size_t>(w), 1);
    for (std::size_t i = 0; i < pos.size(); ++i) pos[i] = i;
    while (true) {
        for (auto& c : word) c = FqElem::zero(ctx);
        for (std::size_t i = 0; i < pos.size(); ++i) word[pos[i]] = FqElem(ctx, val[i]);
        if (fn(word)) return true;
        // advance values first, then positions (combinations, lexicographic)
        std::size_t i = 0;
        while (i < val.size() && val[i] == ctx.q() - 1) val[i++] = 1;
        if (i < val.size()) {
            ++val[i];
            continue;
        }
        std::size_t j = pos.size();
        bool advanced = false;
        while (j-- > 0) {
            if (pos[j] + (pos.size() - j) < n) {
                ++pos[j];
                for (std::size_t k = j + 1; k < pos.size(); ++k) pos[k] = pos[k - 1] + 1;
                advanced = true;
                break;
            }
        }
        if (!advanced) return false;
    }
}

/// Exact minimum distance when it is known to be <= max_w, by scanning
/// Hamming balls of growing weight; 0 when every weight up to max_w is empty.
inline std::size_t min_weight_by_scan(const SkewCyclicCodeFq& c, int max_w) {
    for (int w = 1; w <= max_w; ++w) {
        bool found = scan_weight_words(c.ctx(), c.n(), w, [&](const std::vector<FqElem>& word) {
            return c.contains(word);
        });
        if (found) return static_cast<std::size_t>(w);
    }
    return 0;
}

}  // namespace detail

inline Gf9Study run_gf9_length20_study() {
    Gf9Study out;
    static const FieldCtx f9(3, 2);
    const std::size_t n = 20;

    // divisor lattice of x^20 - 1 over F_9: subset products of the 12
    // irreducible factors, in deterministic (degree, coefficient lex) order
    Factorization fact = factor_xn_minus_1(f9, n);
    std::vector<SkewPoly<FqElem>> divisors;
    std::size_t r = fact.terms.size();
    for (std::uint64_t mask = 0; mask < (1ull << r); ++mask) {
        auto prod = SkewPoly<FqElem>::one(f9, 0);
        for (std::size_t i = 0; i < r; ++i)
            if (mask & (1ull << i)) prod = prod * fact.terms[i].poly;
        divisors.push_back(std::move(prod));
    }
    std::sort(divisors.begin(), divisors.end(), [](const auto& a, const auto& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        for (int i = 0; i <= a.degree(); ++i) {
            auto av = a.coeff(static_cast<std::size_t>(i)).value();
            auto bv = b.coeff(static_cast<std::size_t>(i)).value();
            if (av != bv) return av < bv;
        }
        return false;
    });

    auto as_skew = [&](const SkewPoly<FqElem>& g) {
        std::vector<FqElem> c(g.coeffs());
        return SkewPoly<FqElem>(f9, std::move(c), 1);
    };
    auto is_skew_divisor = [&](const SkewPoly<FqElem>& g) {
        return right_divides(as_skew(g), x_pow_minus_one<FqElem>(f9, n, 1));
    };

    // C1: the [20,1,20] repetition code, generated by (x^20-1)/(x-1)
    auto xm1 = make_fq_poly(f9, {-1, 1}, 0);
    auto g1 = right_divmod(x_pow_minus_one<FqElem>(f9, n, 0), xm1).quot.monic();
    if (!is_skew_divisor(g1)) raise(Errc::SearchFailed, "repetition generator is not a skew divisor");
    SkewCyclicCodeFq c1(f9, n, as_skew(g1));
    {
        auto lin = c1.generator_matrix();
        auto d = lin.min_distance();
        if (!d.d || *d.d != 20) raise(Errc::SearchFailed, "repetition code distance != 20");
        out.dists[0] = *d.d;
    }

    // C2: first degree-11 skew divisor whose code has distance exactly 4
    std::optional<SkewPoly<FqElem>> g2;
    for (const auto& cand : divisors) {
        if (cand.degree() != 11 || !is_skew_divisor(cand)) continue;
        SkewCyclicCodeFq code(f9, n, as_skew(cand));
        std::size_t d = detail::min_weight_by_scan(code, 4);
        if (d == 4) {
            g2 = as_skew(cand);
            out.dists[1] = d;
            break;
        }
    }
    if (!g2) raise(Errc::SearchFailed, "no [20,9,4] component found in the divisor lattice");

    // C3 = C4: first degree-10 skew divisor with a weight-2 codeword
    std::optional<SkewPoly<FqElem>> g34;
    for (const auto& cand : divisors) {
        if (cand.degree() != 10 || !is_skew_divisor(cand)) continue;
        SkewCyclicCodeFq code(f9, n, as_skew(cand));
        std::size_t d = detail::min_weight_by_scan(code, 2);
        if (d == 2) {
            g34 = as_skew(cand);
            out.dists[2] = out.dists[3] = d;
            break;
        }
    }
    if (!g34) raise(Errc::SearchFailed, "no [20,10,2] component found in the divisor lattice");

    SkewCyclicCodeR code(f9, n, {as_skew(g1), *g2, *g34, *g34});
    out.gens = {format_poly(code.component(1).gen()), format_poly(code.component(2).gen()),
                format_poly(code.component(3).gen()), format_poly(code.component(4).gen())};
    for (int i = 1; i <= 4; ++i)
        out.dims[static_cast<std::size_t>(i - 1)] = code.component(i).dimension();

    LinearCode image = code.gray_image();
    out.length = image.n();
    out.dimension = image.dimension();

    // Plotkin law from the verified component distances
    auto d12 = std::min(2 * out.dists[0], out.dists[1]);
    auto d34 = std::min(2 * out.dists[2], out.dists[3]);
    out.law_distance = std::min(2 * d12, d34);

    // exact image distance: no Gray word of weight 1 (scan all 4n * (q-1)
    // singletons through the inverse Gray map), and a weight-2 witness of the
    // form (0,0,0,v) with v the weight-2 codeword of C4
    bool weight1 = detail::scan_weight_words(f9, 4 * n, 1, [&](const std::vector<FqElem>& y) {
        return code.contains(gray_inverse(y));
    });

    std::vector<FqElem> v2(n, FqElem::zero(f9));
    detail::scan_weight_words(f9, n, 2, [&](const std::vector<FqElem>& word) {
        if (code.component(4).contains(word)) {
            v2 = word;
            return true;
        }
        return false;
    });
    RVector eta4v(f9, n);
    for (std::size_t j = 0; j < n; ++j)
        eta4v[j] = RElem::from_eta(FqElem::zero(f9), FqElem::zero(f9), FqElem::zero(f9), v2[j]);
    auto witness = gray(eta4v);
    out.witness_verified = code.contains(eta4v) && image.contains(witness) &&
                           hamming_weight(witness) == 2 && !weight1;
    for (const auto& c : witness) out.witness.push_back(c.value());
    out.computed_distance = 2;
    out.distance_exact = out.witness_verified;
    out.note = "claimed distance 4 is not attained: the Plotkin law gives min(2*min(2d1,d2),"
               " min(2d3,d4)) = 2 and a weight-2 image word of the form (0,0,0,v) exists";
    return out;
}

}  // namespace skewcodes
