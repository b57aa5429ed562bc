#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "linear_code.hpp"
#include "skew_poly.hpp"

namespace skewcodes {

/// A skew cyclic code of length n over F_q: the words w of degree < n (as
/// polynomials) that are right-multiples of the monic generator g, where g is
/// a right divisor of x^n - 1 in F_q[x; theta]. The cofactor h with
/// x^n - 1 = h * g is stored at construction; dimension is n - deg(g).
class SkewCyclicCodeFq {
   public:
    SkewCyclicCodeFq(const FieldCtx& ctx, std::size_t n, const SkewPoly<FqElem>& g)
        : ctx_(&ctx),
          n_(n),
          g_(g),
          h_(SkewPoly<FqElem>::zero(ctx, g.auto_pow())) {
        if (n < 1) raise(Errc::DegreeMismatch, "n must be >= 1");
        if (g.is_zero() || !g.is_monic()) raise(Errc::NotMonic, "generator must be monic");
        if (static_cast<std::size_t>(g.degree()) > n)
            raise(Errc::NotRightDivisor, "deg(g) exceeds n");
        auto dm = right_divmod(x_pow_minus_one<FqElem>(ctx, n, g.auto_pow()), g);
        if (!dm.rem.is_zero())
            raise(Errc::NotRightDivisor, "g does not right-divide x^n - 1");
        h_ = dm.quot;
    }

    const FieldCtx& ctx() const { return *ctx_; }
    std::size_t n() const { return n_; }
    int auto_pow() const { return g_.auto_pow(); }
    const SkewPoly<FqElem>& gen() const { return g_; }
    const SkewPoly<FqElem>& cofactor() const { return h_; }
    std::size_t dimension() const { return n_ - static_cast<std::size_t>(g_.degree()); }

    /// Row i holds the coefficients of x^i * g: entry (i, i+j) is theta^i(g_j).
    /// The staircase of monic leads makes the rank exactly n - deg(g).
    LinearCode generator_matrix() const {
        std::size_t k = dimension();
        std::vector<std::vector<FqElem>> rows;
        rows.reserve(k);
        for (std::size_t i = 0; i < k; ++i) {
            std::vector<FqElem> row(n_, FqElem::zero(*ctx_));
            for (int j = 0; j <= g_.degree(); ++j)
                row[i + static_cast<std::size_t>(j)] =
                    SkewPoly<FqElem>::twist(g_.coeff(static_cast<std::size_t>(j)), i, g_.auto_pow());
            rows.push_back(std::move(row));
        }
        return LinearCode::from_rows(*ctx_, n_, std::move(rows));
    }

    /// Membership: zero remainder after right division by g. Words of length n
    /// have degree < n, so no reduction mod x^n - 1 is ever needed first.
    bool contains(const std::vector<FqElem>& word) const {
        if (word.size() != n_) raise(Errc::LengthMismatch, "word length differs from n");
        if (g_.degree() == 0) return true;
        std::vector<FqElem> rem(word);
        int dg = g_.degree();
        for (int i = static_cast<int>(n_) - 1; i >= dg; --i) {
            const FqElem& c = rem[static_cast<std::size_t>(i)];
            if (c.is_zero()) continue;
            std::size_t k = static_cast<std::size_t>(i - dg);
            FqElem f = c * SkewPoly<FqElem>::twist(g_.lead(), k, g_.auto_pow()).inv();
            for (int j = 0; j <= dg; ++j)
                rem[k + static_cast<std::size_t>(j)] =
                    rem[k + static_cast<std::size_t>(j)] -
                    f * SkewPoly<FqElem>::twist(g_.coeff(static_cast<std::size_t>(j)), k, g_.auto_pow());
        }
        for (int j = 0; j < dg; ++j)
            if (!rem[static_cast<std::size_t>(j)].is_zero()) return false;
        return true;
    }

    bool contains(const SkewPoly<FqElem>& w) const {
        std::vector<FqElem> word(n_, FqElem::zero(*ctx_));
        if (w.degree() >= static_cast<int>(n_)) raise(Errc::LengthMismatch, "degree >= n");
        for (int i = 0; i <= w.degree(); ++i)
            word[static_cast<std::size_t>(i)] = w.coeff(static_cast<std::size_t>(i));
        return contains(word);
    }

    /// Dual code, generated by the monic-normalized transform of the cofactor.
    SkewCyclicCodeFq dual() const {
        auto ht = h_tilde(h_, n_, static_cast<std::size_t>(g_.degree())).monic();
        return SkewCyclicCodeFq(*ctx_, n_, ht);
    }

   private:
    const FieldCtx* ctx_;
    std::size_t n_;
    SkewPoly<FqElem> g_, h_;
};

/// A skew cyclic code of length n over R, assembled from four component codes
/// via the idempotent decomposition: the word set is
///   { eta1 c1 + eta2 c2 + eta3 c3 + eta4 c4 : c_i in C_i },
/// so |C| = q^{4n - sum deg(g_i)}. The combined generator sum eta_i g_i(x) is
/// kept alongside; whether it right-divides x^n - 1 in R[x; theta] is checkable
/// only when its leading coefficient is a unit (all component degrees equal),
/// and is exposed as a diagnostic rather than enforced, because theta swaps
/// eta3 and eta4 and the division identity genuinely fails for g3 != g4.
class SkewCyclicCodeR {
   public:
    SkewCyclicCodeR(const FieldCtx& ctx, std::size_t n, const std::array<SkewPoly<FqElem>, 4>& gens)
        : ctx_(&ctx), n_(n), g_(combine_eta(gens)) {
        comp_.reserve(4);
        for (const auto& g : gens) comp_.emplace_back(ctx, n, g);
    }

    const FieldCtx& ctx() const { return *ctx_; }
    std::size_t n() const { return n_; }
    const SkewCyclicCodeFq& component(int i) const { return comp_[static_cast<std::size_t>(i - 1)]; }
    const SkewPoly<RElem>& combined_generator() const { return g_; }

    std::size_t sum_gen_degrees() const {
        std::size_t s = 0;
        for (const auto& c : comp_) s += static_cast<std::size_t>(c.gen().degree());
        return s;
    }

    /// log_q |C| = 4n - sum deg(g_i).
    std::size_t dimension() const { return 4 * n_ - sum_gen_degrees(); }
    bool cardinality_u64(std::uint64_t& out) const { return pow_u64(ctx_->q(), dimension(), out); }
    std::string cardinality_str() const { return pow_decimal(ctx_->q(), dimension()); }

    /// Right-divisibility of x^n - 1 by the combined generator over R, via
    /// right division. Empty when the leading coefficient is not a unit (the
    /// division algorithm requires a fully invertible lead).
    std::optional<bool> combined_generator_divides() const {
        if (!SkewDomain<RElem>::invertible(g_.lead())) return std::nullopt;
        auto dm = right_divmod(x_pow_minus_one<RElem>(*ctx_, n_, g_.auto_pow()), g_);
        return dm.rem.is_zero();
    }

    bool contains(const RVector& w) const {
        if (w.n() != n_) raise(Errc::LengthMismatch, "word length differs from n");
        for (int i = 1; i <= 4; ++i) {
            std::vector<FqElem> comp_word;
            comp_word.reserve(n_);
            for (std::size_t j = 0; j < n_; ++j) comp_word.push_back(w[j].eta_coord(i));
            if (!component(i).contains(comp_word)) return false;
        }
        return true;
    }

    SkewCyclicCodeR dual() const {
        std::array<SkewPoly<FqElem>, 4> duals{comp_[0].dual().gen(), comp_[1].dual().gen(),
                                              comp_[2].dual().gen(), comp_[3].dual().gen()};
        return SkewCyclicCodeR(*ctx_, n_, duals);
    }

    /// Generator matrix of the Gray image: the block form
    ///   [ G1 G1 G1 G1 / 0 G2 0 G2 / 0 0 G3 G3 / 0 0 0 G4 ]
    /// whose row space equals { Phi(w) : w in C }.
    LinearCode gray_image() const {
        const FieldCtx& ctx = *ctx_;
        std::vector<std::vector<FqElem>> rows;
        static constexpr bool kPattern[4][4] = {
            {true, true, true, true},
            {false, true, false, true},
            {false, false, true, true},
            {false, false, false, true},
        };
        for (int i = 0; i < 4; ++i) {
            LinearCode gi = comp_[static_cast<std::size_t>(i)].generator_matrix();
            for (const auto& r : gi.basis()) {
                std::vector<FqElem> row(4 * n_, FqElem::zero(ctx));
                for (int blk = 0; blk < 4; ++blk) {
                    if (!kPattern[i][blk]) continue;
                    for (std::size_t j = 0; j < n_; ++j)
                        row[static_cast<std::size_t>(blk) * n_ + j] = r[j];
                }
                rows.push_back(std::move(row));
            }
        }
        return LinearCode::from_rows(ctx, 4 * n_, std::move(rows));
    }

    /// Visit every word of C exactly once, as eta-combinations of component
    /// codewords. Guarded by cap.
    void for_each_word(const std::function<void(const RVector&)>& fn,
                       std::uint64_t cap = kDefaultCap) const {
        std::uint64_t total;
        if (!cardinality_u64(total) || total > cap)
            raise(Errc::CapExceeded, "code too large to enumerate");
        std::array<std::vector<std::vector<FqElem>>, 4> words;
        for (int i = 0; i < 4; ++i) {
            comp_[static_cast<std::size_t>(i)].generator_matrix().for_each_word(
                [&](const std::vector<FqElem>& w) { words[static_cast<std::size_t>(i)].push_back(w); });
        }
        RVector w(*ctx_, n_);
        for (const auto& a : words[0])
            for (const auto& b : words[1])
                for (const auto& c : words[2])
                    for (const auto& d : words[3]) {
                        for (std::size_t j = 0; j < n_; ++j)
                            w[j] = RElem::from_eta(a[j], b[j], c[j], d[j]);
                        fn(w);
                    }
    }

    /// Minimum Lee weight: exhaustive when |C| <= cap, otherwise the sampled
    /// Hamming bound of the Gray image (the two agree by the Gray isometry).
    DistanceResult min_lee_weight(std::uint64_t cap = kDefaultCap) const {
        std::uint64_t total;
        if (cardinality_u64(total) && total <= cap) {
            if (dimension() == 0) return {std::nullopt, true};
            std::size_t best = 4 * n_ + 1;
            for_each_word(
                [&](const RVector& w) {
                    int wt = lee_weight(w);
                    if (wt > 0 && static_cast<std::size_t>(wt) < best)
                        best = static_cast<std::size_t>(wt);
                },
                cap);
            return {best, true};
        }
        return gray_image().min_distance(cap);
    }

   private:
    const FieldCtx* ctx_;
    std::size_t n_;
    std::vector<SkewCyclicCodeFq> comp_;
    SkewPoly<RElem> g_;
};

/// Sorted encoded Gray images of all words of C (the "direct Phi-image" route,
/// independent of the block generator matrix).
inline std::vector<std::uint64_t> gray_word_set(const SkewCyclicCodeR& c,
                                                std::uint64_t cap = kDefaultCap) {
    std::vector<std::uint64_t> out;
    c.for_each_word([&](const RVector& w) { out.push_back(encode_word(gray(w))); }, cap);
    std::sort(out.begin(), out.end());
    return out;
}

/// Word-set equality between the Gray image of C and the nested Plotkin sum
/// (C1 +P C2) +P (C3 +P C4) of the component codes.
inline bool gray_plotkin_identity_check(const SkewCyclicCodeR& c, std::uint64_t cap = kDefaultCap) {
    std::uint64_t total;
    if (!c.cardinality_u64(total) || total > cap)
        raise(Errc::CapExceeded, "code too large for the identity check");
    LinearCode nested = plotkin_sum(
        plotkin_sum(c.component(1).generator_matrix(), c.component(2).generator_matrix()),
        plotkin_sum(c.component(3).generator_matrix(), c.component(4).generator_matrix()));
    return word_set(c.gray_image(), cap) == word_set(nested, cap);
}

}  // namespace skewcodes
