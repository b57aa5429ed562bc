#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "util.hpp"

namespace skewcodes {

constexpr std::uint64_t kDefaultCap = 1ull << 24;  // exhaustive-enumeration cap (word count)

namespace linalg {

/// In-place reduced row echelon form; returns the pivot columns. Zero rows are
/// removed.
inline std::vector<std::size_t> rref(std::vector<std::vector<FqElem>>& rows) {
    std::vector<std::size_t> pivots;
    if (rows.empty()) return pivots;
    std::size_t n = rows[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
        std::size_t sel = r;
        while (sel < rows.size() && rows[sel][c].is_zero()) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[r], rows[sel]);
        FqElem s = rows[r][c].inv();
        for (std::size_t j = c; j < n; ++j) rows[r][j] = s * rows[r][j];
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c].is_zero()) continue;
            FqElem f = rows[i][c];
            for (std::size_t j = c; j < n; ++j) rows[i][j] = rows[i][j] - f * rows[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    rows.resize(r);
    return pivots;
}

}  // namespace linalg

struct DistanceResult {
    std::optional<std::size_t> d;  // empty for the zero code (no nonzero word)
    bool exact = true;
};

/// A linear code over F_q given by spanning rows; the reduced form and rank
/// are computed at construction. |C| = q^k with k the row rank.
class LinearCode {
   public:
    static LinearCode from_rows(const FieldCtx& ctx, std::size_t n,
                                std::vector<std::vector<FqElem>> rows) {
        for (const auto& r : rows)
            if (r.size() != n) raise(Errc::LengthMismatch, "generator row length differs from n");
        LinearCode c;
        c.ctx_ = &ctx;
        c.n_ = n;
        c.basis_ = std::move(rows);
        c.pivots_ = linalg::rref(c.basis_);
        return c;
    }

    const FieldCtx& ctx() const { return *ctx_; }
    std::size_t n() const { return n_; }
    std::size_t dimension() const { return basis_.size(); }
    const std::vector<std::vector<FqElem>>& basis() const { return basis_; }

    bool cardinality_u64(std::uint64_t& out) const { return pow_u64(ctx_->q(), dimension(), out); }
    std::string cardinality_str() const { return pow_decimal(ctx_->q(), dimension()); }

    bool contains(std::vector<FqElem> w) const {
        if (w.size() != n_) raise(Errc::LengthMismatch, "word length differs from n");
        for (std::size_t r = 0; r < basis_.size(); ++r) {
            FqElem f = w[pivots_[r]];
            if (f.is_zero()) continue;
            for (std::size_t j = 0; j < n_; ++j) w[j] = w[j] - f * basis_[r][j];
        }
        for (const auto& c : w)
            if (!c.is_zero()) return false;
        return true;
    }

    /// Null space of the generator matrix: the dual code, of dimension n - k.
    LinearCode dual() const {
        std::vector<std::vector<FqElem>> out;
        std::vector<bool> is_pivot(n_, false);
        for (std::size_t p : pivots_) is_pivot[p] = true;
        for (std::size_t f = 0; f < n_; ++f) {
            if (is_pivot[f]) continue;
            std::vector<FqElem> v(n_, FqElem::zero(*ctx_));
            v[f] = FqElem::one(*ctx_);
            for (std::size_t r = 0; r < basis_.size(); ++r) v[pivots_[r]] = -basis_[r][f];
            out.push_back(std::move(v));
        }
        return from_rows(*ctx_, n_, std::move(out));
    }

    /// Visit every codeword exactly once (q^k words, including zero), via an
    /// odometer over encoded scalar values with incremental word updates.
    void for_each_word(const std::function<void(const std::vector<FqElem>&)>& fn) const {
        std::vector<FqElem> word(n_, FqElem::zero(*ctx_));
        std::size_t k = basis_.size();
        if (k == 0) {
            fn(word);
            return;
        }
        std::uint64_t q = ctx_->q();
        std::vector<std::uint64_t> digit(k, 0);
        std::uint64_t total;
        if (!pow_u64(q, k, total)) raise(Errc::CapExceeded, "code too large to enumerate");
        for (std::uint64_t cnt = 0;; ++cnt) {
            fn(word);
            if (cnt + 1 == total) break;
            std::size_t i = 0;
            while (digit[i] + 1 == q) {
                add_scaled(word, basis_[i], -FqElem(*ctx_, q - 1));  // scalar q-1 -> 0
                digit[i] = 0;
                ++i;
            }
            add_scaled(word, basis_[i], FqElem(*ctx_, digit[i] + 1) - FqElem(*ctx_, digit[i]));
            ++digit[i];
        }
    }

    /// Exhaustive minimum Hamming distance when q^k <= cap; otherwise the best
    /// upper bound from random information-set sampling (exact = false). The
    /// zero code reports an empty distance with exact = true.
    DistanceResult min_distance(std::uint64_t cap = kDefaultCap) const {
        if (basis_.empty()) return {std::nullopt, true};
        std::uint64_t total;
        if (pow_u64(ctx_->q(), basis_.size(), total) && total <= cap) {
            std::size_t best = n_ + 1;
            for_each_word([&](const std::vector<FqElem>& w) {
                int wt = hamming_weight(w);
                if (wt > 0 && static_cast<std::size_t>(wt) < best) best = static_cast<std::size_t>(wt);
            });
            return {best, true};
        }
        return {sampled_min_weight(), false};
    }

   private:
    static void add_scaled(std::vector<FqElem>& w, const std::vector<FqElem>& row, const FqElem& s) {
        if (s.is_zero()) return;
        for (std::size_t j = 0; j < w.size(); ++j) w[j] = w[j] + s * row[j];
    }

    std::size_t sampled_min_weight(int trials = 200) const {
        std::mt19937_64 rng(0x5eedc0de);
        std::size_t best = n_;
        for (const auto& r : basis_)
            best = std::min(best, static_cast<std::size_t>(hamming_weight(r)));
        std::vector<std::size_t> perm(n_);
        std::iota(perm.begin(), perm.end(), 0);
        for (int tcase = 0; tcase < trials; ++tcase) {
            std::shuffle(perm.begin(), perm.end(), rng);
            std::vector<std::vector<FqElem>> rows;
            rows.reserve(basis_.size());
            for (const auto& r : basis_) {
                std::vector<FqElem> pr(n_, FqElem::zero(*ctx_));
                for (std::size_t j = 0; j < n_; ++j) pr[j] = r[perm[j]];
                rows.push_back(std::move(pr));
            }
            linalg::rref(rows);
            for (const auto& r : rows) {
                int wt = hamming_weight(r);
                if (wt > 0) best = std::min(best, static_cast<std::size_t>(wt));
            }
        }
        return best;
    }

    const FieldCtx* ctx_ = nullptr;
    std::size_t n_ = 0;
    std::vector<std::vector<FqElem>> basis_;  // reduced row echelon, k rows
    std::vector<std::size_t> pivots_;
};

/// The (u | u+v) construction: {(u | u+v) : u in C, v in D}. Length doubles,
/// dimension adds, and the minimum distance is min(2 d_C, d_D).
inline LinearCode plotkin_sum(const LinearCode& c, const LinearCode& d) {
    if (c.n() != d.n() || !c.ctx().same_field(d.ctx()))
        raise(Errc::LengthMismatch, "Plotkin sum needs equal lengths over one field");
    std::size_t n = c.n();
    const FieldCtx& ctx = c.ctx();
    std::vector<std::vector<FqElem>> rows;
    for (const auto& r : c.basis()) {
        std::vector<FqElem> row(2 * n, FqElem::zero(ctx));
        for (std::size_t j = 0; j < n; ++j) row[j] = row[n + j] = r[j];
        rows.push_back(std::move(row));
    }
    for (const auto& r : d.basis()) {
        std::vector<FqElem> row(2 * n, FqElem::zero(ctx));
        for (std::size_t j = 0; j < n; ++j) row[n + j] = r[j];
        rows.push_back(std::move(row));
    }
    return LinearCode::from_rows(ctx, 2 * n, std::move(rows));
}

/// Sorted encoded word set; the workhorse of exact set-equality tests.
inline std::vector<std::uint64_t> word_set(const LinearCode& c, std::uint64_t cap = kDefaultCap) {
    std::uint64_t total;
    if (!c.cardinality_u64(total) || total > cap)
        raise(Errc::CapExceeded, "code too large for word-set enumeration");
    std::vector<std::uint64_t> out;
    out.reserve(total);
    c.for_each_word([&](const std::vector<FqElem>& w) { out.push_back(encode_word(w)); });
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace skewcodes
