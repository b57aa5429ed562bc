#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include <skewcodes/enumeration.hpp>
#include <skewcodes/skew_cyclic.hpp>

using namespace skewcodes;

namespace {

std::vector<FqElem> frow(const FieldCtx& ctx, std::vector<std::uint64_t> vals) {
    std::vector<FqElem> r;
    for (auto v : vals) r.emplace_back(ctx, v);
    return r;
}

// all words of a SkewCyclicCodeR as sorted encoded R-vectors (each entry's
// four eta values flattened), independent of LinearCode machinery
std::vector<std::uint64_t> r_word_set(const SkewCyclicCodeR& c) {
    std::vector<std::uint64_t> out;
    c.for_each_word([&](const RVector& w) {
        std::vector<FqElem> flat;
        for (std::size_t j = 0; j < w.n(); ++j)
            for (int i = 1; i <= 4; ++i) flat.push_back(w[j].eta_coord(i));
        out.push_back(encode_word(flat));
    });
    std::sort(out.begin(), out.end());
    return out;
}

bool rho_closed(const SkewCyclicCodeR& c) {
    bool ok = true;
    c.for_each_word([&](const RVector& w) {
        if (ok && !c.contains(skew_shift(w))) ok = false;
    });
    return ok;
}

}  // namespace

TEST_CASE("component code construction") {
    FieldCtx f9(3, 2);

    auto full = SkewCyclicCodeFq(f9, 5, make_fq_poly(f9, {1}, 1));
    CHECK(full.dimension() == 5);

    auto zero = SkewCyclicCodeFq(f9, 5, x_pow_minus_one<FqElem>(f9, 5, 1));
    CHECK(zero.dimension() == 0);

    auto c = SkewCyclicCodeFq(f9, 5, make_fq_poly(f9, {-1, 1}, 1));
    CHECK(c.dimension() == 4);
    CHECK(c.cofactor() * c.gen() == x_pow_minus_one<FqElem>(f9, 5, 1));

    // rho-closure scan over the generator matrix rows and a few words
    auto lin = c.generator_matrix();
    CHECK(lin.dimension() == 4);
    lin.for_each_word([&](const std::vector<FqElem>& w) {
        // theta-shift by hand: (theta(w4), theta(w0), ..., theta(w3))
        std::vector<FqElem> s(5, FqElem::zero(f9));
        s[0] = frobenius(w[4], 1);
        for (std::size_t i = 0; i + 1 < 5; ++i) s[i + 1] = frobenius(w[i], 1);
        CHECK(c.contains(s));
    });

    CHECK_THROWS_WITH_AS(SkewCyclicCodeFq(f9, 5, make_fq_poly(f9, {1, 2}, 1)),
                         doctest::Contains("NotMonic"), Error);
    CHECK_THROWS_WITH_AS(SkewCyclicCodeFq(f9, 3, make_fq_poly(f9, {0, 0, 1}, 1)),
                         doctest::Contains("NotRightDivisor"), Error);
}

TEST_CASE("generator matrix staircase") {
    FieldCtx f3(3, 1);
    auto c = SkewCyclicCodeFq(f3, 3, make_fq_poly(f3, {2, 1}, 1));
    auto g = c.generator_matrix();
    CHECK(g.dimension() == 2);
    CHECK(g.contains(frow(f3, {2, 1, 0})));
    CHECK(g.contains(frow(f3, {0, 2, 1})));

    auto full = SkewCyclicCodeFq(f3, 3, make_fq_poly(f3, {1}, 1));
    CHECK(full.generator_matrix().dimension() == 3);

    // over F_9, n = 5: the skew oracle finds no quadratic right divisor (only
    // the Frobenius-fixed divisors survive the twist); take the quartic for the
    // skew case and a quadratic in the commutative ring (t = 0) for the rank-3
    // staircase
    FieldCtx f9(3, 2);
    auto divisors = enumerate_right_divisors_fq(f9, 5, 1);
    auto quartic = std::find_if(divisors.begin(), divisors.end(),
                                [](const SkewPoly<FqElem>& d) { return d.degree() == 4; });
    REQUIRE(quartic != divisors.end());
    auto cq = SkewCyclicCodeFq(f9, 5, *quartic);
    auto gq = cq.generator_matrix();
    CHECK(gq.dimension() == 1);
    gq.for_each_word([&](const std::vector<FqElem>& w) { CHECK(cq.contains(w)); });

    auto div0 = enumerate_right_divisors_fq(f9, 5, 0);
    auto quad = std::find_if(div0.begin(), div0.end(),
                             [](const SkewPoly<FqElem>& d) { return d.degree() == 2; });
    REQUIRE(quad != div0.end());
    auto c0 = SkewCyclicCodeFq(f9, 5, *quad);
    auto g0 = c0.generator_matrix();
    CHECK(g0.dimension() == 3);
    g0.for_each_word([&](const std::vector<FqElem>& w) { CHECK(c0.contains(w)); });
}

TEST_CASE("membership by right division agrees with the linear span") {
    FieldCtx f9(3, 2);
    auto divisors = enumerate_right_divisors_fq(f9, 5, 1);
    for (const auto& g : divisors) {
        auto c = SkewCyclicCodeFq(f9, 5, g);
        auto lin = c.generator_matrix();
        // spot-check the full space of length-5 words is too big; sample rows
        // plus their shifts plus random non-members
        std::uint64_t hits = 0;
        lin.for_each_word([&](const std::vector<FqElem>& w) {
            CHECK(c.contains(w));
            ++hits;
        });
        std::uint64_t card = 0;
        CHECK(lin.cardinality_u64(card));
        CHECK(hits == card);
    }
}

TEST_CASE("code over R: construction and cardinality") {
    FieldCtx f3(3, 1);
    auto one = make_fq_poly(f3, {1}, 1);
    auto xm1 = make_fq_poly(f3, {2, 1}, 1);
    auto xnm1 = x_pow_minus_one<FqElem>(f3, 3, 1);

    auto full = SkewCyclicCodeR(f3, 3, {one, one, one, one});
    CHECK(full.dimension() == 12);
    CHECK(full.cardinality_str() == "531441");

    auto zero = SkewCyclicCodeR(f3, 3, {xnm1, xnm1, xnm1, xnm1});
    CHECK(zero.dimension() == 0);
    CHECK(zero.cardinality_str() == "1");

    auto c = SkewCyclicCodeR(f3, 3, {xm1, xm1, xm1, xm1});
    CHECK(c.dimension() == 8);
    std::uint64_t card = 0;
    CHECK(c.cardinality_u64(card));
    CHECK(card == 6561);

    // exhaustive enumeration agrees: 6561 distinct words
    auto words = r_word_set(c);
    CHECK(words.size() == 6561);
    CHECK(std::adjacent_find(words.begin(), words.end()) == words.end());

    // n = 1 sanity: full space q^4, zero code 1
    auto f1 = SkewCyclicCodeR(f3, 1, {one, one, one, one});
    CHECK(f1.cardinality_str() == "81");
    auto xm1n1 = x_pow_minus_one<FqElem>(f3, 1, 1);
    auto z1 = SkewCyclicCodeR(f3, 1, {xm1n1, xm1n1, xm1n1, xm1n1});
    CHECK(z1.cardinality_str() == "1");
}

TEST_CASE("membership in a code over R") {
    FieldCtx f3(3, 1);
    auto xm1 = make_fq_poly(f3, {2, 1}, 1);
    auto c = SkewCyclicCodeR(f3, 3, {xm1, xm1, xm1, xm1});

    RVector zero(f3, 3);
    CHECK(c.contains(zero));

    // the combined generator's coefficient word is a codeword
    RVector gword(f3, 3);
    for (int i = 0; i <= c.combined_generator().degree(); ++i)
        gword[static_cast<std::size_t>(i)] = c.combined_generator().coeff(static_cast<std::size_t>(i));
    CHECK(c.contains(gword));

    // cross-check contains against the exhaustive word list on all 3^12 vectors
    auto words = r_word_set(c);
    std::uint64_t member_count = 0;
    for (std::uint64_t i = 0; i < 531441; ++i) {
        std::uint64_t v = i;
        RVector w(f3, 3);
        std::vector<FqElem> flat;
        for (std::size_t j = 0; j < 3; ++j) {
            std::array<std::uint64_t, 4> e{};
            for (auto& x : e) {
                x = v % 3;
                v /= 3;
            }
            w[j] = RElem::from_eta_values(f3, e);
            for (int k = 1; k <= 4; ++k) flat.push_back(w[j].eta_coord(k));
        }
        bool in = c.contains(w);
        bool listed = std::binary_search(words.begin(), words.end(), encode_word(flat));
        CHECK(in == listed);
        if (in) ++member_count;
    }
    CHECK(member_count == 6561);

    RVector wrong(f3, 2);
    CHECK_THROWS_WITH_AS(c.contains(wrong), doctest::Contains("LengthMismatch"), Error);
}

TEST_CASE("duals over R") {
    FieldCtx f3(3, 1);
    auto one = make_fq_poly(f3, {1}, 1);
    auto xm1 = make_fq_poly(f3, {2, 1}, 1);
    auto xnm1 = x_pow_minus_one<FqElem>(f3, 3, 1);

    auto full = SkewCyclicCodeR(f3, 3, {one, one, one, one});
    CHECK(full.dual().dimension() == 0);
    auto zero = SkewCyclicCodeR(f3, 3, {xnm1, xnm1, xnm1, xnm1});
    CHECK(zero.dual().dimension() == 12);

    auto c = SkewCyclicCodeR(f3, 3, {xm1, xm1, xm1, xm1});
    auto d = c.dual();
    CHECK(d.cardinality_str() == "81");

    // exhaustive orthogonality of all |C| * |C_dual| pairs under the R inner product
    std::vector<RVector> dual_words;
    d.for_each_word([&](const RVector& w) { dual_words.push_back(w); });
    CHECK(dual_words.size() == 81);
    c.for_each_word([&](const RVector& w) {
        for (const auto& h : dual_words) {
            RElem dot = RElem::zero(f3);
            for (std::size_t j = 0; j < 3; ++j) dot = dot + w[j] * h[j];
            CHECK(dot.is_zero());
        }
    });

    // |C| * |C_dual| = q^{4n}
    CHECK(c.dimension() + d.dimension() == 12);

    // the dual is rho-closed (uniform components)
    CHECK(rho_closed(d));

    // dual of dual reproduces the original generators
    auto dd = d.dual();
    for (int i = 1; i <= 4; ++i) CHECK(dd.component(i).gen() == c.component(i).gen());

    // component dual round-trip in a genuinely twisted ring (q = 9, n = 5)
    FieldCtx f9(3, 2);
    for (const auto& g : enumerate_right_divisors_fq(f9, 5, 1)) {
        SkewCyclicCodeFq comp(f9, 5, g);
        auto dual9 = comp.dual();
        CHECK(dual9.dimension() == 5 - comp.dimension());
        CHECK(dual9.dual().gen() == comp.gen());
        // orthogonality between the two generator matrices
        auto gm = comp.generator_matrix(), dm = dual9.generator_matrix();
        for (const auto& a : gm.basis())
            for (const auto& b : dm.basis()) {
                FqElem dot = FqElem::zero(f9);
                for (std::size_t i = 0; i < 5; ++i) dot = dot + a[i] * b[i];
                CHECK(dot.is_zero());
            }
    }

    // component duals match the linear-algebra null space route
    for (int i = 1; i <= 4; ++i) {
        auto lhs = word_set(d.component(i).generator_matrix());
        auto rhs = word_set(c.component(i).generator_matrix().dual());
        CHECK(lhs == rhs);
    }
}

TEST_CASE("gray image block generator matrix") {
    FieldCtx f3(3, 1);
    auto one = make_fq_poly(f3, {1}, 1);
    auto xm1 = make_fq_poly(f3, {2, 1}, 1);

    auto full = SkewCyclicCodeR(f3, 2, {one, one, one, one});
    CHECK(full.gray_image().dimension() == 8);
    CHECK(full.gray_image().n() == 8);

    auto c = SkewCyclicCodeR(f3, 3, {xm1, xm1, xm1, xm1});
    auto img = c.gray_image();
    CHECK(img.n() == 12);
    CHECK(img.dimension() == 8);

    // row space equals the direct Phi image of all 6561 words
    CHECK(word_set(img) == gray_word_set(c));

    // minimum distance of the image equals the minimum Lee weight of C
    auto dimg = img.min_distance();
    auto dlee = c.min_lee_weight();
    REQUIRE(dimg.d.has_value());
    REQUIRE(dlee.d.has_value());
    CHECK(*dimg.d == *dlee.d);
    CHECK(*dimg.d == 2);
}

TEST_CASE("gray/plotkin identity") {
    FieldCtx f3(3, 1);
    auto one = make_fq_poly(f3, {1}, 1);
    auto xm1 = make_fq_poly(f3, {2, 1}, 1);
    auto xnm1 = x_pow_minus_one<FqElem>(f3, 3, 1);

    CHECK(gray_plotkin_identity_check(SkewCyclicCodeR(f3, 2, {one, one, one, one})));
    CHECK(gray_plotkin_identity_check(SkewCyclicCodeR(f3, 3, {xnm1, xnm1, xnm1, xnm1})));
    CHECK(gray_plotkin_identity_check(SkewCyclicCodeR(f3, 3, {xm1, xm1, xm1, xm1})));
    // mixed tuples satisfy it too: the identity is theta-free
    CHECK(gray_plotkin_identity_check(SkewCyclicCodeR(f3, 3, {one, xm1, xnm1, xm1})));

    auto big = SkewCyclicCodeR(f3, 3, {one, one, one, one});
    CHECK_THROWS_WITH_AS(gray_plotkin_identity_check(big, 1000), doctest::Contains("CapExceeded"),
                         Error);
}

TEST_CASE("stacked eta_i G_i rows generate the code") {
    FieldCtx f3(3, 1);
    auto one = make_fq_poly(f3, {1}, 1);
    auto xm1 = make_fq_poly(f3, {2, 1}, 1);
    auto xsq = make_fq_poly(f3, {1, 1, 1}, 1);  // (x-1)^2
    auto c = SkewCyclicCodeR(f3, 3, {one, xm1, xsq, xm1});

    // rows eta_i * (row of G_i), F_q-spanned, must enumerate exactly the word set
    std::vector<RVector> rows;
    for (int i = 1; i <= 4; ++i) {
        LinearCode gi = c.component(i).generator_matrix();
        for (const auto& r : gi.basis()) {
            RVector v(f3, 3);
            for (std::size_t j = 0; j < 3; ++j) v[j] = r[j] * RElem::eta(f3, i);
            rows.push_back(v);
        }
    }

    std::set<std::uint64_t> span;
    std::size_t k = rows.size();
    std::vector<std::uint64_t> digits(k, 0);
    while (true) {
        RVector w(f3, 3);
        for (std::size_t i = 0; i < k; ++i) {
            if (digits[i] == 0) continue;
            FqElem s(f3, digits[i]);
            for (std::size_t j = 0; j < 3; ++j) w[j] = w[j] + s * rows[i][j];
        }
        std::vector<FqElem> flat;
        for (std::size_t j = 0; j < 3; ++j)
            for (int i = 1; i <= 4; ++i) flat.push_back(w[j].eta_coord(i));
        span.insert(encode_word(flat));
        std::size_t idx = 0;
        while (idx < k && digits[idx] == 2) digits[idx++] = 0;
        if (idx == k) break;
        ++digits[idx];
    }
    auto words = r_word_set(c);
    CHECK(span.size() == words.size());
    CHECK(std::equal(span.begin(), span.end(), words.begin()));
}

TEST_CASE("rho closure holds exactly when g3 = g4 (theta swaps eta3, eta4)") {
    FieldCtx f3(3, 1);
    std::array<SkewPoly<FqElem>, 4> divisors{
        make_fq_poly(f3, {1}, 1), make_fq_poly(f3, {2, 1}, 1), make_fq_poly(f3, {1, 1, 1}, 1),
        x_pow_minus_one<FqElem>(f3, 3, 1)};

    for (const auto& g1 : divisors)
        for (const auto& g2 : divisors)
            for (const auto& g3 : divisors)
                for (const auto& g4 : divisors) {
                    auto c = SkewCyclicCodeR(f3, 3, {g1, g2, g3, g4});
                    CHECK(rho_closed(c) == (g3 == g4));
                }

    // converse direction of the decomposition criterion: a word set assembled
    // from a component that is not shift-closed fails rho-closure
    auto one = make_fq_poly(f3, {1}, 1);
    LinearCode bad = LinearCode::from_rows(f3, 3, {frow(f3, {1, 0, 0})});  // span{e_0}: not cyclic
    auto ok_code = SkewCyclicCodeR(f3, 3, {one, one, one, one});
    bool closed = true;
    bad.for_each_word([&](const std::vector<FqElem>& a) {
        // assemble eta1 a + 0 + 0 + 0 and shift it
        RVector w(f3, 3);
        for (std::size_t j = 0; j < 3; ++j)
            w[j] = RElem::from_eta(a[j], FqElem::zero(f3), FqElem::zero(f3), FqElem::zero(f3));
        RVector s = skew_shift(w);
        // membership in the assembled set: eta1 component must lie in bad
        std::vector<FqElem> comp;
        for (std::size_t j = 0; j < 3; ++j) comp.push_back(s[j].eta_coord(1));
        if (!bad.contains(comp)) closed = false;
    });
    CHECK_FALSE(closed);
    (void)ok_code;
}

TEST_CASE("combined generator diagnostics") {
    FieldCtx f3(3, 1);
    auto one = make_fq_poly(f3, {1}, 1);
    auto xm1 = make_fq_poly(f3, {2, 1}, 1);

    // uniform degrees: the division runs and succeeds for g3 = g4
    auto uniform = SkewCyclicCodeR(f3, 3, {xm1, xm1, xm1, xm1});
    auto check = uniform.combined_generator_divides();
    REQUIRE(check.has_value());
    CHECK(*check);

    // mixed degrees: not checkable by right division (non-unit lead)
    auto mixed = SkewCyclicCodeR(f3, 3, {one, one, one, xm1});
    CHECK_FALSE(mixed.combined_generator_divides().has_value());

    // uniform degrees but g3 != g4: the division runs and the identity fails
    // (x^2 - 1 = (x-1)(x+1) over F_3 gives two distinct degree-1 divisors)
    auto xp1 = make_fq_poly(f3, {1, 1}, 1);
    auto same = SkewCyclicCodeR(f3, 2, {xp1, xm1, xm1, xm1});
    auto c34 = SkewCyclicCodeR(f3, 2, {xm1, xm1, xm1, xp1});
    auto r_same = same.combined_generator_divides();
    auto r_mixed = c34.combined_generator_divides();
    REQUIRE(r_same.has_value());
    REQUIRE(r_mixed.has_value());
    CHECK(*r_same);        // g3 = g4: mixing g1/g2 is harmless (eta1, eta2 are theta-fixed)
    CHECK_FALSE(*r_mixed); // g3 != g4: theta couples the components
}
