#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include <skewcodes/ring.hpp>

using namespace skewcodes;

TEST_CASE("standard basis to eta basis and back") {
    FieldCtx f3(3, 1);
    auto z = FqElem::zero(f3), o = FqElem::one(f3);

    CHECK(RElem::from_std(z, o, z, z) == RElem::from_eta_values(f3, {0, 1, 1, 0}));  // u
    CHECK(RElem::from_std(o, z, z, z) == RElem::from_eta_values(f3, {1, 1, 1, 1}));  // 1
    CHECK(RElem::from_std(z, z, z, o) == RElem::from_eta_values(f3, {0, 1, 0, 0}));  // uv

    for (auto q : {std::uint64_t{3}, std::uint64_t{9}}) {
        FieldCtx f(3, q == 3 ? 1 : 2);
        for (std::uint64_t b0 = 0; b0 < f.q(); ++b0)
            for (std::uint64_t b1 = 0; b1 < f.q(); ++b1)
                for (std::uint64_t b2 = 0; b2 < f.q(); ++b2)
                    for (std::uint64_t b3 = 0; b3 < f.q(); ++b3) {
                        RElem r = RElem::from_std_values(f, {b0, b1, b2, b3});
                        auto s = r.std_coords();
                        CHECK(s[0].value() == b0);
                        CHECK(s[1].value() == b1);
                        CHECK(s[2].value() == b2);
                        CHECK(s[3].value() == b3);
                    }
    }
}

TEST_CASE("ring arithmetic in the eta basis") {
    FieldCtx f3(3, 1);
    CHECK(RElem::u(f3) * RElem::v(f3) == RElem::uv(f3));
    CHECK(RElem::eta(f3, 3) * RElem::eta(f3, 4) == RElem::zero(f3));

    // eta_i^2 = eta_i, eta_i eta_j = 0, sum eta_i = 1
    RElem sum = RElem::zero(f3);
    for (int i = 1; i <= 4; ++i) {
        CHECK(RElem::eta(f3, i) * RElem::eta(f3, i) == RElem::eta(f3, i));
        for (int j = 1; j <= 4; ++j)
            if (i != j) CHECK(RElem::eta(f3, i) * RElem::eta(f3, j) == RElem::zero(f3));
        sum = sum + RElem::eta(f3, i);
    }
    CHECK(sum == RElem::one(f3));

    // u, v idempotent and commuting: follows from the defining relations
    CHECK(RElem::u(f3) * RElem::u(f3) == RElem::u(f3));
    CHECK(RElem::v(f3) * RElem::v(f3) == RElem::v(f3));

    for (std::uint64_t i = 0; i < 81; ++i) {
        RElem x = RElem::from_eta_values(f3, {i % 3, (i / 3) % 3, (i / 9) % 3, (i / 27) % 3});
        CHECK(x * RElem::one(f3) == x);
        CHECK(x + RElem::zero(f3) == x);
    }
}

TEST_CASE("theta on R") {
    FieldCtx f3(3, 1);
    CHECK(theta(RElem::u(f3)) == RElem::v(f3));
    CHECK(theta(RElem::v(f3)) == RElem::u(f3));
    CHECK(theta(RElem::uv(f3)) == RElem::uv(f3));

    FieldCtx f9(3, 2);
    FqElem w(f9, 3), z9 = FqElem::zero(f9);
    RElem weta1 = RElem::from_eta(w, z9, z9, z9);
    RElem expect = RElem::from_eta(FqElem(f9, 6), z9, z9, z9);  // 2w eta1
    CHECK(theta(weta1) == expect);
}

TEST_CASE("theta order: m for even m, 2m for odd m") {
    struct Case {
        int m;
        int order;
    };
    for (auto c : {Case{1, 2}, Case{2, 2}, Case{3, 6}}) {
        FieldCtx f(3, c.m);
        CHECK(theta_order(f) == c.order);
    }

    // iteration check: identity exactly at the claimed order, never before
    for (int m : {1, 2}) {
        FieldCtx f(3, m);
        int ord = theta_order(f);
        for (std::uint64_t i = 0; i < f.q() * f.q() * f.q() * f.q(); ++i) {
            std::uint64_t q = f.q();
            RElem x = RElem::from_eta_values(
                f, {i % q, (i / q) % q, (i / (q * q)) % q, (i / (q * q * q)) % q});
            CHECK(theta_pow(x, ord) == x);
        }
        for (int s = 1; s < ord; ++s) {
            bool moved = false;
            for (std::uint64_t i = 0; i < f.q() * f.q() * f.q() * f.q() && !moved; ++i) {
                std::uint64_t q = f.q();
                RElem x = RElem::from_eta_values(
                    f, {i % q, (i / q) % q, (i / (q * q)) % q, (i / (q * q * q)) % q});
                if (theta_pow(x, s) != x) moved = true;
            }
            CHECK(moved);
        }
    }
}

TEST_CASE("theta is a ring automorphism") {
    FieldCtx f3(3, 1);
    for (std::uint64_t i = 0; i < 81; ++i)
        for (std::uint64_t j = 0; j < 81; ++j) {
            RElem x = RElem::from_eta_values(f3, {i % 3, (i / 3) % 3, (i / 9) % 3, (i / 27) % 3});
            RElem y = RElem::from_eta_values(f3, {j % 3, (j / 3) % 3, (j / 9) % 3, (j / 27) % 3});
            CHECK(theta(x + y) == theta(x) + theta(y));
            CHECK(theta(x * y) == theta(x) * theta(y));
        }

    FieldCtx f9(3, 2);
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::uint64_t> pick(0, 8);
    for (int it = 0; it < 100000; ++it) {
        RElem x = RElem::from_eta_values(f9, {pick(rng), pick(rng), pick(rng), pick(rng)});
        RElem y = RElem::from_eta_values(f9, {pick(rng), pick(rng), pick(rng), pick(rng)});
        CHECK(theta(x + y) == theta(x) + theta(y));
        CHECK(theta(x * y) == theta(x) * theta(y));
    }
}

TEST_CASE("gray map on single elements") {
    FieldCtx f3(3, 1);
    auto img = gray(RElem::u(f3));
    CHECK(img[0].value() == 0);
    CHECK(img[1].value() == 1);
    CHECK(img[2].value() == 1);
    CHECK(img[3].value() == 2);

    auto e1 = gray(RElem::eta(f3, 1));
    for (const auto& c : e1) CHECK(c.value() == 1);
    auto z = gray(RElem::zero(f3));
    for (const auto& c : z) CHECK(c.value() == 0);

    CHECK(lee_weight(RElem::u(f3)) == 3);
    CHECK(lee_weight(RElem::zero(f3)) == 0);
    CHECK(lee_weight(RElem::eta(f3, 2)) == 2);
}

TEST_CASE("gray is F_q-linear and inverts") {
    for (int m : {1, 2}) {
        FieldCtx f(3, m);
        std::uint64_t q = f.q();
        for (std::uint64_t i = 0; i < q * q * q * q; ++i) {
            RElem x = RElem::from_eta_values(
                f, {i % q, (i / q) % q, (i / (q * q)) % q, (i / (q * q * q)) % q});
            CHECK(gray_inverse(gray(x)) == x);
        }
    }

    FieldCtx f3(3, 1);
    for (std::uint64_t l = 0; l < 3; ++l)
        for (std::uint64_t i = 0; i < 81; ++i)
            for (std::uint64_t j = 0; j < 81; ++j) {
                FqElem lam(f3, l);
                RElem x = RElem::from_eta_values(f3, {i % 3, (i / 3) % 3, (i / 9) % 3, (i / 27) % 3});
                RElem y = RElem::from_eta_values(f3, {j % 3, (j / 3) % 3, (j / 9) % 3, (j / 27) % 3});
                auto lhs = gray(lam * x + y);
                auto gx = gray(x), gy = gray(y);
                for (int s = 0; s < 4; ++s)
                    CHECK(lhs[static_cast<std::size_t>(s)] ==
                          lam * gx[static_cast<std::size_t>(s)] + gy[static_cast<std::size_t>(s)]);
            }
}

TEST_CASE("gray isometry: lee distance equals hamming distance of images") {
    FieldCtx f3(3, 1);
    for (std::uint64_t i = 0; i < 81; ++i)
        for (std::uint64_t j = 0; j < 81; ++j) {
            RElem x = RElem::from_eta_values(f3, {i % 3, (i / 3) % 3, (i / 9) % 3, (i / 27) % 3});
            RElem y = RElem::from_eta_values(f3, {j % 3, (j / 3) % 3, (j / 9) % 3, (j / 27) % 3});
            auto gx = gray(x), gy = gray(y);
            int dh = 0;
            for (int s = 0; s < 4; ++s)
                dh += gx[static_cast<std::size_t>(s)] == gy[static_cast<std::size_t>(s)] ? 0 : 1;
            CHECK(lee_distance(x, y) == dh);
        }
}

TEST_CASE("vector gray uses the component-major block layout") {
    FieldCtx f3(3, 1);
    RVector v(f3, 2);
    v[0] = RElem::u(f3);        // gray (0,1,1,2)
    v[1] = RElem::eta(f3, 1);   // gray (1,1,1,1)
    auto img = gray(v);
    std::vector<std::uint64_t> expect{0, 1, 1, 1, 1, 1, 2, 1};
    REQUIRE(img.size() == 8);
    for (std::size_t i = 0; i < 8; ++i) CHECK(img[i].value() == expect[i]);
    CHECK(gray_inverse(img) == v);
    CHECK(lee_weight(v) == 7);

    // vector lee distance is the weight of the difference, and matches the
    // hamming distance of the images entrywise
    RVector w(f3, 2);
    w[0] = RElem::eta(f3, 1);
    CHECK(lee_distance(v, w) == lee_weight(v - w));
    auto gv = gray(v), gw = gray(w);
    int dh = 0;
    for (std::size_t i = 0; i < 8; ++i) dh += gv[i] == gw[i] ? 0 : 1;
    CHECK(lee_distance(v, w) == dh);
}

TEST_CASE("skew shift") {
    FieldCtx f3(3, 1);
    RVector z(f3, 3);
    CHECK(skew_shift(z) == z);

    RVector single(f3, 1);
    single[0] = RElem::u(f3);
    CHECK(skew_shift(single)[0] == RElem::v(f3));

    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::uint64_t> pick(0, 2);
    for (int it = 0; it < 200; ++it) {
        RVector w(f3, 4);
        for (std::size_t i = 0; i < 4; ++i)
            w[i] = RElem::from_eta_values(f3, {pick(rng), pick(rng), pick(rng), pick(rng)});
        RVector s = w;
        for (int k = 0; k < theta_order(f3) * 4; ++k) s = skew_shift(s);
        CHECK(s == w);
    }
}
