#include <doctest.h>

#include "lrc/f4family.hpp"

using namespace lrc;
using f4family::Family;
using f4family::Op;
using analysis::Verdict;

TEST_CASE("f4family: operator tables match the printed values") {
    CHECK(f4family::apply(Op::Alpha, 0b01) == 0b10);
    CHECK(f4family::apply(Op::Alpha, 0b11) == 0b01);
    CHECK(f4family::apply(Op::Alpha2, 0b10) == 0b01);
    CHECK(f4family::apply(Op::Beta, 0b00) == 0b01);
    CHECK(f4family::apply(Op::Beta2, 0b10) == 0b00);
    CHECK(f4family::apply(Op::Beta3, 0b01) == 0b00);
    CHECK(f4family::apply(Op::Beta3, 0b11) == 0b10);
    for (std::uint8_t x = 0; x < 4; ++x) {
        CHECK(f4family::apply(Op::One, x) == x);
        CHECK(f4family::apply(Op::Zero, x) == 0);
    }
}

TEST_CASE("f4family: composition identities") {
    for (std::uint8_t x = 0; x < 4; ++x) {
        CHECK(f4family::apply(Op::Alpha2, x) ==
              f4family::apply(Op::Alpha, f4family::apply(Op::Alpha, x)));
        CHECK(f4family::apply(Op::Beta2, x) ==
              f4family::apply(Op::Beta, f4family::apply(Op::Beta, x)));
        CHECK(f4family::apply(Op::Beta3, x) ==
              f4family::apply(Op::Beta, f4family::apply(Op::Beta2, x)));
    }
}

TEST_CASE("f4family: 1 + alpha + alpha^2 vanishes pointwise; beta powers too") {
    for (std::uint8_t x = 0; x < 4; ++x) {
        CHECK((f4family::apply(Op::One, x) ^ f4family::apply(Op::Alpha, x) ^
               f4family::apply(Op::Alpha2, x)) == 0);
        CHECK((f4family::apply(Op::One, x) ^ f4family::apply(Op::Beta, x) ^
               f4family::apply(Op::Beta2, x) ^ f4family::apply(Op::Beta3, x)) == 0);
    }
}

TEST_CASE("f4family: beta is not additive") {
    // beta(x+y) != beta(x) + beta(y) for some pair (beta(00) = 01 alone
    // breaks additivity). Note beta IS affine: beta(x+y) + beta(00) equals
    // beta(x) + beta(y) on all 16 pairs, which the second loop documents.
    bool witness = false;
    for (std::uint8_t x = 0; x < 4; ++x)
        for (std::uint8_t y = 0; y < 4; ++y)
            witness = witness || f4family::apply(Op::Beta, x ^ y) !=
                                     (f4family::apply(Op::Beta, x) ^
                                      f4family::apply(Op::Beta, y));
    CHECK(witness);
    for (std::uint8_t x = 0; x < 4; ++x)
        for (std::uint8_t y = 0; y < 4; ++y)
            CHECK((f4family::apply(Op::Beta, x ^ y) ^ f4family::apply(Op::Beta, 0)) ==
                  (f4family::apply(Op::Beta, x) ^ f4family::apply(Op::Beta, y)));
    // while alpha is additive everywhere
    for (std::uint8_t x = 0; x < 4; ++x)
        for (std::uint8_t y = 0; y < 4; ++y)
            CHECK(f4family::apply(Op::Alpha, x ^ y) ==
                  (f4family::apply(Op::Alpha, x) ^ f4family::apply(Op::Alpha, y)));
}

TEST_CASE("f4family: block layout of the three families") {
    const auto f1 = f4family::family_matrix(Family::F1_33, 1);
    CHECK(f1.k == 4);
    CHECK(f1.n == 7);
    // last row ends (1, alpha, alpha^2)
    CHECK(f1.at(3, 4) == Op::One);
    CHECK(f1.at(3, 5) == Op::Alpha);
    CHECK(f1.at(3, 6) == Op::Alpha2);
    CHECK(f1.at(3, 0) == Op::Zero);

    const auto f2 = f4family::family_matrix(Family::F2_33, 1);
    CHECK(f2.k == 5);
    CHECK(f2.n == 8);
    CHECK(f2.at(3, 4) == Op::One);
    CHECK(f2.at(3, 5) == Op::Zero);
    CHECK(f2.at(3, 6) == Op::Beta);
    CHECK(f2.at(3, 7) == Op::Beta2);
    CHECK(f2.at(4, 4) == Op::Zero);
    CHECK(f2.at(4, 5) == Op::One);
    CHECK(f2.at(4, 6) == Op::Beta2);
    CHECK(f2.at(4, 7) == Op::Beta);

    const auto f3 = f4family::family_matrix(Family::F1_34, 2);
    CHECK(f3.k == 7);
    CHECK(f3.n == 12);
    // two diagonal A-blocks
    CHECK(f3.at(0, 0) == Op::One);
    CHECK(f3.at(0, 3) == Op::One);
    CHECK(f3.at(3, 4) == Op::One);
    CHECK(f3.at(3, 7) == Op::One);
    CHECK(f3.at(0, 4) == Op::Zero);
    // final row (1, beta, beta^2, beta^3)
    CHECK(f3.at(6, 8) == Op::One);
    CHECK(f3.at(6, 9) == Op::Beta);
    CHECK(f3.at(6, 10) == Op::Beta2);
    CHECK(f3.at(6, 11) == Op::Beta3);

    CHECK_THROWS_AS(f4family::family_matrix(Family::F1_33, 0), std::invalid_argument);
}

TEST_CASE("f4family: F1_33 encode is systematic") {
    const auto m = f4family::family_matrix(Family::F1_33, 1);
    // all-zero message maps to the all-zero word (no beta operators)
    CHECK(f4family::encode(m, {0, 0, 0, 0}) == std::vector<std::uint8_t>(7, 0));
    for (std::uint8_t a = 0; a < 4; ++a) {
        const auto y = f4family::encode(m, {a, 1, 2, 3});
        CHECK(y[0] == a);
        CHECK(y[1] == 1);
        CHECK(y[2] == 2);
        CHECK(y[4] == 3);  // y_{4i+1} = x_{3i+1}
    }
    CHECK_THROWS_AS(f4family::encode(m, {0, 0}), std::invalid_argument);
}

TEST_CASE("f4family: F1_34 zero message exposes the nonlinearity") {
    const auto m = f4family::family_matrix(Family::F1_34, 1);
    const auto y = f4family::encode(m, {0, 0, 0, 0});
    CHECK(y == std::vector<std::uint8_t>{0, 0, 0, 0, 0, 1, 2, 3});
    CHECK(f4family::f4_str(y[5]) == "01");
    CHECK(f4family::f4_str(y[6]) == "10");
    CHECK(f4family::f4_str(y[7]) == "11");
}

TEST_CASE("f4family: codebooks are injective with 4^k words") {
    CHECK(f4family::codebook(f4family::family_matrix(Family::F1_33, 1)).size() == 256);
    CHECK(f4family::codebook(f4family::family_matrix(Family::F2_33, 1)).size() == 1024);
    CHECK(f4family::codebook(f4family::family_matrix(Family::F1_34, 1)).size() == 256);
}

TEST_CASE("f4family: direct distance wrapper") {
    CHECK(f4family::min_distance_bruteforce(f4family::family_matrix(Family::F1_33, 1)) == 3);
    CHECK(f4family::min_distance_bruteforce(f4family::family_matrix(Family::F2_33, 1)) == 2);
}

TEST_CASE("f4family: F1_33 parity sums vanish over the whole codebook") {
    for (int i : {1, 2}) {
        const auto m = f4family::family_matrix(Family::F1_33, i);
        const auto book = f4family::codebook(m);
        std::uint64_t bad = 0;
        for (const auto w : book) {
            for (int j = 0; j < i; ++j) {
                std::uint8_t sum = 0;
                for (int c = 4 * j; c < 4 * j + 4; ++c)
                    sum ^= analysis::packed_symbol(w, c);
                bad += sum != 0;
            }
            std::uint8_t tail = 0;
            for (int c = 4 * i; c < 4 * i + 3; ++c) tail ^= analysis::packed_symbol(w, c);
            bad += tail != 0;
        }
        CHECK(bad == 0);
    }
}

TEST_CASE("f4family: F1_33 verified exhaustively at i = 1 and 2") {
    const auto r1 = f4family::verify_family(Family::F1_33, 1);
    CHECK(r1.n == 7);
    CHECK(r1.k == 4);
    CHECK(r1.d == 3);
    CHECK(r1.r_measured == 3);
    CHECK(r1.locality_ok);
    CHECK(r1.dopt == 3);
    CHECK(r1.verdict == Verdict::Optimal);

    const auto r2 = f4family::verify_family(Family::F1_33, 2);
    CHECK(r2.n == 11);
    CHECK(r2.k == 7);
    CHECK(r2.d == 3);
    CHECK(r2.r_measured == 3);
    CHECK(r2.verdict == Verdict::Optimal);
}

TEST_CASE("f4family: F2_33 as printed misses the claimed parameters") {
    // the claim is (8,5,3,3); the printed matrix measures d = 2 and its
    // last-block systematic coordinates need 5 reads, so the locality-3
    // claim fails and the report is graded invalid
    const auto r = f4family::verify_family(Family::F2_33, 1);
    CHECK(r.n == 8);
    CHECK(r.k == 5);
    CHECK(r.d == 2);
    CHECK(r.r_measured == 5);
    CHECK_FALSE(r.locality_ok);
    CHECK(r.verdict == Verdict::Invalid);

    // distance witness: messages (0,0,0,0,0) and (0,0,0,2,2)
    const auto m = f4family::family_matrix(Family::F2_33, 1);
    const auto a = f4family::encode(m, {0, 0, 0, 0, 0});
    const auto b = f4family::encode(m, {0, 0, 0, 2, 2});
    int diff = 0;
    for (int c = 0; c < 8; ++c) diff += a[c] != b[c];
    CHECK(diff == 2);
}

TEST_CASE("f4family: F1_34 as printed beats its claimed distance") {
    // claim (8,4,3,4); measured d = 4 with minimal locality 3 (every
    // block column satisfies a sum identity), i.e. almost-optimal against
    // d_opt(8,4,4) = 5
    const auto r = f4family::verify_family(Family::F1_34, 1);
    CHECK(r.n == 8);
    CHECK(r.k == 4);
    CHECK(r.d == 4);
    CHECK(r.r_measured == 3);
    CHECK(r.locality_ok);  // locality <= 4 certainly holds
    CHECK(r.dopt == 5);
    CHECK(r.verdict == Verdict::AlmostOptimal);
}

TEST_CASE("f4family: bucketed pairwise agrees with the full scan") {
    const auto book = f4family::codebook(f4family::family_matrix(Family::F1_33, 1));
    analysis::Budget full;
    analysis::Budget bucketed;
    bucketed.max_pair_ops = 30000;  // under the 32640 quadratic pairs: bucket path
    CHECK(analysis::min_pairwise_distance(book, 7, full) == 3);
    CHECK(analysis::min_pairwise_distance(book, 7, bucketed) == 3);

    const auto book2 = f4family::codebook(f4family::family_matrix(Family::F2_33, 1));
    analysis::Budget bucketed2;
    bucketed2.max_pair_ops = 300000;  // quadratic would need 523776 pairs
    CHECK(analysis::min_pairwise_distance(book2, 8, full) ==
          analysis::min_pairwise_distance(book2, 8, bucketed2));
}

TEST_CASE("f4family: names round-trip") {
    for (Family f : {Family::F1_33, Family::F2_33, Family::F1_34, Family::Custom})
        CHECK(f4family::family_from_name(f4family::family_name(f)) == f);
    for (int i = 0; i < 7; ++i) {
        const Op op = static_cast<Op>(i);
        CHECK(f4family::op_from_name(f4family::op_name(op)) == op);
    }
    CHECK_FALSE(f4family::op_from_name("gamma").has_value());
}
