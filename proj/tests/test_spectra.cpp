#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "msl/constants.hpp"
#include "msl/spectra.hpp"

using namespace msl;

namespace {

BiInfiniteSequence random_sequence(std::mt19937& rng) {
    auto word = [&](size_t lo, size_t hi) {
        FiniteWord w;
        size_t n = lo + rng() % (hi - lo + 1);
        for (size_t i = 0; i < n; ++i) w.digits.push_back(1 + rng() % 2);
        return w;
    };
    BiInfiniteSequence s;
    s.left = OneSidedWord(word(0, 3), word(1, 4));
    s.core = word(1, 5);
    s.right = OneSidedWord(word(0, 3), word(1, 4));
    return s;
}

}  // namespace

TEST_CASE("lambda of the all-twos sequence") {
    BiInfiniteSequence s = periodic_sequence(FiniteWord({2}));
    SurdSum expect(QuadraticSurd(0, 2, 2, 1));  // 2 sqrt 2
    for (long i : {-3L, 0L, 5L}) CHECK(surd_compare(lambda_at(s, i).value, expect) == Ordering::Equal);
}

TEST_CASE("lambda at the origin of the defining sequences") {
    CHECK(lambda_at(rho_sequence(), 0).decimal(14) == "3.11812017815984");
    CHECK(lambda_at(freiman_sequence(), 0).decimal(14) == "3.11812017815993");
    // writing the same sequence with the boundary one digit to the right
    // shifts the distinguished position to -1
    BiInfiniteSequence alt = parse_sequence(
        "over(1 2_2 1_2 2_4) ; 1 2_2 1_2 2_4 1 2_2 1_2 2_2 1_2 ; over(2_3 1_3)");
    CHECK(surd_compare(lambda_at(alt, -1).value, f_value()) == Ordering::Equal);
    CHECK(markov_value(alt).certificate.attaining_position == -1);
}

TEST_CASE("markov value of purely periodic sequences") {
    MarkovResult r = markov_value(periodic_sequence(FiniteWord({1})));
    CHECK(surd_compare(r.value.value, SurdSum(QuadraticSurd(0, 1, 5, 1))) == Ordering::Equal);
    CHECK(!r.certificate.attained_in_limit);
    CHECK(r.certificate.attaining_position == 0);  // tie-break at smallest |i|
    CHECK(replay_certificate(periodic_sequence(FiniteWord({1})), r));

    // m(ov(w)) equals l(ov(w)) for purely periodic words
    std::mt19937 rng(5);
    for (int iter = 0; iter < 15; ++iter) {
        FiniteWord w;
        size_t n = 1 + rng() % 5;
        for (size_t i = 0; i < n; ++i) w.digits.push_back(1 + rng() % 2);
        MarkovResult m = markov_value(periodic_sequence(w));
        LagrangeResult l = lagrange_value(w);
        CHECK(surd_compare(m.value.value, l.value.value) == Ordering::Equal);
    }
}

TEST_CASE("markov value of the defining sequence of f") {
    MarkovResult r = markov_value(rho_sequence());
    CHECK(r.certificate.attaining_position == 0);
    CHECK(!r.certificate.attained_in_limit);
    CHECK(surd_compare(r.value.value, f_value()) == Ordering::Equal);
    CHECK(replay_certificate(rho_sequence(), r));

    // tampered certificates must not replay
    MarkovResult bad = r;
    bad.certificate.attaining_position = 1;
    CHECK(!replay_certificate(rho_sequence(), bad));
    MarkovResult bad2 = r;
    bad2.value.value += SurdSum(Rational(1, 1000000));
    CHECK(!replay_certificate(rho_sequence(), bad2));
}

TEST_CASE("markov value of Freiman's sequence") {
    MarkovResult r = markov_value(freiman_sequence());
    CHECK(r.certificate.attaining_position == 0);
    CHECK(surd_compare(r.value.value, sigma_value()) == Ordering::Equal);
    CHECK(replay_certificate(freiman_sequence(), r));
}

TEST_CASE("interval membership of the family sequence") {
    BiInfiniteSequence b = isolated_family_sequence(parse_compact("2_2 1_2"));
    MarkovResult r = markov_value(b);
    CHECK(r.certificate.attaining_position == 0);
    CHECK((r.value.value - SurdSum(rational_from_decimal("3.118120178159"))).sign() > 0);
    CHECK((SurdSum(rational_from_decimal("3.118120178173")) - r.value.value).sign() > 0);
}

TEST_CASE("lambda family along the left tail of rho") {
    // lambda at -9k stays strictly below lambda_0 for k >= 1
    SurdSum l0 = lambda_at(rho_sequence(), 0).value;
    for (int k = 1; k <= 5; ++k) {
        SurdSum v = lambda_at(rho_sequence(), -9 * k).value;
        CHECK((v - l0).sign() < 0);
    }
    // exact comparison shows the family is NOT monotone in k: it zig-zags
    SurdSum v1 = lambda_at(rho_sequence(), -9).value;
    SurdSum v2 = lambda_at(rho_sequence(), -18).value;
    SurdSum v3 = lambda_at(rho_sequence(), -27).value;
    CHECK((v1 - l0).sign() < 0);
    CHECK((v2 - v1).sign() > 0);
    CHECK((v3 - v2).sign() < 0);
}

TEST_CASE("shift invariance of the markov value") {
    std::mt19937 rng(7);
    for (int iter = 0; iter < 6; ++iter) {
        BiInfiniteSequence s = random_sequence(rng);
        MarkovResult base = markov_value(s);
        for (long k : {-20L, -3L, 1L, 20L}) {
            MarkovResult shifted = markov_value(s.shifted(k));
            CHECK(surd_compare(base.value.value, shifted.value.value) == Ordering::Equal);
        }
    }
}

TEST_CASE("transpose symmetry of lambda") {
    std::mt19937 rng(11);
    for (int iter = 0; iter < 10; ++iter) {
        BiInfiniteSequence s = random_sequence(rng);
        BiInfiniteSequence r = s.reversed();
        for (long i : {-7L, -1L, 0L, 2L, 9L}) {
            CHECK(surd_compare(lambda_at(s, i).value, lambda_at(r, -i).value) == Ordering::Equal);
        }
        MarkovResult ms = markov_value(s), mr = markov_value(r);
        CHECK(surd_compare(ms.value.value, mr.value.value) == Ordering::Equal);
    }
}

TEST_CASE("lagrange values") {
    LagrangeResult two = lagrange_value(FiniteWord({2}));
    CHECK(surd_compare(two.value.value, SurdSum(QuadraticSurd(0, 2, 2, 1))) == Ordering::Equal);

    LagrangeResult c = lagrange_value(parse_compact("2_4 1_2 2_2 1"));
    CHECK(c.value.decimal(14) == "3.11812017814369");
    CHECK(surd_compare(c.value.value, c_inf_value()) == Ordering::Equal);

    CHECK_THROWS(lagrange_value(FiniteWord{}));
    CHECK_THROWS(lagrange_value(FiniteWord({1, 3})));
}

TEST_CASE("markov value attained in the limit") {
    // every finite position stays below the left tail's periodic limit 2 sqrt 3
    BiInfiniteSequence s = parse_sequence("over(1 2) ; 2_2 ; 1 over(2 1_2 2 1 2)");
    MarkovResult r = markov_value(s);
    CHECK(r.certificate.attained_in_limit);
    CHECK(surd_compare(r.value.value, SurdSum(QuadraticSurd(0, 2, 3, 1))) == Ordering::Equal);
    CHECK(replay_certificate(s, r));
    // and no scanned position reaches it
    for (long i = r.certificate.window_lo; i <= r.certificate.window_hi; ++i)
        CHECK((lambda_at(s, i).value - r.value.value).sign() < 0);
}
