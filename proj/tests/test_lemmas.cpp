#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "msl/lemmas.hpp"

using namespace msl;

TEST_CASE("first table: all thirteen bounds exceed their printed thresholds") {
    auto reports = verify_forbidden_table();
    REQUIRE(reports.size() == 13);
    for (const auto& r : reports) CHECK(r.pass);
    // entry 1 is exactly 2 + 2 sqrt3 / 3
    SurdSum e1 = SurdSum(Rational(2)) + SurdSum(QuadraticSurd(0, 2, 3, 3));
    CHECK(surd_compare(reports[0].bound, e1) == Ordering::Equal);
    // leading digits reproduce the published decimals (truncations of the bounds)
    CHECK(reports[3].bound_decimal.substr(0, 6) == "3.1182");
    CHECK(reports[12].bound_decimal.substr(0, 12) == "3.1181201789");
    // entry 9's auxiliary hypothesis tightens the unconditional bound
    {
        auto [word, star] = parse_starred(forbidden_table()[8].text);
        PartialWindow w;
        for (size_t k = 0; k < word.size(); ++k) w[static_cast<long>(k) - star] = word[k];
        SurdSum unconditional = bound_lambda_window(w, 0).lo;
        CHECK((reports[8].bound - unconditional).sign() > 0);
    }
}

TEST_CASE("second table: exact bounds, four entries miss their printed thresholds") {
    auto reports = verify_allowed_table();
    REQUIRE(reports.size() == 7);
    // the three correctly rounded-up rows hold
    CHECK(reports[2].pass);  // (17) < 3.118
    CHECK(reports[3].pass);  // (18) < 3.118
    CHECK(reports[5].pass);  // (20) < 3.118
    // the four truncated thresholds are exceeded by the exact suprema
    CHECK(!reports[0].pass);
    CHECK(reports[0].bound_decimal.substr(0, 6) == "3.0566");
    CHECK(!reports[1].pass);
    CHECK(reports[1].bound_decimal.substr(0, 6) == "3.0958");
    CHECK(!reports[4].pass);
    CHECK(reports[4].bound_decimal.substr(0, 12) == "3.1181176554");
    CHECK(!reports[6].pass);
    CHECK(reports[6].bound_decimal.substr(0, 9) == "3.1180133");
    // every supremum does stay below the first table's smallest threshold
    for (const auto& r : reports)
        CHECK((r.bound - SurdSum(rational_from_decimal("3.1181201786"))).sign() < 0);
}

TEST_CASE("search with no constraints keeps every window") {
    WindowConstraint c;
    c.assigned[0] = 1;  // anchor one digit so bounds are well-defined
    SearchOutcome out = forced_window_search(c, 0, 2);
    CHECK(out.survivors.size() == 4);  // positions 1 and 2 free
}

TEST_CASE("search matches exhaustive enumeration on small ranges") {
    std::mt19937 rng(13);
    for (int iter = 0; iter < 8; ++iter) {
        WindowConstraint c;
        long lo = -2, hi = 3;  // six positions
        c.lambda_floors.push_back({0, rational_from_decimal("3.1")});
        c.lambda_caps.push_back({(long)(rng() % 3) - 1, rational_from_decimal("3.2")});
        c.lambda_caps.push_back({(long)(rng() % 5) - 2, rational_from_decimal("3.13")});
        SearchOutcome out = forced_window_search(c, lo, hi);

        std::set<FiniteWord> brute;
        for (int bits = 0; bits < (1 << 6); ++bits) {
            PartialWindow w;
            FiniteWord word;
            for (long p = lo; p <= hi; ++p) {
                int d = 1 + ((bits >> (p - lo)) & 1);
                w[p] = d;
                word.digits.push_back(d);
            }
            bool ok = true;
            for (auto& [n, cap] : c.lambda_caps)
                if ((bound_lambda_window(w, n).lo - SurdSum(cap)).sign() >= 0) ok = false;
            for (auto& [n, fl] : c.lambda_floors)
                if ((bound_lambda_window(w, n).hi - SurdSum(fl)).sign() <= 0) ok = false;
            if (ok) brute.insert(word);
        }
        std::set<FiniteWord> got(out.survivors.begin(), out.survivors.end());
        CHECK(got == brute);
    }
}

TEST_CASE("floor plus single cap forces the published four digits") {
    WindowConstraint c;
    c.lambda_floors.push_back({0, rational_from_decimal("3.118117")});
    c.lambda_caps.push_back({0, rational_from_decimal("3.1181201786")});
    SearchOutcome out = forced_window_search(c, -2, 2);
    CHECK(!out.survivors.empty());
    for (const auto& s : out.survivors) {
        // digits at -1..2 equal 2,2,1,2 or the mirror (2,1,2,2 at -2..1)
        bool direct = s.digits[1] == 2 && s.digits[2] == 2 && s.digits[3] == 1 && s.digits[4] == 2;
        bool mirror = s.digits[0] == 2 && s.digits[1] == 1 && s.digits[2] == 2 && s.digits[3] == 2;
        CHECK((direct || mirror));
    }
}

TEST_CASE("monotone pruning: survivors over a superset range restrict to survivors") {
    WindowConstraint c = lf3p_constraints();
    SearchOutcome small = forced_window_search(c, -14, 14);
    SearchOutcome big = forced_window_search(c, -16, 16);
    std::set<FiniteWord> small_set(small.survivors.begin(), small.survivors.end());
    for (const auto& s : big.survivors) {
        FiniteWord mid(std::vector<int>(s.digits.begin() + 2, s.digits.end() - 2));
        CHECK(small_set.count(mid) == 1);
    }
}

TEST_CASE("fixed-window preset forces the 31-digit word") {
    SearchOutcome out = forced_window_search(lf3p_constraints(), -16, 16);
    CHECK(out.survivors.size() == 3);
    for (const auto& s : out.survivors) {
        FiniteWord mid(std::vector<int>(s.digits.begin() + 2, s.digits.end()));
        CHECK(mid == forced_window_word());
    }
}

TEST_CASE("node guard refuses runaway searches") {
    WindowConstraint c;
    c.assigned[0] = 1;
    CHECK_THROWS(forced_window_search(c, -12, 12, 100));
}

TEST_CASE("recursive lower bound increases toward the upper endpoint") {
    SurdSum cinf = C_inf_value();
    SurdSum prev;
    Rational prev_diff;
    for (int a = 0; a <= 10; ++a) {
        SurdSum v = recursive_lower_bound(a).value;
        CHECK((v - cinf).sign() < 0);
        if (a > 0) CHECK((v - prev).sign() > 0);
        Rational diff = (cinf - v).enclose(Rational(1, Int("1" + std::string(60, '0')))).hi;
        if (a > 0) CHECK(diff < prev_diff);
        prev = v;
        prev_diff = diff;
    }
    CHECK(prev_diff < Rational(1, Int("1" + std::string(45, '0'))));
}

TEST_CASE("minimality chain terminates at the smallest isolated value") {
    ChainReport rep = verify_f_minimality_chain();
    CHECK(rep.final_equals_f);
    CHECK(rep.strictly_increasing);
    for (const auto& s : rep.steps) {
        CHECK(s.forcing_verified);
        CHECK((s.bound - rep.final_value).sign() < 0);  // every intermediate stays below f
    }
    // the first explicit step uses the suffix ...2_2 1_2 2 and lies below f
    CHECK(rep.steps[1].word.substr(rep.steps[1].word.size() - 9) == "2_2 1_2 2");
}

TEST_CASE("appendix family converges to the endpoint") {
    SurdSum cinf = C_inf_value();
    SurdSum l9 = appendix_lambda9_limit();
    SurdSum lm9 = appendix_lambda_minus9_limit();
    CHECK(l9.decimal(14) == "3.11812017817071");
    CHECK(lm9.decimal(10) == "3.1180041084");

    Rational tiny(1, Int("1" + std::string(40, '0')));
    SurdSum prev_l;
    Rational prev_d9, prev_dm9;
    for (int a = 1; a <= 6; ++a) {
        AppendixReport r = appendix_pa(a);
        CHECK(r.markov_at_origin);
        // the family approaches the endpoint from above, strictly decreasing
        CHECK((r.lagrange.value - cinf).sign() > 0);
        if (a > 1) CHECK((r.lagrange.value - prev_l).sign() < 0);
        // |lambda_{+-9} - limit| strictly decreasing
        SurdSum d9s = r.lambda_plus9.value - l9;
        if (d9s.sign() < 0) d9s = -d9s;
        SurdSum dm9s = r.lambda_minus9.value - lm9;
        if (dm9s.sign() < 0) dm9s = -dm9s;
        Rational d9 = d9s.enclose(tiny).hi, dm9 = dm9s.enclose(tiny).hi;
        if (a > 1) {
            CHECK(d9 < prev_d9);
            CHECK(dm9 < prev_dm9);
        }
        prev_l = r.lagrange.value;
        prev_d9 = d9;
        prev_dm9 = dm9;
    }
}
