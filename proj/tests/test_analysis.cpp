#include <doctest.h>

#include "delcode/bounds.hpp"
#include "delcode/counting.hpp"
#include "delcode/family.hpp"
#include "oracles.hpp"

using namespace delcode;

TEST_SUITE("analysis") {

TEST_CASE("binomial") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(3, 4) == 0);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(100, 50) == BigInt("100891344545564193334812497256"));
}

TEST_CASE("count examples") {
    CHECK(count_patterns(2, 1) == 7);
    CHECK(count_patterns(5, 2) == 106);
    CHECK(count_patterns(4, 4) == 256);
    CHECK(count_far_patterns(5, 2, 2) == 70);
    CHECK(count_far_patterns(12, 9, 2) == 91);
    CHECK(count_burst_patterns(3, 1) == 28);
    CHECK(count_burst_patterns(4, 3) == 256);
    CHECK(count_patterns(4, 1, 1) == 5);
}

TEST_CASE("counts match enumeration for n <= 10, t <= 3, P <= 5, b <= 3") {
    for (std::size_t n = 1; n <= 10; ++n) {
        for (std::size_t t = 0; t <= std::min<std::size_t>(3, n); ++t) {
            CHECK(count_patterns(n, t) == enumerate_family(PatternFamily::at_most(n, t)).size());
            for (std::size_t P = 1; P <= 5; ++P)
                CHECK(count_far_patterns(n, P, t) == enumerate_family(PatternFamily::p_far(n, P, t)).size());
        }
        for (std::size_t b = 0; b <= 3 && b < n; ++b)
            CHECK(count_burst_patterns(n, b) == enumerate_family(PatternFamily::burst(n, b)).size());
    }
}

TEST_CASE("counts match brute-force filters over all patterns") {
    // independent of the library enumerator
    for (std::size_t n = 1; n <= 8; ++n) {
        const auto all = oracle::canonical_patterns(n, n);
        for (std::size_t b = 0; b < n && b <= 3; ++b) {
            std::uint64_t c = 0;
            for (const auto& k : all) c += oracle::burst_ok(oracle::parse_key(k), b);
            CHECK(count_burst_patterns(n, b) == c);
        }
        for (std::size_t P = 1; P <= 5; ++P) {
            for (std::size_t t = 0; t <= std::min<std::size_t>(3, n); ++t) {
                std::uint64_t c = 0;
                for (const auto& k : all) {
                    const auto g = oracle::parse_key(k);
                    c += g.size() <= t && oracle::far_ok(g, P);
                }
                CHECK(count_far_patterns(n, P, t) == c);
            }
        }
    }
}

TEST_CASE("far counts are monotone in P and equal the full count at P = 1") {
    for (std::size_t n = 1; n <= 40; n += 3) {
        for (std::size_t t = 0; t <= std::min<std::size_t>(4, n); ++t) {
            CHECK(count_far_patterns(n, 1, t) == count_patterns(n, t));
            for (std::size_t P = 1; P < 20; ++P) CHECK(count_far_patterns(n, P + 1, t) <= count_far_patterns(n, P, t));
        }
    }
}

TEST_CASE("far_fraction closed form") {
    const auto f = far_fraction(10000, 2, 100);
    CHECK(f.far_spacing == 25);
    CHECK(f.far_count == 443349976);
    CHECK(f.all_count == 449985001);
    CHECK(f.fraction == BigRational(BigInt(443349976), BigInt(449985001)));
    CHECK(f.fraction_value == doctest::Approx(0.985255).epsilon(1e-6));
    CHECK(f.bound == doctest::Approx(0.58));
    CHECK(f.fraction_value >= f.bound);

    CHECK(far_fraction(50, 0, 10).fraction == 1);
    CHECK_THROWS_AS(far_fraction(100, 2, 5), InvalidArgument);
    CHECK_THROWS_AS(far_fraction(10, 2, 6), InvalidArgument);  // P_n = 0
}

TEST_CASE("far_fraction agrees with enumeration and stays in [0, 1]") {
    for (std::size_t n = 6; n <= 10; ++n) {
        for (std::size_t t = 1; t <= 2; ++t) {
            const double omega = 6.0;
            const std::size_t Pn = static_cast<std::size_t>(n / (t * t * omega));
            if (Pn == 0) continue;
            const auto f = far_fraction(n, t, omega);
            CHECK(f.far_count == enumerate_family(PatternFamily::p_far(n, 3 * Pn, t)).size());
            CHECK(f.all_count == enumerate_family(PatternFamily::at_most(n, t)).size());
            CHECK(f.fraction >= 0);
            CHECK(f.fraction <= 1);
        }
    }
}

TEST_CASE("redundancy helpers") {
    CHECK(redundancy(12, 16) == doctest::Approx(8.0));
    CHECK(log2_big(BigInt(1) << 3000) == doctest::Approx(3000.0));
    CHECK(to_string(BigInt(449985001)) == "449985001");
}

TEST_CASE("rep_bounds and delta") {
    const auto r = rep_bounds(7, 1);
    CHECK(r.lower.value == doctest::Approx(14.0 / 3));
    CHECK(r.upper.value == doctest::Approx(17.0 / 3));
    CHECK(r.lower.value <= 5.0);
    CHECK(r.upper.value >= 5.0);
    CHECK(rep_bounds(100, 2).lower.value == doctest::Approx(80.0));
    CHECK(rep_bounds(30, 7).upper.value == doctest::Approx(29.0));
    CHECK(delta(5) == doctest::Approx(0.375));
    CHECK(delta(3) == doctest::Approx(1.0));
    CHECK(delta(10) == doctest::Approx(11.0 / 512));
}

TEST_CASE("bound evaluators at spot inputs") {
    using doctest::Approx;
    CHECK(any_code_lower(1e6, 10).value == Approx(64.89160474436812));
    CHECK(any_code_lower(5000, 3).value == Approx(-2.578150363515122));
    CHECK(any_code_lower(1e9, 100).value == Approx(1324.3291864211535));

    CHECK(frac_upper(1e6, 2, 10).value == Approx(624.3856189774725));
    CHECK(frac_upper(10000, 3, 6).value == Approx(460.77254337884295));
    CHECK(frac_upper(1e8, 5, 50).value == Approx(21609.640474436812));

    CHECK(frac_upper_K(1e6, 2, 2).value == Approx(143.4525485545934));
    CHECK(frac_upper_K(1e4, 1, 3).value == Approx(38.10824963648488));
    CHECK(frac_upper_K(1e7, 4, 20).value == Approx(5098.101942183735));

    CHECK(far_upper(100, 5).value == Approx(65.31958180572946));
    CHECK(far_upper(1000, 8).value == Approx(410.11329752866175));
    CHECK(far_upper(60, 6).value == Approx(32.05645109126707));

    CHECK(far_lower(1e6, 5).value == Approx(21.251488095238095));
    CHECK(far_lower(1e7, 2).value == Approx(404.9010416666667));
    CHECK(far_lower(24576, 2).value == Approx(-1.0));

    CHECK(far_lower_largeP(1e6, 100).value == Approx(3710.468998802639));
    CHECK(far_lower_largeP(1e5, 50).value == Approx(406.3774114747977));
    CHECK(far_lower_largeP(1e8, 1000).value == Approx(92504.89567626867));

    CHECK(burst_lower(1e6, 1).value == Approx(11.609640474436812));
    CHECK(burst_lower(1024, 2).value == Approx(-0.5849625007211561));
    CHECK(burst_lower(1e9, 5).value == Approx(14.405499757656589));
}

TEST_CASE("bound domain errors") {
    CHECK_THROWS_AS(far_upper(12, 3), DomainError);
    CHECK_THROWS_AS(far_upper(12, 2), DomainError);
    CHECK_THROWS_AS(frac_upper(100, 2, 5), DomainError);
    CHECK_THROWS_AS(frac_upper_K(100, 2, 1), DomainError);
    CHECK_THROWS_AS(any_code_lower(100, 0), DomainError);
    CHECK_THROWS_AS(burst_lower(100, 0), DomainError);
    CHECK_THROWS_AS(far_lower_largeP(100, 0), DomainError);
}

TEST_CASE("evaluate_bound by name") {
    const auto r = evaluate_bound("rep_bounds", {{"n", 7}, {"t", 1}});
    REQUIRE(r.size() == 2);
    CHECK(r[1].value == doctest::Approx(17.0 / 3));
    CHECK(evaluate_bound("delta", {{"P", 5}})[0].value == doctest::Approx(0.375));
    CHECK_THROWS_AS(evaluate_bound("nope", {}), std::invalid_argument);
    CHECK_THROWS_AS(evaluate_bound("far_upper", {{"n", 100}}), std::invalid_argument);
    CHECK(bound_catalog().size() == 9);
}

}
