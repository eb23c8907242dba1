// Acceptance run: one PASS/FAIL line per criterion.
//
//   delcode_acceptance [--expect-fail N,...]
//
// Exit status is 0 when the failing criteria are exactly the expected set,
// so a documented finding stays visible as FAIL without hiding regressions
// (or silent fixes) elsewhere.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "delcode/bounds.hpp"
#include "delcode/counting.hpp"
#include "delcode/serialize.hpp"
#include "delcode/verifier.hpp"
#include "oracles.hpp"

using namespace delcode;

namespace {

// Runtime limits in seconds, per criterion.
constexpr double kLimit1 = 5, kLimit2 = 60, kLimit3 = 60, kLimit4 = 5, kLimit5 = 60, kLimit6 = 60, kLimit7 = 10,
                 kLimit8 = 60, kLimit9 = 1, kLimit10 = 5, kLimit11 = 60, kLimit12 = 120;
// Relative tolerance for floating-point bound values.
constexpr double kRelTol = 1e-9;

struct Outcome {
    bool ok = true;
    std::ostringstream detail;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            if (ok) detail << "first failure: ";
            else detail << "; ";
            detail << what;
            ok = false;
        }
    }
};

bool close(double got, double want) {
    return std::fabs(got - want) <= kRelTol * std::max(1.0, std::fabs(want));
}

// Brute-force pattern count: every support with the property, times 3^|S|.
std::uint64_t brute_count(std::size_t n, const std::function<bool(const std::vector<std::size_t>&)>& keep) {
    std::uint64_t total = 0;
    for (std::uint64_t e = 0; e < (std::uint64_t{1} << n); ++e) {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < n; ++i)
            if ((e >> i) & 1) s.push_back(i + 1);
        if (!keep(s)) continue;
        std::uint64_t w = 1;
        for (std::size_t i = 0; i < s.size(); ++i) w *= 3;
        total += w;
    }
    return total;
}

void c1(Outcome& o) {
    const auto c = vt_enumerate({4, 0});
    std::vector<std::string> got;
    for (const auto& w : c) got.push_back(w.str());
    o.require(got == std::vector<std::string>{"0000", "0110", "1001", "1111"}, "VT_0(4) members");
    for (std::size_t n = 1; n <= 12; ++n) {
        const auto sizes = vt_class_sizes(n);
        std::uint64_t sum = 0, best = 0;
        for (auto s : sizes) {
            sum += s;
            best = std::max<std::uint64_t>(best, s);
        }
        o.require(sum == (std::uint64_t{1} << n), "class sizes sum at n=" + std::to_string(n));
        o.require(static_cast<double>(best) * static_cast<double>(n + 1) >= std::exp2(static_cast<double>(n)),
                  "largest class at n=" + std::to_string(n));
    }
    o.detail << "|VT_0(4)|=" << c.size() << ", n<=12 partitions checked";
}

void c2(Outcome& o) {
    std::uint64_t cases = 0, failures = 0;
    for (std::size_t n = 1; n <= 12; ++n)
        for (std::size_t a = 0; a <= n; ++a) {
            const VtParams p{n, a};
            for (const auto& x : vt_enumerate(p))
                for (std::size_t d = 0; d < n; ++d) {
                    ++cases;
                    try {
                        if (correct_deletion(p, x.erased(d)) != x) ++failures;
                    } catch (const std::exception&) {
                        ++failures;
                    }
                }
        }
    o.require(failures == 0, std::to_string(failures) + " deletion failures");
    o.detail << cases << " cases, " << failures << " failures";
}

void c3(Outcome& o) {
    std::uint64_t cases = 0, failures = 0, ambiguous = 0;
    for (std::size_t n = 1; n <= 12; ++n)
        for (std::size_t a = 0; a <= n; ++a) {
            const VtParams p{n, a};
            for (const auto& x : vt_enumerate(p))
                for (std::size_t d = 0; d < n; ++d) {
                    ++cases;
                    Word y = x;
                    y[d] = Symbol::Erasure;
                    try {
                        const auto r = correct_single(p, y);
                        if (r.word != x) ++failures;
                        if (r.ambiguous) ++ambiguous;
                    } catch (const std::exception&) {
                        ++failures;
                    }
                }
        }
    o.require(failures == 0, std::to_string(failures) + " erasure failures");
    o.require(ambiguous == 0, std::to_string(ambiguous) + " ambiguities");
    o.detail << cases << " cases, " << failures << " failures, " << ambiguous << " ambiguities";
}

void c4(Outcome& o) {
    const auto f = PatternFamily::at_most(4, 1, KindSet::parse("F"));
    const auto r = verify_combinatorial(vt_enumerate({4, 0}), f);
    o.require(!r.passed(), "single-flip family unexpectedly passed");
    bool witness = false;
    for (const auto& cx : r.counterexamples) {
        o.require(revalidate(cx, VerifyMode::Combinatorial, f, nullptr), "counterexample does not revalidate");
        if (cx.received.str() == "0111" && cx.x1.str() == "0110" && cx.x2 && cx.x2->str() == "1111") witness = true;
    }
    o.require(witness, "0110/1111 -> 0111 witness missing");
    o.detail << "fail as expected, " << r.failures << " collisions, witness 0110/1111 -> 0111 revalidated";
}

void c5(Outcome& o) {
    for (auto [n, t, cases] : std::vector<std::tuple<std::size_t, std::size_t, std::uint64_t>>{{9, 1, 224}, {15, 2, 0}}) {
        const auto r = verify_roundtrip(Code(RepParams(n, t)), PatternFamily::at_most(n, t));
        o.require(r.passed(), "rep(" + std::to_string(n) + "," + std::to_string(t) + ") roundtrip failed");
        if (cases) o.require(r.cases == cases, "case count " + std::to_string(r.cases));
        o.detail << "rep(" << n << "," << t << ") " << r.cases << " cases; ";
    }
    std::size_t checked = 0;
    for (std::size_t n = 3; n <= 200; ++n)
        for (std::size_t t = 1; t <= (n - 1) / 2; ++t) {
            const RepParams p(n, t);
            const auto b = rep_bounds(static_cast<double>(n), static_cast<double>(t));
            const double R = static_cast<double>(p.redundancy());
            o.require(R >= b.lower.value - 1e-9 && R <= b.upper.value + 1e-9,
                      "redundancy outside bounds at n=" + std::to_string(n));
            ++checked;
        }
    o.detail << checked << " (n,t) redundancy checks";
}

void c6(Outcome& o) {
    const Code code(RepParams(9, 1));
    const auto f = PatternFamily::burst(9, 1);
    VerifyOptions opt;
    opt.max_counterexamples = 1000;
    const auto r = verify_roundtrip(code, f, opt);
    o.require(r.passed(), std::to_string(r.failures) + "/" + std::to_string(r.cases) +
                              " burst cases decoded wrongly (two errors inside one 3-bit block)");
    std::size_t valid = 0;
    for (const auto& cx : r.counterexamples) valid += revalidate(cx, VerifyMode::Roundtrip, f, &code);
    o.detail << ", " << valid << "/" << r.counterexamples.size() << " counterexamples revalidate";
}

void c7(Outcome& o) {
    const auto p = far_params(12, 3);
    const Code code(p);
    o.require(p.size() == 16, "|C_far| != 16");
    o.require(close(p.redundancy(), 8.0), "R != 8");
    const auto f = PatternFamily::p_far(12, 9);
    o.require(f.size() == 91, "pFar(9) size != 91");
    const auto comb = verify_combinatorial(code.codebook(kDefaultBudget), f);
    const auto rt = verify_roundtrip(code, f);
    for (const auto& cx : comb.counterexamples)
        o.require(revalidate(cx, VerifyMode::Combinatorial, f, nullptr), "combinatorial counterexample invalid");
    for (const auto& cx : rt.counterexamples)
        o.require(revalidate(cx, VerifyMode::Roundtrip, f, &code), "roundtrip counterexample invalid");
    o.require(comb.passed(), "combinatorial fail (flip-ambiguity finding)");
    o.require(rt.passed(), "roundtrip fail (flip-ambiguity finding)");
    o.require(rt.cases == 1456, "roundtrip cases " + std::to_string(rt.cases));
    o.detail << "|C|=16, R=8, combinatorial " << comb.cases << " cases, roundtrip " << rt.cases << " cases";
}

void c8(Outcome& o) {
    std::size_t checks = 0;
    for (std::size_t n = 1; n <= 10; ++n) {
        for (std::size_t t = 0; t <= std::min<std::size_t>(3, n); ++t) {
            const auto weight_ok = [t](const std::vector<std::size_t>& s) { return s.size() <= t; };
            o.require(count_patterns(n, t) == brute_count(n, weight_ok), "count_patterns n=" + std::to_string(n));
            o.require(count_patterns(n, t) == enumerate_family(PatternFamily::at_most(n, t)).size(),
                      "atMost enumeration n=" + std::to_string(n));
            checks += 2;
            for (std::size_t P = 1; P <= 5; ++P) {
                const auto far_ok = [t, P](const std::vector<std::size_t>& s) {
                    if (s.size() > t) return false;
                    for (std::size_t i = 1; i < s.size(); ++i)
                        if (s[i] - s[i - 1] < P) return false;
                    return true;
                };
                const auto c = count_far_patterns(n, P, t);
                o.require(c == brute_count(n, far_ok), "count_far_patterns n=" + std::to_string(n));
                o.require(c == enumerate_family(PatternFamily::p_far(n, P, t)).size(), "pFar enumeration");
                checks += 2;
            }
        }
        for (std::size_t b = 0; b <= 3 && b < n; ++b) {
            const auto burst_ok = [b](const std::vector<std::size_t>& s) { return s.size() < 2 || s.back() - s.front() <= b; };
            const auto c = count_burst_patterns(n, b);
            o.require(c == brute_count(n, burst_ok), "count_burst_patterns n=" + std::to_string(n));
            o.require(c == enumerate_family(PatternFamily::burst(n, b)).size(), "burst enumeration");
            checks += 2;
        }
    }
    o.detail << checks << " count/enumeration comparisons";
}

void c9(Outcome& o) {
    const auto f = far_fraction(10000, 2, 100);
    o.require(f.fraction_value >= 1.0 - 42.0 / 100.0, "fraction below 1 - 42/omega");
    o.require(f.far_count == 443349976 && f.all_count == 449985001, "closed-form counts");
    o.detail << "fraction " << to_string(f.far_count) << "/" << to_string(f.all_count) << " = " << f.fraction_value
             << " >= 0.58";
}

void c10(Outcome& o) {
    const auto r = rep_bounds(7, 1);
    o.require(close(r.lower.value, 14.0 / 3) && close(r.upper.value, 17.0 / 3), "rep_bounds(7,1)");
    o.require(r.lower.value <= 5.0 && 5.0 <= r.upper.value && RepParams(7, 1).redundancy() == 5, "R=5 bracket");
    o.require(close(delta(5), 0.375), "delta(5)");
    bool threw = false;
    try {
        far_upper(12, 3);
    } catch (const DomainError&) {
        threw = true;
    }
    o.require(threw, "far_upper(12,3) accepted");

    struct Spot { const char* name; std::map<std::string, double> params; double want; };
    // values substituted by hand into each formula (log base 2)
    const std::vector<Spot> spots = {
        {"rep_bounds", {{"n", 7}, {"t", 1}}, 14.0 / 3},
        {"rep_bounds", {{"n", 100}, {"t", 2}}, 80.0},
        {"rep_bounds", {{"n", 30}, {"t", 7}}, 28.0},
        {"any_code_lower", {{"n", 1e6}, {"t", 10}}, 64.89160474436812},
        {"any_code_lower", {{"n", 5000}, {"t", 3}}, -2.578150363515122},
        {"any_code_lower", {{"n", 1e9}, {"t", 100}}, 1324.3291864211535},
        {"frac_upper", {{"n", 1e6}, {"t", 2}, {"omega", 10}}, 624.3856189774725},
        {"frac_upper", {{"n", 10000}, {"t", 3}, {"omega", 6}}, 460.77254337884295},
        {"frac_upper", {{"n", 1e8}, {"t", 5}, {"omega", 50}}, 21609.640474436812},
        {"frac_upper_K", {{"n", 1e6}, {"t", 2}, {"K", 2}}, 143.4525485545934},
        {"frac_upper_K", {{"n", 1e4}, {"t", 1}, {"K", 3}}, 38.10824963648488},
        {"frac_upper_K", {{"n", 1e7}, {"t", 4}, {"K", 20}}, 5098.101942183735},
        {"delta", {{"P", 5}}, 0.375},
        {"delta", {{"P", 3}}, 1.0},
        {"delta", {{"P", 10}}, 11.0 / 512},
        {"far_upper", {{"n", 100}, {"P", 5}}, 65.31958180572946},
        {"far_upper", {{"n", 1000}, {"P", 8}}, 410.11329752866175},
        {"far_upper", {{"n", 60}, {"P", 6}}, 32.05645109126707},
        {"far_lower", {{"n", 1e6}, {"P", 5}}, 21.251488095238095},
        {"far_lower", {{"n", 1e7}, {"P", 2}}, 404.9010416666667},
        {"far_lower", {{"n", 24576}, {"P", 2}}, -1.0},
        {"far_lower_largeP", {{"n", 1e6}, {"P", 100}}, 3710.468998802639},
        {"far_lower_largeP", {{"n", 1e5}, {"P", 50}}, 406.3774114747977},
        {"far_lower_largeP", {{"n", 1e8}, {"P", 1000}}, 92504.89567626867},
        {"burst_lower", {{"n", 1e6}, {"b", 1}}, 11.609640474436812},
        {"burst_lower", {{"n", 1024}, {"b", 2}}, -0.5849625007211561},
        {"burst_lower", {{"n", 1e9}, {"b", 5}}, 14.405499757656589},
    };
    for (const auto& s : spots) {
        const auto got = evaluate_bound(s.name, s.params).front().value;
        o.require(close(got, s.want), std::string(s.name) + " spot value " + std::to_string(got));
    }
    o.detail << spots.size() << " spot evaluations across " << bound_catalog().size() << " evaluators";
}

void c11(Outcome& o) {
    const Code code(far_params(60, 6));
    const auto f = PatternFamily::p_far(60, 18);
    VerifyOptions one, many;
    many.workers = 4;
    const auto a = report_to_json(simulate(code, f, 2000, 12345, one)).dump();
    const auto b = report_to_json(simulate(code, f, 2000, 12345, many)).dump();
    const auto c = report_to_json(simulate(code, f, 2000, 12345, one)).dump();
    o.require(a == b, "1-worker and 4-worker JSON differ");
    o.require(a == c, "repeat run differs");
    o.detail << "2000 trials, " << a.size() << " JSON bytes identical across 1/4 workers";
}

void c12(Outcome& o) {
    const Code code(far_params(60, 6));
    const auto f = PatternFamily::p_far(60, 18);
    const std::uint64_t trials = 10000;
    VerifyOptions opt;
    opt.max_counterexamples = trials;  // keep every miss so each one is re-checked
    const auto r = simulate(code, f, trials, 1, opt);
    std::uint64_t valid = 0;
    for (const auto& cx : r.counterexamples) valid += revalidate(cx, VerifyMode::MonteCarlo, f, &code);
    o.require(valid == r.counterexamples.size() && r.counterexamples.size() == r.failures,
              "not every counterexample revalidates");
    o.require(r.decode_failures == 0, std::to_string(r.decode_failures) + " decoder give-ups");
    o.require(r.unavoidable + r.ambiguous_misses == r.failures, "misses not explained by flip ambiguity");

    const auto de = simulate(code, PatternFamily::p_far(60, 18, std::nullopt, KindSet::parse("DE")), trials, 1);
    o.require(de.passed(), "deletion/erasure-only run failed");

    const double rate = static_cast<double>(trials - r.failures) / static_cast<double>(trials);
    o.detail << "success rate " << rate << " (finding: flip ambiguity; " << r.unavoidable << " unavoidable collisions, "
             << r.ambiguous_misses << " wrong tie-breaks, all " << valid
             << " counterexamples revalidate); D/E-only success rate "
             << static_cast<double>(trials - de.failures) / static_cast<double>(trials);
}

}  // namespace

int main(int argc, char** argv) {
    std::set<int> expected;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--expect-fail" && i + 1 < argc) {
            std::istringstream in(argv[++i]);
            std::string item;
            while (std::getline(in, item, ',')) expected.insert(std::stoi(item));
        } else {
            std::cerr << "usage: delcode_acceptance [--expect-fail N,...]\n";
            return 1;
        }
    }

    struct Criterion { int id; const char* title; double limit; void (*run)(Outcome&); };
    const std::vector<Criterion> all = {
        {1, "VT enumeration and class sizes", kLimit1, c1},
        {2, "VT single-deletion round trip, n <= 12", kLimit2, c2},
        {3, "VT single-erasure round trip, n <= 12", kLimit3, c3},
        {4, "VT_0(4) single-flip audit fails with witness", kLimit4, c4},
        {5, "repetition code round trips and redundancy", kLimit5, c5},
        {6, "burst code rep(9, t=b=1) over burst(1)", kLimit6, c6},
        {7, "C_far(12,3) desk scale", kLimit7, c7},
        {8, "counting formulas vs enumeration", kLimit8, c8},
        {9, "far fraction at n=10000, t=2, omega=100", kLimit9, c9},
        {10, "bound evaluators", kLimit10, c10},
        {11, "simulate determinism across workers", kLimit11, c11},
        {12, "Monte Carlo far(60,6) under pFar(18)", kLimit12, c12},
    };

    std::set<int> failed;
    for (const auto& c : all) {
        Outcome o;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            c.run(o);
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        o.require(secs < c.limit, "runtime over " + std::to_string(c.limit) + " s");
        if (!o.ok) failed.insert(c.id);
        std::printf("%s %2d  %s  [%.2fs < %.0fs]  %s\n", o.ok ? "PASS" : "FAIL", c.id, c.title, secs, c.limit,
                    o.detail.str().c_str());
        std::fflush(stdout);
    }
    std::printf("%zu/%zu criteria pass\n", all.size() - failed.size(), all.size());
    if (failed != expected) {
        std::printf("failing set differs from the expected set\n");
        return 1;
    }
    return 0;
}
