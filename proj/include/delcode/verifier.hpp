#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "delcode/code.hpp"
#include "delcode/family.hpp"

namespace delcode {

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

struct VerifyOptions {
    std::uint64_t budget = kDefaultBudget;  // (codeword, pattern) evaluations
    unsigned workers = 1;                   // never affects the report
    std::size_t max_counterexamples = 8;
};

/// Two codewords whose corruptions coincide, or a decoder miss.
struct Counterexample {
    // combinatorial: x1 != x2 with apply(x1,g1) == apply(x2,g2) == received
    // roundtrip/montecarlo: x, g, received, decoded (x2/g2 set when another
    // codeword reaches the same received word, i.e. the miss is unavoidable)
    Word x1;
    ErrorPattern g1;
    Word received;
    std::optional<Word> x2;
    std::optional<ErrorPattern> g2;
    std::optional<Word> decoded;
    std::string diagnostic;
    std::optional<std::uint64_t> trial;
};

enum class VerifyMode { Combinatorial, Roundtrip, MonteCarlo };

std::string to_string(VerifyMode m);

struct VerifyReport {
    VerifyMode mode = VerifyMode::Combinatorial;
    std::string code;     // Code::describe()
    std::string family;   // PatternFamily::spec()
    std::size_t n = 0;
    BigInt codebook_size;
    BigInt family_size;   // combinatorial / roundtrip
    std::uint64_t trials = 0;  // montecarlo
    std::uint64_t cases = 0;
    std::uint64_t failures = 0;          // wrong or failed decodes (collisions for combinatorial)
    std::uint64_t decode_failures = 0;   // decoder gave up
    std::uint64_t unavoidable = 0;       // misses explained by a codeword collision
    std::uint64_t ambiguous_misses = 0;  // other misses where the decoder broke a flip tie the wrong way
    std::uint64_t ambiguity_count = 0;
    std::optional<std::uint64_t> seed;
    std::vector<Counterexample> counterexamples;

    bool passed() const noexcept { return failures == 0; }
};

/// Checks the correction definition directly: no two distinct codewords may
/// share a corrupted output under patterns of f. Output words are compared
/// exactly, erasure symbols and lengths included.
VerifyReport verify_combinatorial(const std::vector<Word>& codebook, const PatternFamily& f,
                                  const VerifyOptions& opt = {});

/// Decodes apply_pattern(x, g) for every codeword x and every g in f.
VerifyReport verify_roundtrip(const Code& code, const PatternFamily& f, const VerifyOptions& opt = {});

/// Seeded Monte Carlo: trial i draws its codeword and pattern from
/// Rng(mix_seed(seed, i)), so results do not depend on the worker count.
VerifyReport simulate(const Code& code, const PatternFamily& f, std::uint64_t trials, std::uint64_t seed,
                      const VerifyOptions& opt = {});

/// Re-checks a counterexample from scratch with apply_pattern (and the
/// decoder, for decoder misses).
bool revalidate(const Counterexample& cx, VerifyMode mode, const PatternFamily& f, const Code* code);

}  // namespace delcode
