#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "delcode/counting.hpp"
#include "delcode/vt.hpp"
#include "delcode/word.hpp"

namespace delcode {

/// Concatenated VT code for widely spaced deletable errors.
///
/// A codeword is t-1 inner blocks of length P, each a non-constant word of
/// VT_{a1}(P), followed by one final block of length P+s from VT_{a2}(P+s),
/// where n = tP + s and 0 <= s < P. When the errors are pairwise at least 3P
/// apart, every block carries at most one error and the blocks can be
/// repaired one at a time from left to right.
struct FarParams {
    std::size_t n = 0;
    std::size_t P = 0;
    std::size_t t = 0;
    std::size_t s = 0;
    std::size_t a1 = 0;
    std::size_t a2 = 0;
    std::vector<Word> inner_alphabet;  // VT_{a1}(P) without 0...0 and 1...1, sorted
    std::vector<Word> final_alphabet;  // VT_{a2}(P+s), sorted

    std::size_t final_length() const noexcept { return P + s; }
    VtParams inner_code() const { return {P, a1}; }
    VtParams final_code() const { return {P + s, a2}; }

    /// |inner|^(t-1) * |final|.
    BigInt size() const;
    double redundancy() const;
    /// Index tuple of a codeword, or nullopt when `x` is not in the code.
    std::optional<std::vector<std::size_t>> index_of(const Word& x) const;
    bool contains(const Word& x) const { return index_of(x).has_value(); }

    friend bool operator==(const FarParams& a, const FarParams& b) {
        return a.n == b.n && a.P == b.P && a.a1 == b.a1 && a.a2 == b.a2;
    }
};

/// Splits n = tP + s and picks the residues: a1 maximizes the number of
/// non-constant words of VT_a(P), a2 maximizes |VT_a(P+s)|. Ties go to the
/// smallest residue, except that a2 = a1 is kept whenever a1 attains the
/// maximum for the final length.
FarParams far_params(std::size_t n, std::size_t P);

/// Builds the code for explicit residues.
FarParams far_params(std::size_t n, std::size_t P, std::size_t a1, std::size_t a2);

/// Concatenates inner_alphabet[i_1] ... inner_alphabet[i_{t-1}] final_alphabet[i_t].
Word far_encode(const FarParams& p, const std::vector<std::size_t>& indices);

/// (sum_i i*block_i - a) mod modulus.
std::size_t checksum_difference(const Word& block, std::size_t a, std::size_t modulus);

struct FarDecodeResult {
    std::optional<Word> word;
    std::size_t iterations = 0;       // corrections that required a splice
    std::size_t erasures_fixed = 0;
    std::size_t ambiguous_flips = 0;  // flip repairs where both candidates were in the block alphabet
    std::vector<std::string> trace;   // one line per correction
    std::string failure;              // diagnostic when word is empty

    bool ok() const noexcept { return word.has_value(); }
};

/// Iteration cap used by far_decode: ceil(n / 3P) + 1.
std::size_t far_iteration_cap(const FarParams& p);

/// Sequential decoder for 3P-far deletable error patterns.
FarDecodeResult far_decode(const FarParams& p, const Word& y);

}  // namespace delcode
