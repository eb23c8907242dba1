#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "delcode/word.hpp"

namespace delcode {

/// Varshamov-Tenengolts code VT_a(n): binary words of length n with
/// sum_i i*x_i == a (mod n+1).
struct VtParams {
    std::size_t n = 0;
    std::size_t a = 0;

    VtParams() = default;
    VtParams(std::size_t n_, std::size_t a_);

    std::size_t modulus() const noexcept { return n + 1; }
    friend bool operator==(const VtParams&, const VtParams&) = default;
};

inline constexpr std::size_t kDefaultVtCap = 24;

/// sum_{i=1..n} i*x_i, unreduced.
std::uint64_t vt_checksum(const Word& x);

bool vt_contains(const VtParams& p, const Word& x);

/// VT_a(n) in lexicographic order. Throws BudgetExceeded when n > cap.
std::vector<Word> vt_enumerate(const VtParams& p, std::size_t cap = kDefaultVtCap);

/// |VT_a(n)| for every residue a = 0..n.
std::vector<std::uint64_t> vt_class_sizes(std::size_t n, std::size_t cap = kDefaultVtCap);

struct ResidueChoice {
    std::size_t a = 0;
    std::uint64_t size = 0;
};

/// Residue with the largest class (smallest a on ties).
ResidueChoice vt_best_residue(std::size_t n, std::size_t cap = kDefaultVtCap);

Word correct_erasure(const VtParams& p, const Word& y);

struct FlipCorrection {
    Word word;
    std::size_t position = 0;  // 1-based position that was restored
    bool ambiguous = false;    // both candidate restorations are codewords
    Word alternative;          // the other candidate when ambiguous
};

/// Restores a single flip. With r = (CS(y) - a) mod (n+1), candidate A
/// clears a one at position r and candidate B sets a zero at n+1-r. Both
/// produce codewords whenever their bit condition holds; A wins ties and the
/// tie is reported through `ambiguous`.
FlipCorrection correct_flip(const VtParams& p, const Word& y);

/// Levenshtein's single-deletion decoder. Also reports the 1-based insertion
/// position through `inserted_at` when non-null.
Word correct_deletion(const VtParams& p, const Word& y, std::size_t* inserted_at = nullptr);

struct SingleCorrection {
    enum class Action { None, Erasure, Flip, Deletion };
    Word word;
    Action action = Action::None;
    bool ambiguous = false;
};

/// Dispatches on the received word's shape: erasure present, length n-1,
/// length n outside the code, or an intact codeword.
SingleCorrection correct_single(const VtParams& p, const Word& y);

}  // namespace delcode
