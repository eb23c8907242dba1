#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "delcode/word.hpp"

namespace delcode {

/// Repetition code: each of m information bits repeated 2t+1 times, then
/// n - m(2t+1) zeros. m is the largest integer with m(2t+1) <= n.
/// The same construction with t = b corrects bursts of spread <= b.
struct RepParams {
    std::size_t n = 0;
    std::size_t t = 0;
    std::size_t m = 0;
    std::size_t pad = 0;

    RepParams() = default;
    RepParams(std::size_t n_, std::size_t t_);

    std::size_t block() const noexcept { return 2 * t + 1; }
    std::size_t redundancy() const noexcept { return n - m; }
    friend bool operator==(const RepParams&, const RepParams&) = default;
};

Word rep_encode(const RepParams& p, const Word& info);

struct RepDecodeResult {
    std::optional<Word> info;             // empty on decode failure
    std::vector<std::size_t> tied_blocks;  // 1-based blocks decided by the tie rule
    std::size_t zeros_removed = 0;
    std::string failure;

    bool ok() const noexcept { return info.has_value(); }
};

/// Strip up to `pad` trailing zeros, cut into blocks of 2t+1 and take a
/// per-block majority over non-erased symbols. Ties decode to 0 and are
/// listed in tied_blocks. A block count other than m is a decode failure.
RepDecodeResult rep_decode(const RepParams& p, const Word& z);

}  // namespace delcode
