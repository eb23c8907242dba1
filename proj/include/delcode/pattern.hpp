#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>

#include "delcode/word.hpp"

namespace delcode {

enum class ErrorKind : std::uint8_t { Deletion = 0, Erasure = 1, Flip = 2 };

char to_char(ErrorKind k);
ErrorKind parse_error_kind(char c);

/// Deletable error pattern over 1-based positions 1..n. Only corrupted
/// positions are stored; untouched positions carry no kind.
class ErrorPattern {
public:
    ErrorPattern() = default;
    explicit ErrorPattern(std::size_t n) : n_(n) {}
    ErrorPattern(std::size_t n, std::map<std::size_t, ErrorKind> errors);

    std::size_t n() const noexcept { return n_; }
    std::size_t weight() const noexcept { return errors_.size(); }
    std::size_t deletions() const noexcept;

    /// Adds or replaces the kind at a 1-based position.
    void set(std::size_t pos, ErrorKind kind);
    std::optional<ErrorKind> at(std::size_t pos) const;

    const std::map<std::size_t, ErrorKind>& errors() const noexcept { return errors_; }

    /// Smallest and largest corrupted positions; 0 when empty.
    std::size_t first() const noexcept { return errors_.empty() ? 0 : errors_.begin()->first; }
    std::size_t last() const noexcept { return errors_.empty() ? 0 : errors_.rbegin()->first; }

    /// Compact text form, e.g. "n=5 {1:F,3:D}".
    std::string str() const;

    friend bool operator==(const ErrorPattern&, const ErrorPattern&) = default;
    friend bool operator<(const ErrorPattern& a, const ErrorPattern& b);

private:
    std::size_t n_ = 0;
    std::map<std::size_t, ErrorKind> errors_;
};

/// The corruption map: copies, flips, erases or drops each bit of `x`.
Word apply_pattern(const Word& x, const ErrorPattern& g);

}  // namespace delcode
