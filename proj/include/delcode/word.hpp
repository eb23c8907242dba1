#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace delcode {

/// Precondition violations on public entry points.
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An enumeration or verification would exceed its configured cap.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A received word is not reachable from the code under the decoder's model.
class DecodeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Symbol : std::uint8_t { Zero = 0, One = 1, Erasure = 2 };

inline char to_char(Symbol s) {
    switch (s) {
    case Symbol::Zero: return '0';
    case Symbol::One: return '1';
    case Symbol::Erasure: return 'e';
    }
    return '?';
}

/// Finite sequence over {0, 1, e}. Positions exposed by the coding API are
/// 1-based; operator[] is 0-based like every other container.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {}
    Word(std::size_t n, Symbol fill) : symbols_(n, fill) {}
    Word(std::initializer_list<int> bits);

    /// Parses the text encoding: '0', '1' and 'e' for an erasure.
    static Word parse(std::string_view text);
    static Word from_bits(std::span<const std::uint8_t> bits);

    std::string str() const;

    std::size_t size() const noexcept { return symbols_.size(); }
    bool empty() const noexcept { return symbols_.empty(); }

    Symbol operator[](std::size_t i) const noexcept { return symbols_[i]; }
    Symbol& operator[](std::size_t i) noexcept { return symbols_[i]; }

    /// 0/1 value at a 0-based index; requires a non-erasure symbol.
    int bit(std::size_t i) const noexcept { return symbols_[i] == Symbol::One ? 1 : 0; }

    bool has_erasure() const noexcept;
    std::size_t erasure_count() const noexcept;
    std::size_t weight() const noexcept;

    const std::vector<Symbol>& symbols() const noexcept { return symbols_; }
    auto begin() const noexcept { return symbols_.begin(); }
    auto end() const noexcept { return symbols_.end(); }

    void push_back(Symbol s) { symbols_.push_back(s); }
    void append(const Word& other);
    Word slice(std::size_t first, std::size_t count) const;
    /// Copy with `s` inserted before 0-based index `at`.
    Word inserted(std::size_t at, Symbol s) const;
    /// Copy with the 0-based index `at` removed.
    Word erased(std::size_t at) const;

    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word&, const Word&) = default;

private:
    std::vector<Symbol> symbols_;
};

inline Symbol bit_symbol(int b) { return b ? Symbol::One : Symbol::Zero; }

/// Throws InvalidArgument if `w` contains an erasure.
void require_erasure_free(const Word& w, std::string_view what);

/// All 2^n binary words of length n in lexicographic order ('0' < '1').
std::vector<Word> all_binary_words(std::size_t n);

struct WordHash {
    std::size_t operator()(const Word& w) const noexcept;
};

}  // namespace delcode
