#include "delcode/word.hpp"

#include <algorithm>

namespace delcode {

Word::Word(std::initializer_list<int> bits) {
    symbols_.reserve(bits.size());
    for (int b : bits) {
        if (b != 0 && b != 1) throw InvalidArgument("bit literal must be 0 or 1");
        symbols_.push_back(bit_symbol(b));
    }
}

Word Word::parse(std::string_view text) {
    std::vector<Symbol> out;
    out.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        switch (text[i]) {
        case '0': out.push_back(Symbol::Zero); break;
        case '1': out.push_back(Symbol::One); break;
        case 'e': out.push_back(Symbol::Erasure); break;
        default:
            throw InvalidArgument("malformed word: character '" + std::string(1, text[i]) +
                                  "' at offset " + std::to_string(i) + " is not one of 0, 1, e");
        }
    }
    return Word(std::move(out));
}

Word Word::from_bits(std::span<const std::uint8_t> bits) {
    std::vector<Symbol> out;
    out.reserve(bits.size());
    for (auto b : bits) out.push_back(bit_symbol(b));
    return Word(std::move(out));
}

std::string Word::str() const {
    std::string s;
    s.reserve(symbols_.size());
    for (auto sym : symbols_) s.push_back(to_char(sym));
    return s;
}

bool Word::has_erasure() const noexcept {
    return std::find(symbols_.begin(), symbols_.end(), Symbol::Erasure) != symbols_.end();
}

std::size_t Word::erasure_count() const noexcept {
    return static_cast<std::size_t>(std::count(symbols_.begin(), symbols_.end(), Symbol::Erasure));
}

std::size_t Word::weight() const noexcept {
    return static_cast<std::size_t>(std::count(symbols_.begin(), symbols_.end(), Symbol::One));
}

void Word::append(const Word& other) {
    symbols_.insert(symbols_.end(), other.symbols_.begin(), other.symbols_.end());
}

Word Word::slice(std::size_t first, std::size_t count) const {
    first = std::min(first, symbols_.size());
    count = std::min(count, symbols_.size() - first);
    return Word(std::vector<Symbol>(symbols_.begin() + static_cast<std::ptrdiff_t>(first),
                                    symbols_.begin() + static_cast<std::ptrdiff_t>(first + count)));
}

Word Word::inserted(std::size_t at, Symbol s) const {
    Word out = *this;
    out.symbols_.insert(out.symbols_.begin() + static_cast<std::ptrdiff_t>(at), s);
    return out;
}

Word Word::erased(std::size_t at) const {
    Word out = *this;
    out.symbols_.erase(out.symbols_.begin() + static_cast<std::ptrdiff_t>(at));
    return out;
}

void require_erasure_free(const Word& w, std::string_view what) {
    if (w.has_erasure()) throw InvalidArgument(std::string(what) + ": word contains an erasure");
}

std::vector<Word> all_binary_words(std::size_t n) {
    if (n >= 63) throw BudgetExceeded("all_binary_words: length too large");
    const std::uint64_t count = std::uint64_t{1} << n;
    std::vector<Word> out;
    out.reserve(count);
    for (std::uint64_t v = 0; v < count; ++v) {
        std::vector<Symbol> s(n);
        for (std::size_t i = 0; i < n; ++i) s[i] = bit_symbol(static_cast<int>((v >> (n - 1 - i)) & 1));
        out.emplace_back(std::move(s));
    }
    return out;
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
    // FNV-1a over symbols plus the length
    std::uint64_t h = 1469598103934665603ULL;
    for (auto s : w) {
        h ^= static_cast<std::uint64_t>(s) + 1;
        h *= 1099511628211ULL;
    }
    h ^= w.size();
    h *= 1099511628211ULL;
    return static_cast<std::size_t>(h);
}

}  // namespace delcode
