#include "delcode/pattern.hpp"

#include <algorithm>
#include <tuple>

namespace delcode {

char to_char(ErrorKind k) {
    switch (k) {
    case ErrorKind::Deletion: return 'D';
    case ErrorKind::Erasure: return 'E';
    case ErrorKind::Flip: return 'F';
    }
    return '?';
}

ErrorKind parse_error_kind(char c) {
    switch (c) {
    case 'D': return ErrorKind::Deletion;
    case 'E': return ErrorKind::Erasure;
    case 'F': return ErrorKind::Flip;
    default: throw InvalidArgument(std::string("unknown error kind '") + c + "'");
    }
}

ErrorPattern::ErrorPattern(std::size_t n, std::map<std::size_t, ErrorKind> errors)
    : n_(n), errors_(std::move(errors)) {
    for (const auto& [pos, kind] : errors_) {
        if (pos < 1 || pos > n_)
            throw InvalidArgument("error position " + std::to_string(pos) + " outside 1.." +
                                  std::to_string(n_));
    }
}

std::size_t ErrorPattern::deletions() const noexcept {
    return static_cast<std::size_t>(std::count_if(errors_.begin(), errors_.end(), [](const auto& e) {
        return e.second == ErrorKind::Deletion;
    }));
}

void ErrorPattern::set(std::size_t pos, ErrorKind kind) {
    if (pos < 1 || pos > n_)
        throw InvalidArgument("error position " + std::to_string(pos) + " outside 1.." + std::to_string(n_));
    errors_[pos] = kind;
}

std::optional<ErrorKind> ErrorPattern::at(std::size_t pos) const {
    auto it = errors_.find(pos);
    if (it == errors_.end()) return std::nullopt;
    return it->second;
}

std::string ErrorPattern::str() const {
    std::string s = "n=" + std::to_string(n_) + " {";
    bool first_entry = true;
    for (const auto& [pos, kind] : errors_) {
        if (!first_entry) s += ',';
        first_entry = false;
        s += std::to_string(pos) + ':' + to_char(kind);
    }
    return s + '}';
}

// Enumeration order: weight, then support, then kinds (D < E < F).
bool operator<(const ErrorPattern& a, const ErrorPattern& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    if (a.weight() != b.weight()) return a.weight() < b.weight();
    auto ia = a.errors_.begin();
    auto ib = b.errors_.begin();
    for (; ia != a.errors_.end(); ++ia, ++ib) {
        if (ia->first != ib->first) return ia->first < ib->first;
    }
    ia = a.errors_.begin();
    ib = b.errors_.begin();
    for (; ia != a.errors_.end(); ++ia, ++ib) {
        if (ia->second != ib->second) return ia->second < ib->second;
    }
    return false;
}

Word apply_pattern(const Word& x, const ErrorPattern& g) {
    if (x.size() != g.n())
        throw InvalidArgument("apply_pattern: word length " + std::to_string(x.size()) +
                              " does not match pattern length " + std::to_string(g.n()));
    require_erasure_free(x, "apply_pattern");

    Word y;
    auto next = g.errors().begin();
    for (std::size_t i = 0; i < x.size(); ++i) {
        const std::size_t pos = i + 1;
        if (next == g.errors().end() || next->first != pos) {
            y.push_back(x[i]);
            continue;
        }
        switch (next->second) {
        case ErrorKind::Deletion: break;
        case ErrorKind::Erasure: y.push_back(Symbol::Erasure); break;
        case ErrorKind::Flip: y.push_back(bit_symbol(1 - x.bit(i))); break;
        }
        ++next;
    }
    return y;
}

}  // namespace delcode
