#include "delcode/vt.hpp"

#include <algorithm>
#include <string>

namespace delcode {

VtParams::VtParams(std::size_t n_, std::size_t a_) : n(n_), a(a_) {
    if (n < 1) throw InvalidArgument("VT code length must be >= 1");
    if (a > n) throw InvalidArgument("VT residue " + std::to_string(a) + " outside 0.." + std::to_string(n));
}

std::uint64_t vt_checksum(const Word& x) {
    require_erasure_free(x, "vt_checksum");
    std::uint64_t sum = 0;
    for (std::size_t i = 0; i < x.size(); ++i) sum += (i + 1) * static_cast<std::uint64_t>(x.bit(i));
    return sum;
}

bool vt_contains(const VtParams& p, const Word& x) {
    if (x.size() != p.n)
        throw InvalidArgument("vt_contains: word length " + std::to_string(x.size()) + " != n=" +
                              std::to_string(p.n));
    return vt_checksum(x) % p.modulus() == p.a;
}

namespace {

void check_cap(std::size_t n, std::size_t cap) {
    if (n > cap)
        throw BudgetExceeded("VT enumeration at n=" + std::to_string(n) + " exceeds the cap n<=" +
                             std::to_string(cap));
}

// Walks all 2^n words in lexicographic order with their checksums.
template <typename Fn>
void for_each_word_checksum(std::size_t n, Fn&& fn) {
    const std::uint64_t count = std::uint64_t{1} << n;
    for (std::uint64_t v = 0; v < count; ++v) {
        std::uint64_t cs = 0;
        for (std::size_t i = 0; i < n; ++i)
            if ((v >> (n - 1 - i)) & 1) cs += i + 1;
        fn(v, cs);
    }
}

Word word_from_value(std::uint64_t v, std::size_t n) {
    std::vector<Symbol> s(n);
    for (std::size_t i = 0; i < n; ++i) s[i] = bit_symbol(static_cast<int>((v >> (n - 1 - i)) & 1));
    return Word(std::move(s));
}

std::size_t mod(std::int64_t v, std::size_t m) {
    const auto mm = static_cast<std::int64_t>(m);
    return static_cast<std::size_t>(((v % mm) + mm) % mm);
}

}  // namespace

std::vector<Word> vt_enumerate(const VtParams& p, std::size_t cap) {
    check_cap(p.n, cap);
    std::vector<Word> out;
    for_each_word_checksum(p.n, [&](std::uint64_t v, std::uint64_t cs) {
        if (cs % p.modulus() == p.a) out.push_back(word_from_value(v, p.n));
    });
    return out;
}

std::vector<std::uint64_t> vt_class_sizes(std::size_t n, std::size_t cap) {
    if (n < 1) throw InvalidArgument("VT code length must be >= 1");
    check_cap(n, cap);
    std::vector<std::uint64_t> sizes(n + 1, 0);
    for_each_word_checksum(n, [&](std::uint64_t, std::uint64_t cs) { ++sizes[cs % (n + 1)]; });
    return sizes;
}

ResidueChoice vt_best_residue(std::size_t n, std::size_t cap) {
    const auto sizes = vt_class_sizes(n, cap);
    const auto it = std::max_element(sizes.begin(), sizes.end());
    return {static_cast<std::size_t>(it - sizes.begin()), *it};
}

Word correct_erasure(const VtParams& p, const Word& y) {
    if (y.size() != p.n)
        throw InvalidArgument("correct_erasure: word length " + std::to_string(y.size()) + " != n=" +
                              std::to_string(p.n));
    if (y.erasure_count() != 1)
        throw InvalidArgument("correct_erasure: expected exactly one erasure, found " +
                              std::to_string(y.erasure_count()));

    std::size_t k = 0;
    std::uint64_t partial = 0;
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (y[i] == Symbol::Erasure) k = i + 1;
        else partial += (i + 1) * static_cast<std::uint64_t>(y.bit(i));
    }
    const std::size_t discrepancy = mod(static_cast<std::int64_t>(partial) - static_cast<std::int64_t>(p.a), p.modulus());
    Word x = y;
    x[k - 1] = discrepancy == 0 ? Symbol::Zero : Symbol::One;
    if (!vt_contains(p, x))
        throw DecodeError("correct_erasure: no bit value at position " + std::to_string(k) +
                          " yields a codeword of VT_" + std::to_string(p.a) + "(" + std::to_string(p.n) + ")");
    return x;
}

FlipCorrection correct_flip(const VtParams& p, const Word& y) {
    if (y.size() != p.n)
        throw InvalidArgument("correct_flip: word length " + std::to_string(y.size()) + " != n=" +
                              std::to_string(p.n));
    require_erasure_free(y, "correct_flip");

    const std::size_t r = mod(static_cast<std::int64_t>(vt_checksum(y)) - static_cast<std::int64_t>(p.a), p.modulus());
    if (r == 0) throw DecodeError("correct_flip: word is already a codeword");

    // A: x_r = 0 flipped up (discrepancy +r). B: x_{n+1-r} = 1 flipped down (discrepancy -(n+1-r)).
    const std::size_t pos_a = r;
    const std::size_t pos_b = p.n + 1 - r;
    const bool valid_a = y[pos_a - 1] == Symbol::One;
    const bool valid_b = y[pos_b - 1] == Symbol::Zero;

    auto restored = [&](std::size_t pos) {
        Word x = y;
        x[pos - 1] = bit_symbol(1 - y.bit(pos - 1));
        return x;
    };

    if (!valid_a && !valid_b)
        throw DecodeError("correct_flip: no single flip reaches VT_" + std::to_string(p.a) + "(" +
                          std::to_string(p.n) + ") from " + y.str());

    FlipCorrection out;
    if (valid_a) {
        out.word = restored(pos_a);
        out.position = pos_a;
        if (valid_b) {
            out.ambiguous = true;
            out.alternative = restored(pos_b);
        }
    } else {
        out.word = restored(pos_b);
        out.position = pos_b;
    }
    return out;
}

Word correct_deletion(const VtParams& p, const Word& y, std::size_t* inserted_at) {
    if (y.size() + 1 != p.n)
        throw InvalidArgument("correct_deletion: word length " + std::to_string(y.size()) +
                              " != n-1=" + std::to_string(p.n - 1));
    require_erasure_free(y, "correct_deletion");

    const std::size_t len = y.size();
    const std::size_t w = y.weight();
    const std::size_t d =
        mod(static_cast<std::int64_t>(p.a) - static_cast<std::int64_t>(vt_checksum(y)), p.modulus());

    std::size_t f = 0;
    Symbol bit = Symbol::Zero;
    if (d <= w) {
        // f = max{j : sum_{i=j}^{n-1} y_i = D}; j = n gives the empty sum.
        std::size_t suffix = 0;
        for (std::size_t j = len + 1; j >= 1; --j) {
            if (j <= len) suffix += static_cast<std::size_t>(y.bit(j - 1));
            if (suffix == d) {
                f = j;
                break;
            }
            if (suffix > d) break;
        }
    } else {
        // f = min{j : number of zeros among y_1..y_{j-1} = D - w - 1}.
        bit = Symbol::One;
        const std::size_t target = d - w - 1;
        std::size_t zeros = 0;
        for (std::size_t j = 1; j <= len + 1; ++j) {
            if (zeros == target) {
                f = j;
                break;
            }
            if (j <= len && y[j - 1] == Symbol::Zero) ++zeros;
        }
    }
    if (f == 0)
        throw DecodeError("correct_deletion: " + y.str() + " is not one deletion away from VT_" +
                          std::to_string(p.a) + "(" + std::to_string(p.n) + ")");

    Word x = y.inserted(f - 1, bit);
    if (!vt_contains(p, x)) throw DecodeError("correct_deletion: reconstruction left the code");
    if (inserted_at) *inserted_at = f;
    return x;
}

SingleCorrection correct_single(const VtParams& p, const Word& y) {
    SingleCorrection out;
    if (y.has_erasure()) {
        out.word = correct_erasure(p, y);
        out.action = SingleCorrection::Action::Erasure;
        return out;
    }
    if (y.size() + 1 == p.n) {
        out.word = correct_deletion(p, y);
        out.action = SingleCorrection::Action::Deletion;
        return out;
    }
    if (y.size() != p.n)
        throw DecodeError("correct_single: length " + std::to_string(y.size()) +
                          " is outside the single-error model (expected " + std::to_string(p.n - 1) + " or " +
                          std::to_string(p.n) + ")");
    if (vt_contains(p, y)) {
        out.word = y;
        return out;
    }
    auto flip = correct_flip(p, y);
    out.word = std::move(flip.word);
    out.action = SingleCorrection::Action::Flip;
    out.ambiguous = flip.ambiguous;
    return out;
}

}  // namespace delcode
