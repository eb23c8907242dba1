#include "delcode/far.hpp"

#include <algorithm>

namespace delcode {

namespace {

bool is_constant(const Word& w) {
    return std::all_of(w.begin(), w.end(), [&](Symbol s) { return s == w[0]; });
}

std::vector<Word> non_constant(std::vector<Word> words) {
    std::erase_if(words, [](const Word& w) { return is_constant(w); });
    return words;
}

}  // namespace

FarParams far_params(std::size_t n, std::size_t P, std::size_t a1, std::size_t a2) {
    if (P < 3) throw InvalidArgument("far code: block length P must be >= 3");
    if (n < 2 * P) throw InvalidArgument("far code: n must be >= 2P (at least two blocks)");
    FarParams p;
    p.n = n;
    p.P = P;
    p.t = n / P;
    p.s = n % P;
    if (a1 > P) throw InvalidArgument("far code: a1 outside 0..P");
    if (a2 > P + p.s) throw InvalidArgument("far code: a2 outside 0..P+s");
    p.a1 = a1;
    p.a2 = a2;
    p.inner_alphabet = non_constant(vt_enumerate(VtParams(P, a1)));
    p.final_alphabet = vt_enumerate(VtParams(P + p.s, a2));
    if (p.inner_alphabet.empty())
        throw InvalidArgument("far code: VT_" + std::to_string(a1) + "(" + std::to_string(P) +
                              ") has no non-constant words");
    return p;
}

FarParams far_params(std::size_t n, std::size_t P) {
    if (P < 3) throw InvalidArgument("far code: block length P must be >= 3");
    if (n < 2 * P) throw InvalidArgument("far code: n must be >= 2P (at least two blocks)");
    const std::size_t s = n % P;

    std::size_t a1 = 0;
    std::size_t best_inner = 0;
    for (std::size_t a = 0; a <= P; ++a) {
        const std::size_t usable = non_constant(vt_enumerate(VtParams(P, a))).size();
        if (usable > best_inner) {
            best_inner = usable;
            a1 = a;
        }
    }

    const auto sizes = vt_class_sizes(P + s);
    const auto best_final = *std::max_element(sizes.begin(), sizes.end());
    std::size_t a2 = static_cast<std::size_t>(std::find(sizes.begin(), sizes.end(), best_final) - sizes.begin());
    if (a1 < sizes.size() && sizes[a1] == best_final) a2 = a1;

    return far_params(n, P, a1, a2);
}

BigInt FarParams::size() const {
    return boost::multiprecision::pow(BigInt(inner_alphabet.size()), static_cast<unsigned>(t - 1)) *
           final_alphabet.size();
}

double FarParams::redundancy() const { return delcode::redundancy(n, size()); }

std::optional<std::vector<std::size_t>> FarParams::index_of(const Word& x) const {
    if (x.size() != n || x.has_erasure()) return std::nullopt;
    std::vector<std::size_t> idx;
    idx.reserve(t);
    for (std::size_t b = 0; b < t; ++b) {
        const auto& alphabet = b + 1 < t ? inner_alphabet : final_alphabet;
        const Word block = x.slice(b * P, b + 1 < t ? P : P + s);
        auto it = std::lower_bound(alphabet.begin(), alphabet.end(), block);
        if (it == alphabet.end() || *it != block) return std::nullopt;
        idx.push_back(static_cast<std::size_t>(it - alphabet.begin()));
    }
    return idx;
}

Word far_encode(const FarParams& p, const std::vector<std::size_t>& indices) {
    if (indices.size() != p.t)
        throw InvalidArgument("far_encode: expected " + std::to_string(p.t) + " indices, got " +
                              std::to_string(indices.size()));
    Word x;
    for (std::size_t b = 0; b < p.t; ++b) {
        const auto& alphabet = b + 1 < p.t ? p.inner_alphabet : p.final_alphabet;
        if (indices[b] >= alphabet.size())
            throw InvalidArgument("far_encode: index " + std::to_string(indices[b]) + " of block " +
                                  std::to_string(b + 1) + " outside 0.." + std::to_string(alphabet.size() - 1));
        x.append(alphabet[indices[b]]);
    }
    return x;
}

std::size_t checksum_difference(const Word& block, std::size_t a, std::size_t modulus) {
    require_erasure_free(block, "checksum_difference");
    const std::uint64_t cs = vt_checksum(block) % modulus;
    return static_cast<std::size_t>((cs + modulus - a % modulus) % modulus);
}

std::size_t far_iteration_cap(const FarParams& p) { return (p.n + 3 * p.P - 1) / (3 * p.P) + 1; }

namespace {

struct DecodeFailure {
    std::string message;
};

/// Working state of one decode: the current estimate plus block geometry.
class SequentialDecoder {
public:
    SequentialDecoder(const FarParams& p, Word y) : p_(p), cur_(std::move(y)) {}

    FarDecodeResult run() {
        try {
            const std::size_t cap = far_iteration_cap(p_);
            while (true) {
                const auto mismatch = scan();
                if (!mismatch) {
                    finish();
                    return std::move(result_);
                }
                if (++result_.iterations > cap)
                    throw DecodeFailure{"iteration cap " + std::to_string(cap) + " exceeded"};
                repair(*mismatch);
            }
        } catch (const DecodeFailure& f) {
            result_.failure = f.message;
        } catch (const DecodeError& e) {
            result_.failure = e.what();
        } catch (const InvalidArgument& e) {
            result_.failure = e.what();
        }
        result_.word.reset();
        return std::move(result_);
    }

private:
    std::size_t start(std::size_t block) const { return (block - 1) * p_.P; }
    bool is_final(std::size_t block) const { return block == p_.t; }

    std::size_t final_len() const {
        const std::size_t s = start(p_.t);
        return cur_.size() >= s ? cur_.size() - s : 0;
    }

    std::size_t len(std::size_t block) const { return is_final(block) ? final_len() : p_.P; }

    Word block(std::size_t b) const {
        if (!is_final(b) && cur_.size() < start(b) + p_.P)
            throw DecodeFailure{"block " + std::to_string(b) + " is incomplete (received word too short)"};
        if (is_final(b) && cur_.size() < start(b))
            throw DecodeFailure{"final block is missing (received word too short)"};
        return cur_.slice(start(b), len(b));
    }

    void splice(std::size_t b, const Word& replacement) {
        Word next = cur_.slice(0, start(b));
        next.append(replacement);
        next.append(cur_.slice(start(b) + len(b), cur_.size()));
        cur_ = std::move(next);
    }

    VtParams code_for(std::size_t b) const { return is_final(b) ? p_.final_code() : p_.inner_code(); }

    bool final_intact() const { return final_len() == p_.final_length(); }

    // Scans blocks left to right, repairing erasures in place. Returns the
    // first block whose checksum difference is nonzero, or whose length rules
    // out a checksum comparison (a shortened final block).
    std::optional<std::size_t> scan() {
        for (std::size_t b = 1; b <= p_.t; ++b) {
            Word blk = block(b);
            if (blk.has_erasure()) {
                if (is_final(b) && !final_intact())
                    throw DecodeFailure{"erasure in a shortened final block"};
                if (blk.erasure_count() > 1)
                    throw DecodeFailure{"block " + std::to_string(b) + " holds " +
                                        std::to_string(blk.erasure_count()) + " erasures"};
                blk = correct_erasure(code_for(b), blk);
                splice(b, blk);
                ++result_.erasures_fixed;
                result_.trace.push_back("block " + std::to_string(b) + ": erasure filled");
            }
            if (is_final(b) && !final_intact()) return b;
            const auto code = code_for(b);
            if (checksum_difference(blk, code.a, code.modulus()) != 0) return b;
        }
        return std::nullopt;
    }

    Word flip_repair(std::size_t b, const Word& blk) {
        auto fix = correct_flip(code_for(b), blk);
        if (fix.ambiguous) {
            // Inner blocks never hold constant words; that settles some ties.
            const auto& alphabet = is_final(b) ? p_.final_alphabet : p_.inner_alphabet;
            auto member = [&](const Word& w) { return std::binary_search(alphabet.begin(), alphabet.end(), w); };
            const bool a_ok = member(fix.word);
            const bool b_ok = member(fix.alternative);
            if (!a_ok && b_ok) {
                std::swap(fix.word, fix.alternative);
            } else if (a_ok && b_ok) {
                ++result_.ambiguous_flips;
                result_.trace.push_back("block " + std::to_string(b) + ": ambiguous flip, kept " + fix.word.str() +
                                        " over " + fix.alternative.str());
            }
        }
        result_.trace.push_back("block " + std::to_string(b) + ": flip repaired -> " + fix.word.str());
        return fix.word;
    }

    // Deletion inside block b: the last received bit of the block belongs to
    // block b+1, so drop it, repair, and put it back after the block.
    Word deletion_repair(std::size_t b, const Word& blk) {
        Word head = blk.slice(0, blk.size() - 1);
        Word fixed = correct_deletion(code_for(b), head);
        fixed.push_back(blk[blk.size() - 1]);
        return fixed;
    }

    void repair(std::size_t j) {
        // A mismatch at j can come from a deletion in block j-1 whose own
        // checksum happened to survive. Block 1 has no predecessor.
        if (j >= 2) {
            const std::size_t prev = j - 1;
            const Word blk = block(prev);
            const Word head = blk.slice(0, blk.size() - 1);
            const Word candidate = correct_deletion(p_.inner_code(), head);
            if (candidate != blk) {
                Word replacement = candidate;
                replacement.push_back(blk[blk.size() - 1]);
                splice(prev, replacement);
                result_.trace.push_back("block " + std::to_string(prev) + ": deletion repaired -> " +
                                        candidate.str());
                return;
            }
        }

        const Word blk = block(j);
        if (is_final(j)) {
            if (final_intact()) {
                splice(j, flip_repair(j, blk));
            } else if (final_len() + 1 == p_.final_length()) {
                const Word fixed = correct_deletion(p_.final_code(), blk);
                splice(j, fixed);
                result_.trace.push_back("block " + std::to_string(j) + ": deletion repaired -> " + fixed.str());
            } else {
                throw DecodeFailure{"final block has " + std::to_string(final_len()) + " bits, expected " +
                                    std::to_string(p_.final_length()) + " or one fewer"};
            }
            return;
        }

        // Flip or deletion in block j: a deletion shifts block j+1 left by one,
        // which always breaks its checksum; a flip leaves it intact.
        bool deletion = true;
        const std::size_t next = j + 1;
        if (!is_final(next) || final_intact()) {
            const Word nb = block(next);
            if (nb.has_erasure()) throw DecodeFailure{"block " + std::to_string(next) + " still holds an erasure"};
            const auto code = code_for(next);
            deletion = checksum_difference(nb, code.a, code.modulus()) != 0;
        }
        if (deletion) {
            const Word fixed = deletion_repair(j, blk);
            splice(j, fixed);
            result_.trace.push_back("block " + std::to_string(j) + ": deletion repaired -> " +
                                    fixed.slice(0, p_.P).str());
        } else {
            splice(j, flip_repair(j, blk));
        }
    }

    void finish() {
        if (cur_.size() != p_.n)
            throw DecodeFailure{"checksums match but length is " + std::to_string(cur_.size()) + ", expected " +
                                std::to_string(p_.n)};
        if (!p_.contains(cur_)) {
            // A checksum-valid constant inner block is the only way to get here.
            throw DecodeFailure{"checksums match but " + cur_.str() + " is not a codeword"};
        }
        result_.word = cur_;
    }

    const FarParams& p_;
    Word cur_;
    FarDecodeResult result_;
};

}  // namespace

FarDecodeResult far_decode(const FarParams& p, const Word& y) { return SequentialDecoder(p, y).run(); }

}  // namespace delcode
