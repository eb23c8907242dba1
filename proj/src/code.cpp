#include "delcode/code.hpp"

namespace delcode {

std::string Code::name() const {
    switch (kind()) {
    case CodeKind::Vt: return "vt";
    case CodeKind::Rep: return "rep";
    case CodeKind::Far: return "far";
    }
    return "?";
}

std::string Code::describe() const {
    if (auto p = vt()) return "vt(n=" + std::to_string(p->n) + ",a=" + std::to_string(p->a) + ")";
    if (auto p = rep()) return "rep(n=" + std::to_string(p->n) + ",t=" + std::to_string(p->t) + ")";
    const auto* p = far();
    return "far(n=" + std::to_string(p->n) + ",P=" + std::to_string(p->P) + ",a1=" + std::to_string(p->a1) +
           ",a2=" + std::to_string(p->a2) + ")";
}

std::size_t Code::n() const {
    return std::visit([](const auto& p) { return p.n; }, params_);
}

BigInt Code::size() const {
    if (auto p = vt()) return vt_class_sizes(p->n)[p->a];
    if (auto p = rep()) return BigInt(1) << p->m;
    return far()->size();
}

bool Code::contains(const Word& x) const {
    if (x.size() != n() || x.has_erasure()) return false;
    if (auto p = vt()) return vt_contains(*p, x);
    if (auto p = rep()) {
        auto d = rep_decode(*p, x);
        return d.ok() && rep_encode(*p, *d.info) == x;
    }
    return far()->contains(x);
}

std::vector<Word> Code::codebook(std::uint64_t cap) const {
    const BigInt total = size();
    if (total > cap)
        throw BudgetExceeded(describe() + " has " + to_string(total) + " codewords, above the cap of " +
                             std::to_string(cap));
    if (auto p = vt()) return vt_enumerate(*p);
    std::vector<Word> out;
    if (auto p = rep()) {
        for (const auto& info : all_binary_words(p->m)) out.push_back(rep_encode(*p, info));
        return out;
    }
    const auto& p = *far();
    std::vector<std::size_t> idx(p.t, 0);
    while (true) {
        out.push_back(far_encode(p, idx));
        std::size_t b = p.t;
        while (b > 0) {
            const std::size_t radix = b == p.t ? p.final_alphabet.size() : p.inner_alphabet.size();
            if (++idx[b - 1] < radix) break;
            idx[b - 1] = 0;
            --b;
        }
        if (b == 0) return out;
    }
}

Word Code::random_codeword(Rng& rng) const {
    if (auto p = vt()) {
        // Rejection: each residue class holds about 2^n/(n+1) words.
        while (true) {
            Word w;
            for (std::size_t i = 0; i < p->n; ++i) w.push_back(bit_symbol(static_cast<int>(rng.below(2))));
            if (vt_contains(*p, w)) return w;
        }
    }
    if (auto p = rep()) {
        Word info;
        for (std::size_t i = 0; i < p->m; ++i) info.push_back(bit_symbol(static_cast<int>(rng.below(2))));
        return rep_encode(*p, info);
    }
    const auto& p = *far();
    std::vector<std::size_t> idx(p.t);
    for (std::size_t b = 0; b < p.t; ++b) {
        const std::size_t radix = b + 1 == p.t ? p.final_alphabet.size() : p.inner_alphabet.size();
        idx[b] = static_cast<std::size_t>(rng.below(radix));
    }
    return far_encode(p, idx);
}

CodeDecode Code::decode(const Word& y) const {
    CodeDecode out;
    if (auto p = vt()) {
        try {
            auto r = correct_single(*p, y);
            out.codeword = std::move(r.word);
            out.ambiguous = r.ambiguous;
            if (r.ambiguous) out.diagnostic = "ambiguous flip";
        } catch (const std::exception& e) {
            out.diagnostic = e.what();
        }
        return out;
    }
    if (auto p = rep()) {
        auto r = rep_decode(*p, y);
        if (!r.ok()) {
            out.diagnostic = r.failure;
            return out;
        }
        out.codeword = rep_encode(*p, *r.info);
        if (!r.tied_blocks.empty()) out.diagnostic = std::to_string(r.tied_blocks.size()) + " tied block(s)";
        return out;
    }
    auto r = far_decode(*far(), y);
    out.codeword = std::move(r.word);
    out.ambiguous = r.ambiguous_flips > 0;
    out.diagnostic = r.ok() ? (out.ambiguous ? "ambiguous flip" : "") : r.failure;
    return out;
}

}  // namespace delcode
