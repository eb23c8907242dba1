#include "delcode/rep.hpp"

#include <algorithm>

namespace delcode {

RepParams::RepParams(std::size_t n_, std::size_t t_) : n(n_), t(t_) {
    const std::size_t q = 2 * t + 1;
    if (q > n)
        throw InvalidArgument("repetition code needs 2t+1 <= n (got n=" + std::to_string(n) +
                              ", t=" + std::to_string(t) + ")");
    m = n / q;
    pad = n - m * q;
}

Word rep_encode(const RepParams& p, const Word& info) {
    if (info.size() != p.m)
        throw InvalidArgument("rep_encode: info length " + std::to_string(info.size()) + " != m=" +
                              std::to_string(p.m));
    require_erasure_free(info, "rep_encode");
    Word x;
    for (auto s : info)
        for (std::size_t r = 0; r < p.block(); ++r) x.push_back(s);
    for (std::size_t r = 0; r < p.pad; ++r) x.push_back(Symbol::Zero);
    return x;
}

RepDecodeResult rep_decode(const RepParams& p, const Word& z) {
    RepDecodeResult out;

    std::size_t trailing = 0;
    while (trailing < z.size() && z[z.size() - 1 - trailing] == Symbol::Zero) ++trailing;
    out.zeros_removed = std::min(trailing, p.pad);
    const std::size_t len = z.size() - out.zeros_removed;

    const std::size_t q = p.block();
    // a flip or erasure inside the pad stops the zero strip early; whatever
    // is left past m full blocks is pad residue
    if (z.size() > p.n || len <= (p.m - 1) * q) {
        const std::size_t blocks = z.size() > p.n ? 0 : (len + q - 1) / q;
        out.failure = z.size() > p.n ? "received word longer than n=" + std::to_string(p.n)
                                     : "received word splits into " + std::to_string(blocks) +
                                           " blocks, expected m=" + std::to_string(p.m);
        return out;
    }
    const std::size_t blocks = p.m;
    const std::size_t used = std::min(len, p.m * q);

    Word info;
    for (std::size_t j = 0; j < blocks; ++j) {
        std::size_t ones = 0;
        std::size_t zeros = 0;
        for (std::size_t i = j * q; i < std::min(used, (j + 1) * q); ++i) {
            if (z[i] == Symbol::One) ++ones;
            else if (z[i] == Symbol::Zero) ++zeros;
        }
        if (ones == zeros) out.tied_blocks.push_back(j + 1);
        info.push_back(ones > zeros ? Symbol::One : Symbol::Zero);
    }
    out.info = std::move(info);
    return out;
}

}  // namespace delcode
