#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "delcode/counting.hpp"
#include "delcode/far.hpp"
#include "delcode/random.hpp"
#include "delcode/rep.hpp"
#include "delcode/vt.hpp"

namespace delcode {

enum class CodeKind { Vt, Rep, Far };

struct CodeDecode {
    std::optional<Word> codeword;  // estimate in codeword space, empty on failure
    bool ambiguous = false;
    std::string diagnostic;
};

/// One of the three constructions behind a uniform codebook/decoder surface.
class Code {
public:
    explicit Code(VtParams p) : params_(std::move(p)) {}
    explicit Code(RepParams p) : params_(std::move(p)) {}
    explicit Code(FarParams p) : params_(std::move(p)) {}

    CodeKind kind() const noexcept { return static_cast<CodeKind>(params_.index()); }
    std::string name() const;
    /// e.g. "far(n=12,P=3,a1=1,a2=1)".
    std::string describe() const;
    std::size_t n() const;
    BigInt size() const;
    bool contains(const Word& x) const;

    /// Every codeword, in index order. Throws BudgetExceeded above `cap`.
    std::vector<Word> codebook(std::uint64_t cap) const;
    /// Uniform codeword drawn from `rng`.
    Word random_codeword(Rng& rng) const;

    /// Runs the matching decoder; rep estimates are re-encoded so all
    /// results live in codeword space.
    CodeDecode decode(const Word& y) const;

    const VtParams* vt() const { return std::get_if<VtParams>(&params_); }
    const RepParams* rep() const { return std::get_if<RepParams>(&params_); }
    const FarParams* far() const { return std::get_if<FarParams>(&params_); }

private:
    std::variant<VtParams, RepParams, FarParams> params_;
};

}  // namespace delcode
