#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "delcode/bounds.hpp"
#include "delcode/code.hpp"
#include "delcode/counting.hpp"
#include "delcode/far.hpp"
#include "delcode/pattern.hpp"
#include "delcode/verifier.hpp"

namespace delcode {

using Json = nlohmann::ordered_json;

/// {"n": int, "errors": [{"pos": int, "kind": "D"|"E"|"F"}]}, positions
/// strictly increasing.
Json pattern_to_json(const ErrorPattern& g);
ErrorPattern pattern_from_json(const Json& j);
ErrorPattern parse_pattern(const std::string& text);

/// {"n","P","t","s","a1","a2"}; alphabets are rebuilt on load.
Json far_params_to_json(const FarParams& p);
FarParams far_params_from_json(const Json& j);

Json code_to_json(const Code& code);
Json bound_to_json(const BoundReport& r);
Json far_fraction_to_json(const FarFraction& f, std::size_t n, std::size_t t, double omega);
Json counterexample_to_json(const Counterexample& cx);
Json report_to_json(const VerifyReport& r);

/// One word per line, LF-terminated.
std::string codebook_to_text(const std::vector<Word>& words);

}  // namespace delcode
