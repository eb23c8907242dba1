#include "delcode/serialize.hpp"

namespace delcode {

Json pattern_to_json(const ErrorPattern& g) {
    Json errors = Json::array();
    for (const auto& [pos, kind] : g.errors()) errors.push_back({{"pos", pos}, {"kind", std::string(1, to_char(kind))}});
    return {{"n", g.n()}, {"errors", errors}};
}

ErrorPattern pattern_from_json(const Json& j) {
    try {
        if (!j.is_object() || !j.contains("n") || !j.contains("errors"))
            throw InvalidArgument("pattern JSON needs \"n\" and \"errors\"");
        const auto n = j.at("n").get<std::int64_t>();
        if (n < 0) throw InvalidArgument("pattern JSON: n must be non-negative");
        ErrorPattern g(static_cast<std::size_t>(n));
        std::int64_t prev = 0;
        for (const auto& e : j.at("errors")) {
            const auto pos = e.at("pos").get<std::int64_t>();
            const auto kind = e.at("kind").get<std::string>();
            if (pos < 1 || pos > n)
                throw InvalidArgument("pattern JSON: position " + std::to_string(pos) + " outside 1.." +
                                      std::to_string(n));
            if (pos <= prev) throw InvalidArgument("pattern JSON: positions must be strictly increasing");
            if (kind.size() != 1) throw InvalidArgument("pattern JSON: kind must be one of D, E, F");
            g.set(static_cast<std::size_t>(pos), parse_error_kind(kind[0]));
            prev = pos;
        }
        return g;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArgument(std::string("malformed pattern JSON: ") + e.what());
    }
}

ErrorPattern parse_pattern(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArgument(std::string("malformed pattern JSON: ") + e.what());
    }
    return pattern_from_json(j);
}

Json far_params_to_json(const FarParams& p) {
    return {{"n", p.n}, {"P", p.P}, {"t", p.t}, {"s", p.s}, {"a1", p.a1}, {"a2", p.a2}};
}

FarParams far_params_from_json(const Json& j) {
    try {
        auto p = far_params(j.at("n").get<std::size_t>(), j.at("P").get<std::size_t>(),
                            j.at("a1").get<std::size_t>(), j.at("a2").get<std::size_t>());
        if ((j.contains("t") && j.at("t").get<std::size_t>() != p.t) ||
            (j.contains("s") && j.at("s").get<std::size_t>() != p.s))
            throw InvalidArgument("far params JSON: t/s inconsistent with n = tP + s");
        return p;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArgument(std::string("malformed far params JSON: ") + e.what());
    }
}

Json code_to_json(const Code& code) {
    if (auto p = code.vt()) return {{"kind", "vt"}, {"n", p->n}, {"a", p->a}};
    if (auto p = code.rep()) return {{"kind", "rep"}, {"n", p->n}, {"t", p->t}, {"m", p->m}, {"pad", p->pad}};
    Json j = {{"kind", "far"}};
    j.update(far_params_to_json(*code.far()));
    return j;
}

Json bound_to_json(const BoundReport& r) {
    Json inputs = Json::object();
    for (const auto& [k, v] : r.inputs) inputs[k] = v;
    return {{"name", r.name}, {"inputs", inputs}, {"value", r.value}, {"applicability", r.applicability}};
}

Json far_fraction_to_json(const FarFraction& f, std::size_t n, std::size_t t, double omega) {
    return {{"n", n},
            {"t", t},
            {"omega", omega},
            {"P_n", f.far_spacing},
            {"farSpacing", 3 * f.far_spacing},
            {"farCount", to_string(f.far_count)},
            {"allCount", to_string(f.all_count)},
            {"fractionExact", to_string(numerator(f.fraction)) + "/" + to_string(denominator(f.fraction))},
            {"fraction", f.fraction_value},
            {"bound", f.bound},
            {"meetsBound", f.fraction_value >= f.bound},
            {"applicability", "guarantee stated for all n large; evaluated exactly at this n"}};
}

Json counterexample_to_json(const Counterexample& cx) {
    Json j = Json::object();
    if (cx.trial) j["trial"] = *cx.trial;
    j["x1"] = cx.x1.str();
    j["g1"] = pattern_to_json(cx.g1);
    if (cx.x2) j["x2"] = cx.x2->str();
    if (cx.g2) j["g2"] = pattern_to_json(*cx.g2);
    j["received"] = cx.received.str();
    if (cx.decoded) j["decoded"] = cx.decoded->str();
    else if (cx.trial || !cx.x2) j["decoded"] = nullptr;
    j["diagnostic"] = cx.diagnostic;
    return j;
}

Json report_to_json(const VerifyReport& r) {
    Json j = Json::object();
    j["mode"] = to_string(r.mode);
    if (!r.code.empty()) j["code"] = r.code;
    j["family"] = r.family;
    j["n"] = r.n;
    j["codebookSize"] = to_string(r.codebook_size);
    j["familySize"] = to_string(r.family_size);
    if (r.mode == VerifyMode::MonteCarlo) {
        j["trialCount"] = r.trials;
        j["seed"] = r.seed ? Json(*r.seed) : Json(nullptr);
        j["successRate"] = r.trials ? static_cast<double>(r.trials - r.failures) / static_cast<double>(r.trials) : 1.0;
    }
    j["cases"] = r.cases;
    j["failures"] = r.failures;
    j["decodeFailures"] = r.decode_failures;
    j["unavoidable"] = r.unavoidable;
    j["ambiguousMisses"] = r.ambiguous_misses;
    j["ambiguityCount"] = r.ambiguity_count;
    j["result"] = r.passed() ? "pass" : "fail";
    Json cxs = Json::array();
    for (const auto& cx : r.counterexamples) cxs.push_back(counterexample_to_json(cx));
    j["counterexample"] = r.counterexamples.empty() ? Json(nullptr) : cxs.front();
    j["counterexamples"] = cxs;
    return j;
}

std::string codebook_to_text(const std::vector<Word>& words) {
    std::string out;
    for (const auto& w : words) {
        out += w.str();
        out += '\n';
    }
    return out;
}

}  // namespace delcode
