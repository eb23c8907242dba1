// delcode: command-line front end for the deletable-error coding library.
//
// Every command prints {"config": ..., "report": ...} as JSON (or a short
// human summary with --format text). Exit status: 0 ok/pass, 1 usage error,
// 2 verification failure, 3 budget exceeded.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "delcode/bounds.hpp"
#include "delcode/code.hpp"
#include "delcode/counting.hpp"
#include "delcode/family.hpp"
#include "delcode/serialize.hpp"
#include "delcode/verifier.hpp"
#include "delcode/vt.hpp"

using namespace delcode;

namespace {

constexpr std::size_t kInlineWordLimit = 4096;

enum Exit { kOk = 0, kUsage = 1, kFail = 2, kBudget = 3 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string trim(std::string s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

/// Inline text, or the contents of a file when prefixed with '@'.
std::string inline_or_file(const std::string& arg) {
    if (!arg.empty() && arg.front() == '@') return trim(read_file(arg.substr(1)));
    return arg;
}

Word read_word(const std::string& arg) {
    const bool from_file = !arg.empty() && arg.front() == '@';
    const std::string text = inline_or_file(arg);
    if (!from_file && text.size() > kInlineWordLimit)
        throw UsageError("inline words are limited to " + std::to_string(kInlineWordLimit) +
                         " symbols; pass @path instead");
    return Word::parse(text);
}

std::vector<Word> read_codebook(const std::string& path) {
    std::istringstream in(read_file(path));
    std::vector<Word> out;
    std::string line;
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty()) continue;
        Word w = Word::parse(line);
        require_erasure_free(w, "codebook");
        if (!out.empty() && w.size() != out.front().size()) throw UsageError("codebook words differ in length");
        out.push_back(std::move(w));
    }
    if (out.empty()) throw UsageError("codebook '" + path + "' is empty");
    return out;
}

std::uint64_t budget_from_env(std::uint64_t fallback) {
    const char* env = std::getenv("DELCODE_BUDGET");
    if (!env || !*env) return fallback;
    try {
        std::size_t used = 0;
        const auto v = std::stoull(env, &used);
        if (used != std::string(env).size()) throw std::invalid_argument(env);
        return v;
    } catch (const std::exception&) {
        throw UsageError(std::string("DELCODE_BUDGET is not a number: ") + env);
    }
}

// Code selection shared by encode/decode/verify/simulate.
struct CodeArgs {
    std::string kind;
    std::optional<std::size_t> n, a, t, P, a1, a2;

    void add(CLI::App* app, const std::vector<std::string>& kinds) {
        app->add_option("--code", kind, "code construction")->check(CLI::IsMember(kinds));
        app->add_option("--n", n, "code length");
        app->add_option("--a", a, "VT residue");
        app->add_option("--t", t, "repetition error budget");
        app->add_option("--P", P, "far block length");
        app->add_option("--a1", a1, "far inner residue");
        app->add_option("--a2", a2, "far final residue");
    }

    std::size_t need(const std::optional<std::size_t>& v, const char* flag) const {
        if (!v) throw UsageError("--code " + kind + " needs " + flag);
        return *v;
    }

    Code build() const {
        if (kind.empty()) throw UsageError("--code is required");
        if (kind == "vt") return Code(VtParams{need(n, "--n"), a.value_or(0)});
        if (kind == "rep") return Code(RepParams(need(n, "--n"), need(t, "--t")));
        if (a1.has_value() != a2.has_value()) throw UsageError("--a1 and --a2 go together");
        if (a1) return Code(far_params(need(n, "--n"), need(P, "--P"), *a1, *a2));
        return Code(far_params(need(n, "--n"), need(P, "--P")));
    }
};

struct Output {
    std::string format = "json";
    Json config = Json::object();

    void emit(const Json& report, const std::string& text) const {
        if (format == "text") {
            std::cout << text;
            if (!text.empty() && text.back() != '\n') std::cout << '\n';
            return;
        }
        Json out = Json::object();
        out["config"] = config;
        out["report"] = report;
        std::cout << out.dump(2) << '\n';
    }
};

std::map<std::string, double> parse_params(const std::string& text) {
    std::map<std::string, double> out;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        item = trim(item);
        if (item.empty()) continue;
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw UsageError("--params entries look like key=value, got '" + item + "'");
        try {
            std::size_t used = 0;
            const std::string v = trim(item.substr(eq + 1));
            out[trim(item.substr(0, eq))] = std::stod(v, &used);
            if (used != v.size()) throw std::invalid_argument(v);
        } catch (const std::invalid_argument&) {
            throw UsageError("--params value for '" + item.substr(0, eq) + "' is not a number");
        }
    }
    return out;
}

std::vector<std::size_t> parse_indices(const std::string& text) {
    std::vector<std::size_t> out;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        item = trim(item);
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
            throw UsageError("far --info is a comma-separated list of block indices");
        out.push_back(std::stoull(item));
    }
    return out;
}

std::string verdict_text(const VerifyReport& r) {
    std::ostringstream s;
    s << to_string(r.mode) << " " << (r.code.empty() ? "codebook" : r.code) << " family " << r.family << ": "
      << (r.passed() ? "pass" : "fail") << ", " << r.cases << " cases, " << r.failures << " failures";
    if (r.ambiguity_count) s << ", " << r.ambiguity_count << " ambiguous";
    if (!r.counterexamples.empty()) s << "\nfirst counterexample: " << counterexample_to_json(r.counterexamples.front()).dump();
    return s.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Codes for deletable errors: VT, repetition and concatenated VT"};
    app.require_subcommand(1);
    Output out;
    app.add_option("--format", out.format, "output format")->check(CLI::IsMember({"json", "text"}));
    unsigned workers = 1;
    app.add_option("--workers", workers, "verifier threads (does not change results)")->check(CLI::PositiveNumber);
    std::uint64_t budget_flag = 0;
    app.add_option("--budget", budget_flag, "max (codeword, pattern) evaluations; overrides DELCODE_BUDGET");

    // vt-enum
    auto* vt_enum = app.add_subcommand("vt-enum", "list VT_a(n)");
    std::size_t ve_n = 0, ve_a = 0;
    std::string ve_out;
    vt_enum->add_option("--n", ve_n)->required();
    vt_enum->add_option("--a", ve_a)->required();
    vt_enum->add_option("--out", ve_out, "write the codebook file here");

    // encode
    auto* encode = app.add_subcommand("encode", "encode information into a codeword");
    CodeArgs enc_code;
    enc_code.add(encode, {"rep", "far"});
    std::string enc_info;
    encode->add_option("--info", enc_info, "rep: info word; far: comma-separated block indices")->required();

    // decode
    auto* decode = app.add_subcommand("decode", "decode a received word");
    CodeArgs dec_code;
    dec_code.add(decode, {"vt", "rep", "far"});
    std::string dec_word;
    decode->add_option("--word", dec_word, "received word over {0,1,e}, or @path")->required();

    // corrupt
    auto* corrupt = app.add_subcommand("corrupt", "apply an error pattern");
    std::string cor_word, cor_pattern, cor_family;
    std::uint64_t cor_seed = 0;
    corrupt->add_option("--word", cor_word, "codeword, or @path")->required();
    auto* cor_p = corrupt->add_option("--pattern", cor_pattern, "pattern JSON, or @path");
    auto* cor_f = corrupt->add_option("--family", cor_family, "sample a pattern from this family");
    corrupt->add_option("--seed", cor_seed);
    cor_p->excludes(cor_f);

    // count
    auto* count = app.add_subcommand("count", "count error patterns");
    std::size_t cnt_n = 0, cnt_t = 0;
    std::optional<std::size_t> cnt_far, cnt_burst;
    std::string cnt_kinds = "DEF";
    count->add_option("--n", cnt_n)->required();
    auto* cnt_t_opt = count->add_option("--t", cnt_t, "weight limit");
    auto* far_opt = count->add_option("--far", cnt_far, "spacing P");
    auto* burst_opt = count->add_option("--burst", cnt_burst, "spread b");
    count->add_option("--kinds", cnt_kinds, "error kinds, subset of DEF");
    far_opt->excludes(burst_opt);

    // bounds
    auto* bounds = app.add_subcommand("bounds", "evaluate a redundancy bound");
    std::string bnd_name, bnd_params;
    bounds->add_option("--name", bnd_name)->required();
    bounds->add_option("--params", bnd_params, "comma-separated key=value, e.g. n=7,t=1");

    // fraction
    auto* fraction = app.add_subcommand("fraction", "exact share of far patterns");
    std::size_t fr_n = 0, fr_t = 0;
    double fr_omega = 0;
    fraction->add_option("--n", fr_n)->required();
    fraction->add_option("--t", fr_t)->required();
    fraction->add_option("--omega", fr_omega)->required();

    // verify
    auto* verify = app.add_subcommand("verify", "check a code against a pattern family");
    std::string ver_mode = "combinatorial", ver_family, ver_codebook;
    CodeArgs ver_code;
    verify->add_option("--mode", ver_mode)->check(CLI::IsMember({"combinatorial", "roundtrip"}));
    ver_code.add(verify, {"vt", "rep", "far"});
    verify->add_option("--family", ver_family, "atmost:T | pfar:P[:T] | burst:B, optional /KINDS")->required();
    verify->add_option("--codebook", ver_codebook, "codebook file (combinatorial mode)");

    // simulate
    auto* sim = app.add_subcommand("simulate", "seeded Monte Carlo decoding");
    CodeArgs sim_code;
    std::string sim_family;
    std::uint64_t sim_trials = 0, sim_seed = 0;
    sim_code.add(sim, {"vt", "rep", "far"});
    sim->add_option("--family", sim_family)->required();
    sim->add_option("--trials", sim_trials)->required();
    sim->add_option("--seed", sim_seed)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    auto code_config = [](const CodeArgs& c) {
        Json j = {{"kind", c.kind}};
        auto put = [&j](const char* k, const std::optional<std::size_t>& v) {
            if (v) j[k] = *v;
        };
        put("n", c.n);
        put("a", c.a);
        put("t", c.t);
        put("P", c.P);
        put("a1", c.a1);
        put("a2", c.a2);
        return j;
    };

    try {
        VerifyOptions opt;
        opt.workers = workers;
        opt.budget = budget_flag ? budget_flag : budget_from_env(kDefaultBudget);
        out.config["command"] = app.get_subcommands().front()->get_name();

        if (vt_enum->parsed()) {
            const VtParams p{ve_n, ve_a};
            out.config["n"] = ve_n;
            out.config["a"] = ve_a;
            if (!ve_out.empty()) out.config["out"] = ve_out;
            const auto words = vt_enumerate(p, kDefaultVtCap);
            const std::string text = codebook_to_text(words);
            if (!ve_out.empty()) {
                std::ofstream f(ve_out, std::ios::binary);
                if (!f) throw UsageError("cannot write '" + ve_out + "'");
                f << text;
            }
            Json codewords = Json::array();
            for (const auto& w : words) codewords.push_back(w.str());
            out.emit({{"size", words.size()}, {"codewords", codewords}}, text);
            return kOk;
        }

        if (encode->parsed()) {
            const Code code = enc_code.build();
            out.config["code"] = code_config(enc_code);
            out.config["info"] = enc_info;
            Word x;
            if (auto p = code.rep()) x = rep_encode(*p, read_word(enc_info));
            else x = far_encode(*code.far(), parse_indices(enc_info));
            out.emit({{"code", code.describe()}, {"codeword", x.str()}}, x.str());
            return kOk;
        }

        if (decode->parsed()) {
            const Code code = dec_code.build();
            out.config["code"] = code_config(dec_code);
            out.config["word"] = dec_word;
            const Word y = read_word(dec_word);
            const auto d = code.decode(y);
            Json r = {{"code", code.describe()}, {"received", y.str()}};
            r["estimate"] = d.codeword ? Json(d.codeword->str()) : Json(nullptr);
            if (auto p = code.rep(); p && d.codeword) {
                Word info;
                for (std::size_t j = 0; j < p->m; ++j) info.push_back((*d.codeword)[j * p->block()]);
                r["info"] = info.str();
            }
            if (auto p = code.far()) {
                const auto fr = far_decode(*p, y);
                r["iterations"] = fr.iterations;
                r["erasuresFixed"] = fr.erasures_fixed;
                r["trace"] = fr.trace;
            }
            r["ambiguous"] = d.ambiguous;
            r["diagnostic"] = d.diagnostic;
            r["result"] = d.codeword ? "ok" : "failure";
            out.emit(r, d.codeword ? d.codeword->str() : "decode failure: " + d.diagnostic);
            return kOk;
        }

        if (corrupt->parsed()) {
            out.config["word"] = cor_word;
            const Word x = read_word(cor_word);
            ErrorPattern g;
            if (!cor_pattern.empty()) {
                out.config["pattern"] = cor_pattern;
                g = parse_pattern(inline_or_file(cor_pattern));
            } else if (!cor_family.empty()) {
                const auto f = PatternFamily::parse(cor_family, x.size());
                out.config["family"] = f.spec();
                out.config["seed"] = cor_seed;
                g = sample_pattern(f, cor_seed);
            } else {
                throw UsageError("corrupt needs --pattern or --family");
            }
            const Word y = apply_pattern(x, g);
            out.emit({{"input", x.str()}, {"pattern", pattern_to_json(g)}, {"output", y.str()}}, y.str());
            return kOk;
        }

        if (count->parsed()) {
            const auto kinds = KindSet::parse(cnt_kinds);
            out.config["n"] = cnt_n;
            if (cnt_t_opt->count()) out.config["t"] = cnt_t;
            if (cnt_far) out.config["far"] = *cnt_far;
            if (cnt_burst) out.config["burst"] = *cnt_burst;
            out.config["kinds"] = kinds.str();
            const bool has_t = cnt_t_opt->count() > 0;
            BigInt c;
            if (cnt_burst) {
                c = has_t ? count_burst_patterns(cnt_n, *cnt_burst, cnt_t, kinds.size())
                          : count_burst_patterns(cnt_n, *cnt_burst, kinds.size());
            } else {
                if (!has_t) throw UsageError("count needs --t unless --burst is given");
                c = cnt_far ? count_far_patterns(cnt_n, *cnt_far, cnt_t, kinds.size())
                            : count_patterns(cnt_n, cnt_t, kinds.size());
            }
            out.emit({{"count", to_string(c)}}, to_string(c));
            return kOk;
        }

        if (bounds->parsed()) {
            const auto params = parse_params(bnd_params);
            out.config["name"] = bnd_name;
            Json pj = Json::object();
            for (const auto& [k, v] : params) pj[k] = v;
            out.config["params"] = pj;
            const auto reports = evaluate_bound(bnd_name, params);
            Json r = Json::array();
            std::string text;
            for (const auto& b : reports) {
                r.push_back(bound_to_json(b));
                std::ostringstream s;
                s.precision(17);
                s << b.name << " = " << b.value << "\n";
                text += s.str();
            }
            out.emit(reports.size() == 1 ? r.front() : r, text);
            return kOk;
        }

        if (fraction->parsed()) {
            out.config["n"] = fr_n;
            out.config["t"] = fr_t;
            out.config["omega"] = fr_omega;
            const auto f = far_fraction(fr_n, fr_t, fr_omega);
            const auto j = far_fraction_to_json(f, fr_n, fr_t, fr_omega);
            out.emit(j, j["fractionExact"].get<std::string>() + " = " + std::to_string(f.fraction_value));
            return kOk;
        }

        if (verify->parsed()) {
            out.config["mode"] = ver_mode;
            VerifyReport r;
            if (ver_mode == "combinatorial") {
                std::vector<Word> book;
                std::optional<Code> code;
                if (!ver_codebook.empty()) {
                    if (!ver_code.kind.empty()) throw UsageError("give either --codebook or --code");
                    out.config["codebook"] = ver_codebook;
                    book = read_codebook(ver_codebook);
                } else {
                    code = ver_code.build();
                    out.config["code"] = code_config(ver_code);
                    if (code->size() > opt.budget) throw BudgetExceeded("codebook larger than the budget");
                    book = code->codebook(opt.budget);
                }
                const auto f = PatternFamily::parse(ver_family, book.front().size());
                out.config["family"] = f.spec();
                out.config["budget"] = opt.budget;
                r = verify_combinatorial(book, f, opt);
                if (code) r.code = code->describe();
            } else {
                if (!ver_codebook.empty()) throw UsageError("roundtrip mode needs --code, not --codebook");
                const Code code = ver_code.build();
                out.config["code"] = code_config(ver_code);
                const auto f = PatternFamily::parse(ver_family, code.n());
                out.config["family"] = f.spec();
                out.config["budget"] = opt.budget;
                r = verify_roundtrip(code, f, opt);
            }
            out.emit(report_to_json(r), verdict_text(r));
            return r.passed() ? kOk : kFail;
        }

        if (sim->parsed()) {
            const Code code = sim_code.build();
            out.config["code"] = code_config(sim_code);
            const auto f = PatternFamily::parse(sim_family, code.n());
            out.config["family"] = f.spec();
            out.config["trials"] = sim_trials;
            out.config["seed"] = sim_seed;
            const auto r = simulate(code, f, sim_trials, sim_seed, opt);
            out.emit(report_to_json(r), verdict_text(r));
            return r.passed() ? kOk : kFail;
        }
    } catch (const BudgetExceeded& e) {
        std::cerr << "delcode: budget exceeded: " << e.what() << "\n";
        return kBudget;
    } catch (const std::exception& e) {
        std::cerr << "delcode: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
