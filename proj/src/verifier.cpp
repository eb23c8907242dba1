#include "delcode/verifier.hpp"

#include <algorithm>
#include <thread>
#include <unordered_map>

namespace delcode {

std::string to_string(VerifyMode m) {
    switch (m) {
    case VerifyMode::Combinatorial: return "combinatorial";
    case VerifyMode::Roundtrip: return "roundtrip";
    case VerifyMode::MonteCarlo: return "montecarlo";
    }
    return "?";
}

namespace {

void check_budget(const BigInt& codewords, const BigInt& patterns, std::uint64_t budget) {
    const BigInt work = codewords * patterns;
    if (work > budget)
        throw BudgetExceeded(to_string(codewords) + " codewords x " + to_string(patterns) + " patterns = " +
                             to_string(work) + " evaluations, above the budget of " + std::to_string(budget));
}

/// Runs fn(worker, begin, end) over [0, count) in contiguous shards.
template <typename Fn>
void parallel_shards(std::uint64_t count, unsigned workers, Fn&& fn) {
    workers = std::max(1u, workers);
    if (workers == 1 || count < 2) {
        fn(0u, std::uint64_t{0}, count);
        return;
    }
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, count));
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (count + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        const std::uint64_t begin = std::min(count, w * chunk);
        const std::uint64_t end = std::min(count, begin + chunk);
        pool.emplace_back([&fn, w, begin, end] { fn(w, begin, end); });
    }
    for (auto& t : pool) t.join();
}

/// Looks for another codeword reaching `received` under a member of f.
/// First tries moving a single error of g (cheap, catches flip ties), then
/// an exhaustive scan when the family list is supplied.
std::optional<std::pair<Word, ErrorPattern>> find_collision(const Code& code, const PatternFamily& f,
                                                            const Word& x, const Word& received,
                                                            const ErrorPattern& g, const Word& other,
                                                            const std::vector<ErrorPattern>* family) {
    if (other == x || !code.contains(other)) return std::nullopt;
    auto hits = [&](const ErrorPattern& h) {
        return is_member(h, f) && apply_pattern(other, h) == received;
    };
    if (hits(g)) return std::make_pair(other, g);
    const auto kinds = f.kinds().members();
    for (const auto& [pos, kind] : g.errors()) {
        for (std::size_t q = 1; q <= g.n(); ++q) {
            for (auto k : kinds) {
                auto errors = g.errors();
                errors.erase(pos);
                if (errors.count(q)) continue;
                errors.emplace(q, k);
                ErrorPattern h(g.n(), std::move(errors));
                if (hits(h)) return std::make_pair(other, h);
            }
        }
    }
    if (family) {
        for (const auto& h : *family)
            if (hits(h)) return std::make_pair(other, h);
    }
    return std::nullopt;
}

struct Tally {
    std::uint64_t cases = 0;
    std::uint64_t failures = 0;
    std::uint64_t decode_failures = 0;
    std::uint64_t unavoidable = 0;
    std::uint64_t ambiguous_misses = 0;
    std::uint64_t ambiguity = 0;
    // (ordering key, counterexample), smallest keys kept
    std::vector<std::pair<std::uint64_t, Counterexample>> examples;

    void keep(std::uint64_t key, Counterexample cx, std::size_t limit) {
        examples.emplace_back(key, std::move(cx));
        std::sort(examples.begin(), examples.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        if (examples.size() > limit) examples.resize(limit);
    }

    void merge(Tally&& other, std::size_t limit) {
        cases += other.cases;
        failures += other.failures;
        decode_failures += other.decode_failures;
        unavoidable += other.unavoidable;
        ambiguous_misses += other.ambiguous_misses;
        ambiguity += other.ambiguity;
        for (auto& e : other.examples) keep(e.first, std::move(e.second), limit);
    }

    void fill(VerifyReport& r) {
        r.cases = cases;
        r.failures = failures;
        r.decode_failures = decode_failures;
        r.unavoidable = unavoidable;
        r.ambiguous_misses = ambiguous_misses;
        r.ambiguity_count = ambiguity;
        for (auto& e : examples) r.counterexamples.push_back(std::move(e.second));
    }
};

/// Decodes one corrupted word and records the outcome.
void check_case(const Code& code, const PatternFamily& f, const Word& x, const ErrorPattern& g,
                std::uint64_t key, std::optional<std::uint64_t> trial, const std::vector<ErrorPattern>* family,
                std::size_t limit, Tally& tally) {
    ++tally.cases;
    const Word y = apply_pattern(x, g);
    const auto d = code.decode(y);
    if (d.ambiguous) ++tally.ambiguity;
    if (d.codeword && *d.codeword == x) return;

    ++tally.failures;
    Counterexample cx;
    cx.x1 = x;
    cx.g1 = g;
    cx.received = y;
    cx.decoded = d.codeword;
    cx.diagnostic = d.diagnostic;
    cx.trial = trial;
    if (!d.codeword) {
        ++tally.decode_failures;
    } else if (auto col = find_collision(code, f, x, y, g, *d.codeword, family)) {
        ++tally.unavoidable;
        cx.x2 = col->first;
        cx.g2 = col->second;
        cx.diagnostic = "indistinguishable: decoded codeword reaches the same received word under a family member";
    } else if (d.ambiguous) {
        ++tally.ambiguous_misses;
    }
    if (limit > 0 && (tally.examples.size() < limit || key < tally.examples.back().first))
        tally.keep(key, std::move(cx), limit);
}

}  // namespace

VerifyReport verify_combinatorial(const std::vector<Word>& codebook, const PatternFamily& f,
                                  const VerifyOptions& opt) {
    const BigInt family_size = f.size();
    check_budget(codebook.size(), family_size, opt.budget);
    const auto patterns = enumerate_family(f, opt.budget);

    VerifyReport report;
    report.mode = VerifyMode::Combinatorial;
    report.family = f.spec();
    report.n = f.n();
    report.codebook_size = codebook.size();
    report.family_size = family_size;

    for (const auto& x : codebook)
        if (x.size() != f.n()) throw InvalidArgument("codebook word length does not match the family length");

    // Corrupted outputs per codeword, computed in parallel shards.
    std::vector<std::vector<Word>> outputs(codebook.size());
    parallel_shards(codebook.size(), opt.workers, [&](unsigned, std::uint64_t begin, std::uint64_t end) {
        for (std::uint64_t c = begin; c < end; ++c) {
            outputs[c].reserve(patterns.size());
            for (const auto& g : patterns) outputs[c].push_back(apply_pattern(codebook[c], g));
        }
    });

    // received word -> (codeword index, pattern index) of its first producer
    std::unordered_map<Word, std::pair<std::size_t, std::size_t>, WordHash> owner;
    for (std::size_t c = 0; c < codebook.size(); ++c) {
        for (std::size_t k = 0; k < patterns.size(); ++k) {
            ++report.cases;
            auto [it, inserted] = owner.try_emplace(outputs[c][k], c, k);
            if (inserted || it->second.first == c) continue;
            ++report.failures;
            if (report.counterexamples.size() < opt.max_counterexamples) {
                Counterexample cx;
                cx.x1 = codebook[it->second.first];
                cx.g1 = patterns[it->second.second];
                cx.x2 = codebook[c];
                cx.g2 = patterns[k];
                cx.received = outputs[c][k];
                cx.diagnostic = "two codewords share a corrupted output";
                report.counterexamples.push_back(std::move(cx));
            }
        }
        outputs[c].clear();
        outputs[c].shrink_to_fit();
    }
    return report;
}

VerifyReport verify_roundtrip(const Code& code, const PatternFamily& f, const VerifyOptions& opt) {
    if (code.n() != f.n()) throw InvalidArgument("code length does not match the family length");
    const BigInt family_size = f.size();
    check_budget(code.size(), family_size, opt.budget);
    const auto codebook = code.codebook(opt.budget);
    const auto patterns = enumerate_family(f, opt.budget);

    VerifyReport report;
    report.mode = VerifyMode::Roundtrip;
    report.code = code.describe();
    report.family = f.spec();
    report.n = f.n();
    report.codebook_size = codebook.size();
    report.family_size = family_size;

    const std::size_t limit = opt.max_counterexamples;
    std::vector<Tally> partial(std::max(1u, opt.workers));
    parallel_shards(codebook.size(), opt.workers, [&](unsigned w, std::uint64_t begin, std::uint64_t end) {
        for (std::uint64_t c = begin; c < end; ++c)
            for (std::size_t k = 0; k < patterns.size(); ++k)
                check_case(code, f, codebook[c], patterns[k], c * patterns.size() + k, std::nullopt, &patterns,
                           limit, partial[w]);
    });
    Tally total;
    for (auto& t : partial) total.merge(std::move(t), limit);
    total.fill(report);
    return report;
}

VerifyReport simulate(const Code& code, const PatternFamily& f, std::uint64_t trials, std::uint64_t seed,
                      const VerifyOptions& opt) {
    if (trials < 1) throw InvalidArgument("simulate: trials must be >= 1");
    if (code.n() != f.n()) throw InvalidArgument("code length does not match the family length");

    VerifyReport report;
    report.mode = VerifyMode::MonteCarlo;
    report.code = code.describe();
    report.family = f.spec();
    report.n = f.n();
    report.codebook_size = code.size();
    report.family_size = f.size();
    report.trials = trials;
    report.seed = seed;

    const std::size_t limit = opt.max_counterexamples;
    std::vector<Tally> partial(std::max(1u, opt.workers));
    parallel_shards(trials, opt.workers, [&](unsigned w, std::uint64_t begin, std::uint64_t end) {
        for (std::uint64_t i = begin; i < end; ++i) {
            Rng rng(mix_seed(seed, i));
            const Word x = code.random_codeword(rng);
            const ErrorPattern g = sample_pattern(f, rng.next());
            check_case(code, f, x, g, i, i, nullptr, limit, partial[w]);
        }
    });
    Tally total;
    for (auto& t : partial) total.merge(std::move(t), limit);
    total.fill(report);
    return report;
}

bool revalidate(const Counterexample& cx, VerifyMode mode, const PatternFamily& f, const Code* code) {
    try {
        if (!is_member(cx.g1, f)) return false;
        if (apply_pattern(cx.x1, cx.g1) != cx.received) return false;
        if (code && !code->contains(cx.x1)) return false;
        if (cx.x2 || cx.g2) {
            if (!cx.x2 || !cx.g2) return false;
            if (*cx.x2 == cx.x1 || !is_member(*cx.g2, f)) return false;
            if (apply_pattern(*cx.x2, *cx.g2) != cx.received) return false;
            if (code && !code->contains(*cx.x2)) return false;
        }
        if (mode == VerifyMode::Combinatorial) return cx.x2.has_value();
        if (!code) return false;
        const auto d = code->decode(cx.received);
        if (d.codeword != cx.decoded) return false;
        return !d.codeword || *d.codeword != cx.x1;
    } catch (const std::exception&) {
        return false;
    }
}

}  // namespace delcode
