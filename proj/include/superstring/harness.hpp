#pragma once

#include <algorithm>
#include <cstdint>
#include <future>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "superstring/errors.hpp"
#include "superstring/exact.hpp"
#include "superstring/greedy.hpp"
#include "superstring/random.hpp"
#include "superstring/rational.hpp"
#include "superstring/reduction.hpp"
#include "superstring/strings.hpp"

namespace superstring {

enum class Problem { sls, scs };

inline std::string problem_name(Problem p) { return p == Problem::sls ? "sls" : "scs"; }

/// Deterministic instance generator configuration: identical config and seed
/// always produce the identical instance.
struct GenConfig {
    int alphabet_size = 2;
    int num_strings = 3;
    int min_len = 1;
    int max_len = 4;
    std::uint64_t seed = 0;

    void validate() const {
        if (alphabet_size < 1 || alphabet_size > kMaxAlphabetSize)
            throw ConfigError("alphabet size must be in [1, 26]");
        if (num_strings < 1) throw ConfigError("need at least one string");
        if (min_len < 1 || min_len > max_len) throw ConfigError("need 1 <= min-len <= max-len");
    }
};

/// num_strings draws (length uniform in [min_len, max_len], symbols uniform
/// over the first alphabet_size letters), then normalized — so the result may
/// hold fewer strings than requested.
inline InstanceSet generate_instance(const GenConfig& cfg) {
    cfg.validate();
    SplitMix64 rng(cfg.seed);
    std::vector<LinearString> raw;
    raw.reserve(static_cast<std::size_t>(cfg.num_strings));
    for (int i = 0; i < cfg.num_strings; ++i) {
        const int len = cfg.min_len + static_cast<int>(rng.uniform_below(
                                          static_cast<std::uint64_t>(cfg.max_len - cfg.min_len + 1)));
        std::string s(static_cast<std::size_t>(len), 'a');
        for (char& ch : s)
            ch = static_cast<char>('a' + rng.uniform_below(static_cast<std::uint64_t>(cfg.alphabet_size)));
        raw.emplace_back(std::move(s));
    }
    return normalize(std::move(raw));
}

/// Every normalized instance over the first alphabet_size letters with at
/// most max_strings members of length at most max_len, in deterministic order.
inline std::vector<InstanceSet> exhaustive_family(int alphabet_size, int max_strings, int max_len) {
    Alphabet alphabet(alphabet_size);
    std::vector<LinearString> words;
    for (int len = 1; len <= max_len; ++len) {
        std::vector<char> syms;
        for (int i = 0; i < alphabet_size; ++i) syms.push_back(alphabet.base_at(i));
        detail::for_each_word(syms, len, [&](const std::string& word) {
            words.emplace_back(word);
            return false;
        });
    }
    std::sort(words.begin(), words.end());

    std::vector<InstanceSet> family;
    std::vector<LinearString> chosen;
    // Factor-free subsets only: anything else normalizes to a smaller subset
    // that the enumeration already visits.
    auto extend = [&](auto&& self, std::size_t from) -> void {
        if (!chosen.empty()) family.push_back(normalize(chosen));
        if (static_cast<int>(chosen.size()) == max_strings) return;
        for (std::size_t i = from; i < words.size(); ++i) {
            bool comparable = false;
            for (const LinearString& c : chosen)
                if (is_substring(c, words[i]) || is_substring(words[i], c)) {
                    comparable = true;
                    break;
                }
            if (comparable) continue;
            chosen.push_back(words[i]);
            self(self, i + 1);
            chosen.pop_back();
        }
    };
    extend(extend, 0);
    return family;
}

/// One greedy-versus-optimum measurement. ratio >= 1 always; opt_len comes
/// from a validated exact solve.
struct RatioRecord {
    std::vector<std::string> instance;
    std::string problem;
    int greedy_len = 0;
    int opt_len = 0;
    Rational ratio{1, 1};
    std::string tie_policy;
    std::uint64_t seed = 0;
};

namespace detail {

inline std::vector<std::string> instance_texts(const InstanceSet& instance) {
    std::vector<std::string> out;
    out.reserve(instance.members().size());
    for (const LinearString& s : instance.members()) out.push_back(s.text());
    return out;
}

}  // namespace detail

/// Greedy length for one policy; for the exhaustive handle, the worst length
/// over every tie-breaking.
inline int greedy_length(const InstanceSet& instance, Problem problem, const TiePolicy& tie,
                         int enum_bound = kDefaultEnumerationBound) {
    if (tie.rule() == TiePolicy::Rule::exhaustive) {
        int worst = 0;
        for (const LinearString& w : enumerate_greedy_linear(instance, enum_bound)) {
            const int len = problem == Problem::sls ? w.size() : circularize(w).size();
            worst = std::max(worst, len);
        }
        return worst;
    }
    if (problem == Problem::sls) return greedy_linear(instance, tie).result.size();
    return greedy_circular(instance, tie).result.size();
}

inline std::vector<RatioRecord> ratio_records_for_instance(const InstanceSet& instance, Problem problem,
                                                           const std::vector<TiePolicy>& policies,
                                                           std::uint64_t seed,
                                                           int exact_bound = kDefaultExactBound,
                                                           int enum_bound = kDefaultEnumerationBound) {
    const int opt = problem == Problem::sls ? exact_linear(instance, exact_bound).length
                                            : exact_circular(instance, exact_bound).length;
    std::vector<RatioRecord> records;
    for (const TiePolicy& tie : policies) {
        RatioRecord rec;
        rec.instance = detail::instance_texts(instance);
        rec.problem = problem_name(problem);
        rec.greedy_len = greedy_length(instance, problem, tie, enum_bound);
        rec.opt_len = opt;
        rec.ratio = Rational(rec.greedy_len, rec.opt_len);
        rec.tie_policy = tie.name();
        rec.seed = seed;
        records.push_back(std::move(rec));
    }
    std::stable_sort(records.begin(), records.end(),
                     [](const RatioRecord& a, const RatioRecord& b) { return b.ratio < a.ratio; });
    return records;
}

struct HuntConfig {
    GenConfig gen;
    int samples = 100;
    Problem problem = Problem::scs;
    bool exhaustive = false;  // enumerate the whole family instead of sampling
    int random_tie_policies = 3;
    int exact_bound = kDefaultExactBound;
    int enum_bound = kDefaultEnumerationBound;
};

struct HuntOutcome {
    std::vector<RatioRecord> records;
    int skipped = 0;  // samples beyond the exact solver's capacity
    std::optional<RatioRecord> worst;

    void note(const RatioRecord& rec) {
        if (!worst || worst->ratio < rec.ratio) worst = rec;
    }
};

namespace detail {

// Tie seeds for a sample are drawn from their own stream so that changing
// the policy count never perturbs instance generation.
inline std::vector<TiePolicy> sample_policies(std::uint64_t sample_seed, int random_policies) {
    std::vector<TiePolicy> policies{TiePolicy::lexicographic()};
    SplitMix64 rng(sample_seed ^ 0xD1B54A32D192ED03ULL);
    for (int j = 0; j < random_policies; ++j) policies.push_back(TiePolicy::seeded_random(rng.next()));
    return policies;
}

template <typename Work>
void parallel_indexed(int count, Work&& work) {
    const int workers = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(),
                                                        static_cast<unsigned>(count)));
    if (workers <= 1) {
        for (int i = 0; i < count; ++i) work(i);
        return;
    }
    std::vector<std::future<void>> futures;
    futures.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w)
        futures.push_back(std::async(std::launch::async, [&, w] {
            for (int i = w; i < count; i += workers) work(i);
        }));
    for (std::future<void>& f : futures) f.get();
}

}  // namespace detail

/// Random mode: samples seeded instances (per-sample seed = base + index,
/// wrapping) and measures every policy against the exact optimum. Exhaustive
/// mode: sweeps the whole family within the generator's shape bounds with the
/// exhaustive tie handle. Record order is deterministic either way: samples
/// in index order, records within a sample by descending ratio.
inline HuntOutcome hunt(const HuntConfig& cfg) {
    HuntOutcome outcome;
    if (cfg.exhaustive) {
        const std::vector<InstanceSet> family =
            exhaustive_family(cfg.gen.alphabet_size, cfg.gen.num_strings, cfg.gen.max_len);
        std::vector<std::vector<RatioRecord>> slots(family.size());
        std::vector<char> skipped(family.size(), 0);
        detail::parallel_indexed(static_cast<int>(family.size()), [&](int i) {
            try {
                slots[static_cast<std::size_t>(i)] = ratio_records_for_instance(
                    family[static_cast<std::size_t>(i)], cfg.problem, {TiePolicy::exhaustive()},
                    static_cast<std::uint64_t>(i), cfg.exact_bound, cfg.enum_bound);
            } catch (const InstanceTooLarge&) {
                skipped[static_cast<std::size_t>(i)] = 1;
            }
        });
        for (std::size_t i = 0; i < family.size(); ++i) {
            outcome.skipped += skipped[i];
            for (RatioRecord& rec : slots[i]) {
                outcome.note(rec);
                outcome.records.push_back(std::move(rec));
            }
        }
        return outcome;
    }

    cfg.gen.validate();
    std::vector<std::vector<RatioRecord>> slots(static_cast<std::size_t>(cfg.samples));
    std::vector<char> skipped(static_cast<std::size_t>(cfg.samples), 0);
    detail::parallel_indexed(cfg.samples, [&](int i) {
        GenConfig sample_cfg = cfg.gen;
        sample_cfg.seed = cfg.gen.seed + static_cast<std::uint64_t>(i);
        const InstanceSet instance = generate_instance(sample_cfg);
        try {
            slots[static_cast<std::size_t>(i)] = ratio_records_for_instance(
                instance, cfg.problem, detail::sample_policies(sample_cfg.seed, cfg.random_tie_policies),
                sample_cfg.seed, cfg.exact_bound, cfg.enum_bound);
        } catch (const InstanceTooLarge&) {
            skipped[static_cast<std::size_t>(i)] = 1;
        }
    });
    for (std::size_t i = 0; i < slots.size(); ++i) {
        outcome.skipped += skipped[i];
        for (RatioRecord& rec : slots[i]) {
            outcome.note(rec);
            outcome.records.push_back(std::move(rec));
        }
    }
    return outcome;
}

/// Aggregated run of the four reduction checks on one instance. Checks that
/// would exceed an enumeration or exact bound are skipped and listed, not
/// failed; a genuinely failed check is a build-stopping event.
struct VerifyReport {
    std::vector<std::string> instance;
    std::optional<bool> extraction_ok;
    int extraction_cases = 0;
    std::optional<bool> doubling_ok;
    std::optional<bool> ratio_ok;
    int ratio_cases = 0;
    int degenerate_compression = 0;
    std::optional<bool> greedy_preservation_ok;
    std::vector<std::string> skipped;  // checks that hit a capacity bound
    bool absorbed_flagged = false;

    bool all_run_ok() const {
        const auto ok = [](const std::optional<bool>& v) { return !v.has_value() || *v; };
        return ok(extraction_ok) && ok(doubling_ok) && ok(ratio_ok) && ok(greedy_preservation_ok);
    }
    bool complete() const { return skipped.empty(); }
};

inline VerifyReport verify_instance(const InstanceSet& instance, int exact_bound = kDefaultExactBound,
                                    int enum_bound = kDefaultEnumerationBound) {
    VerifyReport report;
    report.instance = detail::instance_texts(instance);
    const ReducedInstance reduced = reduce_instance(instance);

    // Candidate circular superstrings of the doubled instance: every greedy
    // tie-breaking (or the lexicographic one if enumeration is out of range)
    // plus the exact optimum.
    std::set<CircularString> candidates;
    try {
        candidates = enumerate_greedy_circular(reduced.doubled, enum_bound);
    } catch (const InstanceTooLarge&) {
        report.skipped.push_back("greedy tie enumeration (doubled instance too large)");
        const CircularGreedyResult lex = greedy_circular(reduced.doubled, TiePolicy::lexicographic());
        report.absorbed_flagged |= !lex.trace.absorbed.empty();
        candidates.insert(lex.result);
    }
    try {
        candidates.insert(exact_circular(reduced.doubled, exact_bound).optimum);

        bool extraction = true;
        bool ratios = true;
        for (const CircularString& c : candidates) {
            extraction = extraction && check_extraction_bound(instance, c);
            const ReductionReport rr = check_ratio_dominance(instance, c, exact_bound);
            report.degenerate_compression += rr.degenerate_compression ? 1 : 0;
            ratios = ratios && rr.strict_ok;
            ++report.extraction_cases;
            ++report.ratio_cases;
        }
        report.extraction_ok = extraction;
        report.ratio_ok = ratios;
        report.doubling_ok = check_optima_doubling(instance, exact_bound);
    } catch (const InstanceTooLarge&) {
        report.skipped.push_back("exact solvers (instance beyond exact bound)");
    }

    try {
        report.greedy_preservation_ok = check_greedy_preservation(instance, enum_bound);
    } catch (const InstanceTooLarge&) {
        report.skipped.push_back("greedy preservation (enumeration out of range)");
    }
    return report;
}

}  // namespace superstring
