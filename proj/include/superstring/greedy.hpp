#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "superstring/errors.hpp"
#include "superstring/random.hpp"
#include "superstring/strings.hpp"

namespace superstring {

/// One greedy merge: the chosen pair and its overlap at the time of the step.
struct MergeStep {
    LinearString left;
    LinearString right;
    int overlap_len;
};

/// Ordered record of a greedy run. Overlap lengths are non-increasing along
/// steps, and replaying the steps from the input set reproduces result.
/// absorbed lists working strings dropped because a merge result contained
/// them — never observed on factor-free input, but checked rather than assumed.
struct MergeTrace {
    std::vector<MergeStep> steps;
    LinearString result{"a"};
    std::vector<LinearString> absorbed;

    int total_overlap() const {
        int sum = 0;
        for (const MergeStep& s : steps) sum += s.overlap_len;
        return sum;
    }
};

/// How a greedy run breaks ties between maximal-overlap pairs.
/// lexicographic: overlap descending, then left ascending, then right
/// ascending — the reproducible default. seeded_random picks uniformly among
/// the maximal pairs. exhaustive is a handle for callers that want every
/// outcome (see enumerate_greedy_linear); a single run rejects it.
class TiePolicy {
public:
    enum class Rule { lexicographic, seeded_random, exhaustive };

    static TiePolicy lexicographic() { return TiePolicy(Rule::lexicographic, 0); }
    static TiePolicy seeded_random(std::uint64_t seed) { return TiePolicy(Rule::seeded_random, seed); }
    static TiePolicy exhaustive() { return TiePolicy(Rule::exhaustive, 0); }

    Rule rule() const { return rule_; }
    std::uint64_t seed() const { return seed_; }

    std::string name() const {
        switch (rule_) {
            case Rule::lexicographic: return "lex";
            case Rule::seeded_random: return "rand:" + std::to_string(seed_);
            case Rule::exhaustive: return "exhaustive";
        }
        return "?";
    }

private:
    TiePolicy(Rule rule, std::uint64_t seed) : rule_(rule), seed_(seed) {}
    Rule rule_;
    std::uint64_t seed_;
};

namespace detail {

// Insert merged into the sorted working set, dropping anything it absorbs.
// A merge result that is itself contained in a member would mean the set was
// not factor-free before the step; it is dropped and flagged the same way.
inline void absorb_insert(std::vector<LinearString>& working, const LinearString& merged,
                          std::vector<LinearString>* absorbed) {
    for (const LinearString& w : working)
        if (is_substring(merged, w)) {
            if (absorbed) absorbed->push_back(merged);
            return;
        }
    std::vector<LinearString> next;
    next.reserve(working.size() + 1);
    for (LinearString& w : working) {
        if (is_substring(w, merged)) {
            if (absorbed) absorbed->push_back(std::move(w));
        } else {
            next.push_back(std::move(w));
        }
    }
    next.insert(std::upper_bound(next.begin(), next.end(), merged), merged);
    working = std::move(next);
}

struct PairChoice {
    int left;
    int right;
};

// All ordered pairs of distinct members achieving the maximal overlap, in
// (left index, right index) scan order over the sorted working set.
inline std::vector<PairChoice> maximal_pairs(const std::vector<LinearString>& working, int* best_out) {
    int best = -1;
    std::vector<PairChoice> pairs;
    for (int i = 0; i < static_cast<int>(working.size()); ++i)
        for (int j = 0; j < static_cast<int>(working.size()); ++j) {
            if (i == j) continue;
            const int ov = overlap(working[static_cast<std::size_t>(i)], working[static_cast<std::size_t>(j)]);
            if (ov > best) {
                best = ov;
                pairs.clear();
            }
            if (ov == best) pairs.push_back({i, j});
        }
    *best_out = best;
    return pairs;
}

}  // namespace detail

/// Greedy merging: repeatedly take a maximal-overlap ordered pair of distinct
/// working strings and replace it by the merge, until one string remains.
inline MergeTrace greedy_linear(const InstanceSet& instance, const TiePolicy& tie) {
    if (tie.rule() == TiePolicy::Rule::exhaustive)
        throw ConfigError("exhaustive tie policy is an enumeration handle; use enumerate_greedy_linear");

    std::vector<LinearString> working = instance.members();
    MergeTrace trace;
    SplitMix64 rng(tie.seed());

    while (working.size() > 1) {
        int best = 0;
        const std::vector<detail::PairChoice> pairs = detail::maximal_pairs(working, &best);
        detail::PairChoice pick = pairs.front();  // scan order == (left asc, right asc)
        if (tie.rule() == TiePolicy::Rule::seeded_random)
            pick = pairs[static_cast<std::size_t>(rng.uniform_below(pairs.size()))];

        const LinearString left = working[static_cast<std::size_t>(pick.left)];
        const LinearString right = working[static_cast<std::size_t>(pick.right)];
        trace.steps.push_back({left, right, best});

        std::vector<LinearString> rest;
        rest.reserve(working.size() - 2);
        for (int k = 0; k < static_cast<int>(working.size()); ++k)
            if (k != pick.left && k != pick.right) rest.push_back(working[static_cast<std::size_t>(k)]);
        detail::absorb_insert(rest, merge(left, right), &trace.absorbed);
        working = std::move(rest);
    }

    trace.result = working.front();
    return trace;
}

struct CircularGreedyResult {
    CircularString result;
    MergeTrace trace;
};

/// Greedy merging followed by the self-merge that closes the final string
/// into a rotation class.
inline CircularGreedyResult greedy_circular(const InstanceSet& instance, const TiePolicy& tie) {
    MergeTrace trace = greedy_linear(instance, tie);
    CircularString closed = circularize(trace.result);
    return CircularGreedyResult{std::move(closed), std::move(trace)};
}

constexpr int kDefaultEnumerationBound = 8;

namespace detail {

inline std::string working_key(const std::vector<LinearString>& working) {
    std::string key;
    for (const LinearString& w : working) {
        key += w.text();
        key.push_back('\n');
    }
    return key;
}

// Once every overlap is zero the remaining steps are concatenations in an
// arbitrary order, so the reachable results are exactly the permutations.
inline void collect_concatenations(const std::vector<LinearString>& working,
                                   std::set<LinearString>& out) {
    std::vector<int> idx(working.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
    do {
        std::string cat;
        for (int i : idx) cat += working[static_cast<std::size_t>(i)].text();
        out.insert(LinearString(std::move(cat)));
    } while (std::next_permutation(idx.begin(), idx.end()));
}

inline void enumerate_rec(std::vector<LinearString> working, std::set<LinearString>& out,
                          std::unordered_set<std::string>& visited) {
    if (working.size() == 1) {
        out.insert(working.front());
        return;
    }
    std::string key = working_key(working);
    if (!visited.insert(std::move(key)).second) return;

    int best = 0;
    const std::vector<PairChoice> pairs = maximal_pairs(working, &best);
    if (best == 0) {
        collect_concatenations(working, out);
        return;
    }
    for (const PairChoice& pick : pairs) {
        std::vector<LinearString> rest;
        rest.reserve(working.size() - 2);
        for (int k = 0; k < static_cast<int>(working.size()); ++k)
            if (k != pick.left && k != pick.right) rest.push_back(working[static_cast<std::size_t>(k)]);
        absorb_insert(rest, merge(working[static_cast<std::size_t>(pick.left)],
                                  working[static_cast<std::size_t>(pick.right)]),
                      nullptr);
        enumerate_rec(std::move(rest), out, visited);
    }
}

}  // namespace detail

/// Every result reachable by the greedy algorithm under some tie-breaking,
/// found by branching on all maximal pairs with multiset memoization.
inline std::set<LinearString> enumerate_greedy_linear(const InstanceSet& instance,
                                                      int max_set_size = kDefaultEnumerationBound) {
    if (instance.size() > max_set_size)
        throw InstanceTooLarge("enumeration over " + std::to_string(instance.size()) +
                               " strings exceeds the bound " + std::to_string(max_set_size));
    std::set<LinearString> out;
    std::unordered_set<std::string> visited;
    detail::enumerate_rec(instance.members(), out, visited);
    return out;
}

/// Rotation classes of every greedy circular outcome under some tie-breaking.
inline std::set<CircularString> enumerate_greedy_circular(const InstanceSet& instance,
                                                          int max_set_size = kDefaultEnumerationBound) {
    std::set<CircularString> out;
    for (const LinearString& w : enumerate_greedy_linear(instance, max_set_size))
        out.insert(circularize(w));
    return out;
}

}  // namespace superstring
