#pragma once

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "superstring/errors.hpp"
#include "superstring/strings.hpp"

namespace superstring {

constexpr int kDefaultExactBound = 12;
constexpr int kCyclicEnumerationLimit = 9;  // above this, subset DP takes over

struct ExactLinearResult {
    LinearString optimum{"a"};
    int length = 0;
    std::vector<LinearString> order;  // permutation the optimum chains together
    bool validated = false;
};

struct ExactCircularResult {
    CircularString optimum{LinearString("a")};
    int length = 0;
    std::vector<LinearString> order;  // cyclic order, first member fixed
    bool validated = false;
};

namespace detail {

inline std::vector<std::vector<int>> overlap_matrix(const std::vector<LinearString>& members) {
    const std::size_t n = members.size();
    std::vector<std::vector<int>> ov(n, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) ov[i][j] = overlap(members[i], members[j]);
    return ov;
}

inline LinearString chain_merge(const std::vector<LinearString>& order) {
    LinearString acc = order.front();
    for (std::size_t i = 1; i < order.size(); ++i) acc = merge(acc, order[i]);
    return acc;
}

}  // namespace detail

/// Shortest linear superstring by bitmask DP over (visited subset, last
/// member), transition weight |next| - overlap(last, next). O(2^n n^2).
inline ExactLinearResult exact_linear(const InstanceSet& instance, int max_strings = kDefaultExactBound) {
    const int n = instance.size();
    if (n > max_strings)
        throw InstanceTooLarge("exact linear solver bound is " + std::to_string(max_strings) +
                               " strings, instance has " + std::to_string(n));
    const std::vector<LinearString>& members = instance.members();

    ExactLinearResult res;
    if (n == 1) {
        res.optimum = members.front();
        res.length = members.front().size();
        res.order = {members.front()};
        res.validated = is_linear_superstring(res.optimum, instance);
        return res;
    }

    const auto ov = detail::overlap_matrix(members);
    const int full = (1 << n) - 1;
    const int inf = std::numeric_limits<int>::max() / 2;
    std::vector<std::vector<int>> dp(static_cast<std::size_t>(full) + 1, std::vector<int>(static_cast<std::size_t>(n), inf));
    std::vector<std::vector<int>> parent(static_cast<std::size_t>(full) + 1, std::vector<int>(static_cast<std::size_t>(n), -1));

    for (int i = 0; i < n; ++i) dp[1u << i][static_cast<std::size_t>(i)] = members[static_cast<std::size_t>(i)].size();
    for (int mask = 1; mask <= full; ++mask)
        for (int last = 0; last < n; ++last) {
            if (!(mask & (1 << last))) continue;
            const int cur = dp[static_cast<std::size_t>(mask)][static_cast<std::size_t>(last)];
            if (cur >= inf) continue;
            for (int next = 0; next < n; ++next) {
                if (mask & (1 << next)) continue;
                const int cand = cur + members[static_cast<std::size_t>(next)].size() -
                                 ov[static_cast<std::size_t>(last)][static_cast<std::size_t>(next)];
                const int to = mask | (1 << next);
                if (cand < dp[static_cast<std::size_t>(to)][static_cast<std::size_t>(next)]) {
                    dp[static_cast<std::size_t>(to)][static_cast<std::size_t>(next)] = cand;
                    parent[static_cast<std::size_t>(to)][static_cast<std::size_t>(next)] = last;
                }
            }
        }

    int best_last = 0;
    for (int last = 1; last < n; ++last)
        if (dp[static_cast<std::size_t>(full)][static_cast<std::size_t>(last)] <
            dp[static_cast<std::size_t>(full)][static_cast<std::size_t>(best_last)])
            best_last = last;

    std::vector<int> order_idx;
    int mask = full, last = best_last;
    while (last != -1) {
        order_idx.push_back(last);
        const int prev = parent[static_cast<std::size_t>(mask)][static_cast<std::size_t>(last)];
        mask ^= 1 << last;
        last = prev;
    }
    std::reverse(order_idx.begin(), order_idx.end());

    for (int i : order_idx) res.order.push_back(members[static_cast<std::size_t>(i)]);
    res.optimum = detail::chain_merge(res.order);
    res.length = dp[static_cast<std::size_t>(full)][static_cast<std::size_t>(best_last)];
    if (res.optimum.size() != res.length)
        throw Error("chained merge length disagrees with the DP optimum; input was not factor-free");
    res.validated = is_linear_superstring(res.optimum, instance);
    return res;
}

namespace detail {

// Closes the chained merge of a cyclic order by dropping the wrap-around
// overlap between the last and first member.
inline CircularString close_cycle(const std::vector<LinearString>& order) {
    const LinearString chained = chain_merge(order);
    const int closing = order.size() == 1 ? overlap(order[0], order[0]) : overlap(order.back(), order.front());
    const int keep = chained.size() - closing;
    return CircularString(LinearString(chained.text().substr(0, static_cast<std::size_t>(keep))));
}

struct CyclicCandidate {
    int cost;
    std::vector<int> order;
};

// All cyclic orders with member 0 fixed first, each with its length
// ||P|| - sum of cyclic overlaps.
inline std::vector<CyclicCandidate> all_cyclic_orders(const InstanceSet& instance,
                                                      const std::vector<std::vector<int>>& ov) {
    const int n = instance.size();
    std::vector<int> tail(static_cast<std::size_t>(std::max(0, n - 1)));
    std::iota(tail.begin(), tail.end(), 1);
    std::vector<CyclicCandidate> out;
    do {
        std::vector<int> order(1, 0);
        order.insert(order.end(), tail.begin(), tail.end());
        int cost = instance.total_length();
        for (std::size_t i = 0; i < order.size(); ++i) {
            const std::size_t a = static_cast<std::size_t>(order[i]);
            const std::size_t b = static_cast<std::size_t>(order[(i + 1) % order.size()]);
            cost -= a == b ? overlap(instance.members()[a], instance.members()[a]) : ov[a][b];
        }
        out.push_back({cost, std::move(order)});
    } while (std::next_permutation(tail.begin(), tail.end()));
    return out;
}

inline std::optional<ExactCircularResult> pick_valid_candidate(const InstanceSet& instance,
                                                               std::vector<CyclicCandidate> candidates) {
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const CyclicCandidate& a, const CyclicCandidate& b) { return a.cost < b.cost; });
    std::size_t i = 0;
    while (i < candidates.size()) {
        const int level = candidates[i].cost;
        std::optional<ExactCircularResult> best;
        for (; i < candidates.size() && candidates[i].cost == level; ++i) {
            std::vector<LinearString> order;
            for (int k : candidates[i].order) order.push_back(instance.members()[static_cast<std::size_t>(k)]);
            CircularString closed = close_cycle(order);
            if (closed.size() != level)
                throw Error("cyclic merge length disagrees with the overlap sum; input was not factor-free");
            if (!is_circular_superstring(closed, instance)) continue;
            if (!best || closed < best->optimum) {
                ExactCircularResult res;
                res.optimum = closed;
                res.length = level;
                res.order = std::move(order);
                res.validated = true;
                best = std::move(res);
            }
        }
        if (best) return best;
    }
    return std::nullopt;
}

// Max total cyclic overlap via subset DP with member 0 fixed as the start,
// closed by the edge back to 0. Returns the witness cycle.
inline CyclicCandidate best_cycle_by_dp(const InstanceSet& instance,
                                        const std::vector<std::vector<int>>& ov) {
    const int n = instance.size();
    const int full = (1 << n) - 1;
    const int bad = -1;
    std::vector<std::vector<int>> dp(static_cast<std::size_t>(full) + 1, std::vector<int>(static_cast<std::size_t>(n), bad));
    std::vector<std::vector<int>> parent(static_cast<std::size_t>(full) + 1, std::vector<int>(static_cast<std::size_t>(n), -1));
    dp[1][0] = 0;
    for (int mask = 1; mask <= full; ++mask)
        for (int last = 0; last < n; ++last) {
            if (!(mask & (1 << last)) || dp[static_cast<std::size_t>(mask)][static_cast<std::size_t>(last)] == bad)
                continue;
            const int cur = dp[static_cast<std::size_t>(mask)][static_cast<std::size_t>(last)];
            for (int next = 1; next < n; ++next) {
                if (mask & (1 << next)) continue;
                const int cand = cur + ov[static_cast<std::size_t>(last)][static_cast<std::size_t>(next)];
                const int to = mask | (1 << next);
                if (cand > dp[static_cast<std::size_t>(to)][static_cast<std::size_t>(next)]) {
                    dp[static_cast<std::size_t>(to)][static_cast<std::size_t>(next)] = cand;
                    parent[static_cast<std::size_t>(to)][static_cast<std::size_t>(next)] = last;
                }
            }
        }

    int best_last = 0, best_total = std::numeric_limits<int>::min();
    for (int last = 0; last < n; ++last) {
        if (dp[static_cast<std::size_t>(full)][static_cast<std::size_t>(last)] == bad) continue;
        const int total = dp[static_cast<std::size_t>(full)][static_cast<std::size_t>(last)] +
                          ov[static_cast<std::size_t>(last)][0];
        if (total > best_total) {
            best_total = total;
            best_last = last;
        }
    }

    std::vector<int> order;
    int mask = full, last = best_last;
    while (last != -1) {
        order.push_back(last);
        const int prev = parent[static_cast<std::size_t>(mask)][static_cast<std::size_t>(last)];
        mask ^= 1 << last;
        last = prev;
    }
    std::reverse(order.begin(), order.end());
    return {instance.total_length() - best_total, std::move(order)};
}

}  // namespace detail

/// Shortest circular superstring over cyclic orders of the members. Small
/// instances enumerate all (n-1)! orders and try cost levels in increasing
/// order, validating every candidate; larger ones use subset DP and fall back
/// to enumeration if the DP witness fails validation.
inline ExactCircularResult exact_circular(const InstanceSet& instance, int max_strings = kDefaultExactBound) {
    const int n = instance.size();
    if (n > max_strings)
        throw InstanceTooLarge("exact circular solver bound is " + std::to_string(max_strings) +
                               " strings, instance has " + std::to_string(n));
    const auto ov = detail::overlap_matrix(instance.members());

    if (n > kCyclicEnumerationLimit) {
        detail::CyclicCandidate best = detail::best_cycle_by_dp(instance, ov);
        std::vector<LinearString> order;
        for (int k : best.order) order.push_back(instance.members()[static_cast<std::size_t>(k)]);
        CircularString closed = detail::close_cycle(order);
        if (closed.size() == best.cost && is_circular_superstring(closed, instance)) {
            ExactCircularResult res;
            res.optimum = closed;
            res.length = best.cost;
            res.order = std::move(order);
            res.validated = true;
            return res;
        }
        // Witness failed; take the slow exhaustive path.
    }

    std::optional<ExactCircularResult> res =
        detail::pick_valid_candidate(instance, detail::all_cyclic_orders(instance, ov));
    if (!res) throw NoValidCandidate("no cyclic order decodes to a valid circular superstring");
    return *res;
}

namespace detail {

inline std::vector<char> occurring_symbols(const InstanceSet& instance) {
    std::vector<char> syms;
    for (const LinearString& s : instance.members())
        for (char ch : s.text()) syms.push_back(ch);
    std::sort(syms.begin(), syms.end(), symbol_less);
    syms.erase(std::unique(syms.begin(), syms.end()), syms.end());
    return syms;
}

// Calls visit(word) for every string of the given length over syms in rank
// order until visit returns true; propagates that hit.
template <typename Visit>
bool for_each_word(const std::vector<char>& syms, int length, Visit&& visit) {
    std::vector<int> digits(static_cast<std::size_t>(length), 0);
    std::string word(static_cast<std::size_t>(length), syms.front());
    while (true) {
        for (std::size_t i = 0; i < digits.size(); ++i) word[i] = syms[static_cast<std::size_t>(digits[i])];
        if (visit(word)) return true;
        int pos = length - 1;
        while (pos >= 0 && digits[static_cast<std::size_t>(pos)] == static_cast<int>(syms.size()) - 1) {
            digits[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) return false;
        ++digits[static_cast<std::size_t>(pos)];
    }
}

}  // namespace detail

/// Independent brute-force ground truth: the rank-least shortest linear
/// superstring over the symbols occurring in the instance, by length-ordered
/// exhaustive enumeration. Exponential; only for tiny cross-checks.
inline LinearString oracle_linear(const InstanceSet& instance, int max_len) {
    const std::vector<char> syms = detail::occurring_symbols(instance);
    int longest_member = 0;
    for (const LinearString& s : instance.members()) longest_member = std::max(longest_member, s.size());

    for (int len = std::max(1, longest_member); len <= max_len; ++len) {
        std::optional<LinearString> hit;
        detail::for_each_word(syms, len, [&](const std::string& word) {
            LinearString w(word);
            if (!is_linear_superstring(w, instance)) return false;
            hit = std::move(w);
            return true;
        });
        if (hit) return *hit;
    }
    throw NoSolutionWithinBound("no linear superstring of length <= " + std::to_string(max_len));
}

/// Circular counterpart: canonical rotation classes by increasing length,
/// ties by canonical rank order.
inline CircularString oracle_circular(const InstanceSet& instance, int max_len) {
    const std::vector<char> syms = detail::occurring_symbols(instance);
    for (int len = 1; len <= max_len; ++len) {
        std::optional<CircularString> hit;
        detail::for_each_word(syms, len, [&](const std::string& word) {
            if (detail::least_rotation_start(word) != 0) return false;  // not a canonical representative
            CircularString c{LinearString(word)};
            if (!is_circular_superstring(c, instance)) return false;
            hit = std::move(c);
            return true;
        });
        if (hit) return *hit;
    }
    throw NoSolutionWithinBound("no circular superstring of length <= " + std::to_string(max_len));
}

}  // namespace superstring
