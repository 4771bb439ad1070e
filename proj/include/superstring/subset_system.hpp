#pragma once

#include <algorithm>
#include <variant>
#include <vector>

#include "superstring/errors.hpp"
#include "superstring/strings.hpp"

namespace superstring {

/// The two pair subset systems: the linear one forbids every cycle, the
/// circular one permits exactly the single cycle through all members.
enum class SystemVariant { linear, circular };

/// Ordered pair of member indices weighted by their overlap.
struct PairElement {
    int left = 0;
    int right = 0;
    int weight = 0;

    friend bool operator==(const PairElement& a, const PairElement& b) {
        return a.left == b.left && a.right == b.right && a.weight == b.weight;
    }
};

struct PairSelection {
    SystemVariant variant = SystemVariant::linear;
    int num_strings = 0;
    std::vector<PairElement> pairs;

    int total_weight() const {
        int sum = 0;
        for (const PairElement& p : pairs) sum += p.weight;
        return sum;
    }
};

/// All |P|^2 ordered pairs, self-pairs included, in (left, right) order.
inline std::vector<PairElement> pair_universe(const InstanceSet& instance) {
    const std::vector<LinearString>& members = instance.members();
    std::vector<PairElement> out;
    out.reserve(members.size() * members.size());
    for (int i = 0; i < static_cast<int>(members.size()); ++i)
        for (int j = 0; j < static_cast<int>(members.size()); ++j)
            out.push_back({i, j, overlap(members[static_cast<std::size_t>(i)],
                                         members[static_cast<std::size_t>(j)])});
    return out;
}

/// Independence test: in-degree <= 1, out-degree <= 1, and the cycle rule of
/// the variant. Cycles shorter than |P| are always forbidden; the circular
/// variant additionally admits one cycle through all |P| members (for a
/// single-member instance that is the self-pair).
inline bool is_independent(const PairSelection& selection) {
    const int n = selection.num_strings;
    std::vector<int> succ(static_cast<std::size_t>(n), -1);
    std::vector<int> in_degree(static_cast<std::size_t>(n), 0);
    for (const PairElement& p : selection.pairs) {
        if (p.left < 0 || p.left >= n || p.right < 0 || p.right >= n) return false;
        if (succ[static_cast<std::size_t>(p.left)] != -1) return false;  // shared left endpoint
        if (++in_degree[static_cast<std::size_t>(p.right)] > 1) return false;  // shared right endpoint
        succ[static_cast<std::size_t>(p.left)] = p.right;
    }

    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int start = 0; start < n; ++start) {
        if (seen[static_cast<std::size_t>(start)]) continue;
        // Walk forward; with degrees <= 1 a revisit of the walk's own start
        // marks a cycle whose length is the number of steps taken.
        std::vector<int> path;
        int v = start;
        while (v != -1 && !seen[static_cast<std::size_t>(v)]) {
            seen[static_cast<std::size_t>(v)] = 1;
            path.push_back(v);
            v = succ[static_cast<std::size_t>(v)];
        }
        if (v == -1) continue;
        const auto it = std::find(path.begin(), path.end(), v);
        if (it == path.end()) continue;  // ran into an earlier component, no new cycle
        const int cycle_len = static_cast<int>(path.end() - it);
        if (selection.variant == SystemVariant::linear) return false;
        if (cycle_len != n) return false;
    }
    return true;
}

/// Generic greedy over the pair system: elements by decreasing weight (ties
/// by left then right index), added whenever independence is preserved.
/// The output is maximal in the system.
inline PairSelection greedy_selection(const InstanceSet& instance, SystemVariant variant) {
    std::vector<PairElement> universe = pair_universe(instance);
    std::stable_sort(universe.begin(), universe.end(), [](const PairElement& a, const PairElement& b) {
        if (a.weight != b.weight) return a.weight > b.weight;
        if (a.left != b.left) return a.left < b.left;
        return a.right < b.right;
    });

    PairSelection selection{variant, instance.size(), {}};
    for (const PairElement& e : universe) {
        selection.pairs.push_back(e);
        if (!is_independent(selection)) selection.pairs.pop_back();
    }
    return selection;
}

/// True iff no element of the universe can still be added.
inline bool is_maximal(const PairSelection& selection, const InstanceSet& instance) {
    for (const PairElement& e : pair_universe(instance)) {
        if (std::find(selection.pairs.begin(), selection.pairs.end(), e) != selection.pairs.end())
            continue;
        PairSelection extended = selection;
        extended.pairs.push_back(e);
        if (is_independent(extended)) return false;
    }
    return true;
}

namespace detail {

inline std::vector<int> successors_of(const PairSelection& selection) {
    std::vector<int> succ(static_cast<std::size_t>(selection.num_strings), -1);
    for (const PairElement& p : selection.pairs) succ[static_cast<std::size_t>(p.left)] = p.right;
    return succ;
}

}  // namespace detail

/// Decodes a maximal independent linear selection: its pairs are vertex-
/// disjoint paths covering the members; each path chain-merges, and paths are
/// concatenated in order of their smallest member index (cross-path overlaps
/// are deliberately not collapsed, keeping |output| = ||P|| - total weight).
inline LinearString decode_linear_selection(const PairSelection& selection, const InstanceSet& instance) {
    if (selection.variant != SystemVariant::linear)
        throw ConfigError("selection is not from the linear system");
    if (!is_independent(selection)) throw NotIndependent("selection violates the independence conditions");
    if (!is_maximal(selection, instance)) throw NotMaximal("selection is not maximal");

    const int n = instance.size();
    const std::vector<int> succ = detail::successors_of(selection);
    std::vector<char> is_start(static_cast<std::size_t>(n), 1);
    for (const PairElement& p : selection.pairs) is_start[static_cast<std::size_t>(p.right)] = 0;

    std::string out;
    for (int start = 0; start < n; ++start) {
        if (!is_start[static_cast<std::size_t>(start)]) continue;
        LinearString acc = instance.members()[static_cast<std::size_t>(start)];
        for (int v = succ[static_cast<std::size_t>(start)]; v != -1; v = succ[static_cast<std::size_t>(v)])
            acc = merge(acc, instance.members()[static_cast<std::size_t>(v)]);
        out += acc.text();
    }
    LinearString decoded(std::move(out));
    if (!is_linear_superstring(decoded, instance))
        throw ValidationFailed("decoded linear selection misses a member");
    return decoded;
}

/// Decodes a maximal independent circular selection: the single full cycle
/// chain-merges starting from member 0 and closes by dropping the wrap-around
/// overlap, exactly as a self-merge would.
inline CircularString decode_circular_selection(const PairSelection& selection, const InstanceSet& instance) {
    if (selection.variant != SystemVariant::circular)
        throw ConfigError("selection is not from the circular system");
    if (!is_independent(selection)) throw NotIndependent("selection violates the independence conditions");
    if (!is_maximal(selection, instance)) throw NotMaximal("selection is not maximal");

    const std::vector<int> succ = detail::successors_of(selection);
    LinearString acc = instance.members().front();
    int last = 0;
    for (int v = succ[0]; v != 0 && v != -1; v = succ[static_cast<std::size_t>(v)]) {
        acc = merge(acc, instance.members()[static_cast<std::size_t>(v)]);
        last = v;
    }
    const int closing = overlap(instance.members()[static_cast<std::size_t>(last)], instance.members().front());
    const int keep = acc.size() - closing;
    CircularString decoded{LinearString(acc.text().substr(0, static_cast<std::size_t>(keep)))};
    if (!is_circular_superstring(decoded, instance))
        throw ValidationFailed("decoded circular selection misses a member");
    return decoded;
}

/// Variant-dispatching decode, for callers holding either kind of selection.
inline std::variant<LinearString, CircularString> selection_to_superstring(const PairSelection& selection,
                                                                           const InstanceSet& instance) {
    if (selection.variant == SystemVariant::linear) return decode_linear_selection(selection, instance);
    return decode_circular_selection(selection, instance);
}

}  // namespace superstring
