#pragma once

#include <optional>
#include <string>
#include <vector>

#include "superstring/errors.hpp"
#include "superstring/exact.hpp"
#include "superstring/greedy.hpp"
#include "superstring/rational.hpp"
#include "superstring/strings.hpp"

namespace superstring {

/// Symbol-wise mirror of a base-side string onto the barred side.
inline LinearString bar(const LinearString& w) {
    if (!w.all_base()) throw MixedAlphabet("bar() expects a string over the base side");
    std::string out = w.text();
    for (char& ch : out) ch = bar_symbol(ch);
    return LinearString(std::move(out));
}

/// Inverse of bar().
inline LinearString unbar(const LinearString& w) {
    if (!w.all_barred()) throw MixedAlphabet("unbar() expects a string over the barred side");
    std::string out = w.text();
    for (char& ch : out) ch = unbar_symbol(ch);
    return LinearString(std::move(out));
}

/// An instance together with its barred mirror image. Base and barred strings
/// never overlap each other, which is what makes the doubled instance tie the
/// two problems together.
struct ReducedInstance {
    InstanceSet original;
    InstanceSet doubled;
    InstanceSet barred_part;
};

inline ReducedInstance reduce_instance(const InstanceSet& instance) {
    std::vector<LinearString> barred;
    std::vector<LinearString> both = instance.members();
    for (const LinearString& w : instance.members()) {
        LinearString b = bar(w);
        barred.push_back(b);
        both.push_back(std::move(b));
    }
    return ReducedInstance{instance, normalize(std::move(both)), normalize(std::move(barred))};
}

/// The linearization of c used by the back-map: among rotations whose first
/// symbol is base and last symbol is barred, the rank-least one.
inline LinearString canonical_linearization(const CircularString& c) {
    std::optional<LinearString> best;
    for (LinearString& rot : c.rotations()) {
        if (!is_base_symbol(rot.at(0)) || !is_barred_symbol(rot.at(rot.size() - 1))) continue;
        if (!best || rot < *best) best = std::move(rot);
    }
    if (!best)
        throw MonochromaticCircular("no rotation starts on the base side and ends on the barred side");
    return *best;
}

/// Back-map from a circular superstring of a doubled instance to a base-side
/// linear string: the shorter side-restriction of the canonical linearization
/// (ties to the base side), un-barred if the barred side won.
inline LinearString extract_linear(const CircularString& c) {
    const LinearString lin = canonical_linearization(c);
    const std::optional<LinearString> base_part = restrict_to(lin, Side::base);
    const std::optional<LinearString> barred_part = restrict_to(lin, Side::barred);
    // Both sides are nonempty: the linearization starts base and ends barred.
    if (base_part->size() <= barred_part->size()) return *base_part;
    return unbar(*barred_part);
}

/// Extraction always lands on a linear superstring of the original instance
/// at no more than half the circular length. Input c must be a circular
/// superstring of the doubled instance.
inline bool check_extraction_bound(const InstanceSet& instance, const CircularString& c) {
    const ReducedInstance reduced = reduce_instance(instance);
    if (!is_circular_superstring(c, reduced.doubled))
        throw PreconditionViolated("c is not a circular superstring of the doubled instance");
    const LinearString extracted = extract_linear(c);
    return is_linear_superstring(extracted, instance) && 2 * extracted.size() <= c.size();
}

/// Doubling the instance exactly doubles the optimum: the circular optimum of
/// the doubled instance is twice the linear optimum of the original.
inline bool check_optima_doubling(const InstanceSet& instance, int max_strings = kDefaultExactBound) {
    const ExactLinearResult lin = exact_linear(instance, max_strings);
    const ExactCircularResult circ = exact_circular(reduce_instance(instance).doubled, max_strings);
    return 2 * lin.length == circ.length;
}

/// Both performance-ratio inequalities for one (instance, c) pair, in exact
/// rationals: the extracted solution's length ratio never exceeds c's, and
/// likewise for the compression measure. A zero compression denominator makes
/// that inequality undefined; it is flagged and skipped rather than failed.
struct ReductionReport {
    LinearString extracted{"a"};
    int linear_opt_len = 0;
    int circular_opt_len = 0;
    int circular_len = 0;
    int instance_total = 0;

    Rational length_ratio_left{0, 1};
    Rational length_ratio_right{0, 1};
    std::optional<Rational> compression_ratio_left;
    std::optional<Rational> compression_ratio_right;
    bool degenerate_compression = false;
    bool strict_ok = false;

    // max(opt/value, value/opt) for each problem, the measure the ratio
    // inequality compares.
    Rational r_measure_linear{0, 1};
    Rational r_measure_circular{0, 1};
};

inline ReductionReport check_ratio_dominance(const InstanceSet& instance, const CircularString& c,
                                             int max_strings = kDefaultExactBound) {
    const ReducedInstance reduced = reduce_instance(instance);
    if (!is_circular_superstring(c, reduced.doubled))
        throw PreconditionViolated("c is not a circular superstring of the doubled instance");

    ReductionReport report;
    report.extracted = extract_linear(c);
    report.linear_opt_len = exact_linear(instance, max_strings).length;
    report.circular_opt_len = exact_circular(reduced.doubled, max_strings).length;
    report.circular_len = c.size();
    report.instance_total = instance.total_length();

    const int g_len = report.extracted.size();
    report.length_ratio_left = Rational(g_len, report.linear_opt_len);
    report.length_ratio_right = Rational(report.circular_len, report.circular_opt_len);
    report.r_measure_linear = Rational::max(Rational(g_len, report.linear_opt_len),
                                            Rational(report.linear_opt_len, g_len));
    report.r_measure_circular = Rational::max(Rational(report.circular_len, report.circular_opt_len),
                                              Rational(report.circular_opt_len, report.circular_len));

    const int total = report.instance_total;
    const int doubled_total = reduced.doubled.total_length();
    const int left_den = total - g_len;
    const int right_den = doubled_total - report.circular_len;
    bool compression_ok = true;
    if (left_den <= 0 || right_den <= 0) {
        report.degenerate_compression = true;
    } else {
        report.compression_ratio_left = Rational(total - report.linear_opt_len, left_den);
        report.compression_ratio_right = Rational(doubled_total - report.circular_opt_len, right_den);
        compression_ok = *report.compression_ratio_left <= *report.compression_ratio_right;
    }
    report.strict_ok = report.length_ratio_left <= report.length_ratio_right && compression_ok;
    return report;
}

/// Every greedy circular outcome of the doubled instance extracts back to a
/// greedy linear outcome of the original, across all tie-breakings.
inline bool check_greedy_preservation(const InstanceSet& instance,
                                      int max_set_size = kDefaultEnumerationBound) {
    const ReducedInstance reduced = reduce_instance(instance);
    const std::set<LinearString> linear_outcomes = enumerate_greedy_linear(instance, max_set_size);
    for (const CircularString& c : enumerate_greedy_circular(reduced.doubled, max_set_size))
        if (!linear_outcomes.count(extract_linear(c))) return false;
    return true;
}

}  // namespace superstring
