#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "superstring/alphabet.hpp"
#include "superstring/errors.hpp"

namespace superstring {

/// Nonempty sequence of base/barred symbols. Immutable after construction.
class LinearString {
public:
    explicit LinearString(std::string text) : text_(std::move(text)) {
        if (text_.empty()) throw InvalidString("linear strings are nonempty");
        for (char ch : text_)
            if (!is_symbol(ch))
                throw InvalidString(std::string("symbol '") + ch + "' is not a letter");
    }

    LinearString(std::string text, const Alphabet& alphabet) : LinearString(std::move(text)) {
        for (char ch : text_)
            if (!alphabet.contains(ch))
                throw InvalidString(std::string("symbol '") + ch + "' is outside the alphabet");
    }

    const std::string& text() const { return text_; }
    int size() const { return static_cast<int>(text_.size()); }
    char at(int i) const { return text_[static_cast<std::size_t>(i)]; }

    bool all_base() const {
        return std::all_of(text_.begin(), text_.end(), [](char c) { return is_base_symbol(c); });
    }
    bool all_barred() const {
        return std::all_of(text_.begin(), text_.end(), [](char c) { return is_barred_symbol(c); });
    }

    friend bool operator==(const LinearString& a, const LinearString& b) {
        return a.text_ == b.text_;
    }
    friend bool operator!=(const LinearString& a, const LinearString& b) { return !(a == b); }
    friend bool operator<(const LinearString& a, const LinearString& b) {
        return rank_less(a.text_, b.text_);
    }

private:
    std::string text_;
};

/// Length of the longest proper suffix of x that is also a proper prefix of y.
/// Computed through the failure function of y '#' x; proper on both sides, so
/// overlap(x, y) <= min(|x|, |y|) - 1.
inline int overlap(const LinearString& x, const LinearString& y) {
    const std::string& xs = x.text();
    const std::string& ys = y.text();
    std::string t;
    t.reserve(ys.size() + 1 + xs.size());
    t.append(ys);
    t.push_back('\x01');  // separator, never a symbol
    t.append(xs);

    std::vector<int> border(t.size(), 0);
    for (std::size_t i = 1; i < t.size(); ++i) {
        int k = border[i - 1];
        while (k > 0 && t[i] != t[static_cast<std::size_t>(k)]) k = border[static_cast<std::size_t>(k) - 1];
        if (t[i] == t[static_cast<std::size_t>(k)]) ++k;
        border[i] = k;
    }

    const int cap = std::min(x.size(), y.size()) - 1;
    int b = border.back();
    while (b > cap) b = border[static_cast<std::size_t>(b) - 1];
    return b;
}

/// x followed by y with its first overlap(x, y) symbols dropped.
inline LinearString merge(const LinearString& x, const LinearString& y) {
    const int ov = overlap(x, y);
    std::string out = x.text();
    out.append(y.text(), static_cast<std::size_t>(ov), std::string::npos);
    return LinearString(std::move(out));
}

/// True iff s occurs contiguously in w (every string is its own substring).
inline bool is_substring(const LinearString& s, const LinearString& w) {
    return w.text().find(s.text()) != std::string::npos;
}

enum class Side { base, barred };

/// Subsequence of w on the selected side, order preserved; nullopt when no
/// symbol of that side occurs.
inline std::optional<LinearString> restrict_to(const LinearString& w, Side side) {
    std::string out;
    for (char ch : w.text()) {
        const bool keep = side == Side::base ? is_base_symbol(ch) : is_barred_symbol(ch);
        if (keep) out.push_back(ch);
    }
    if (out.empty()) return std::nullopt;
    return LinearString(std::move(out));
}

namespace detail {

// Start index of the rank-least rotation of s (two-pointer least-rotation scan).
inline std::size_t least_rotation_start(std::string_view s) {
    const std::size_t n = s.size();
    std::string t;
    t.reserve(2 * n);
    t.append(s);
    t.append(s);
    std::size_t i = 0, j = 1, k = 0;
    while (i < n && j < n && k < n) {
        const int a = symbol_rank(t[i + k]);
        const int b = symbol_rank(t[j + k]);
        if (a == b) {
            ++k;
            continue;
        }
        if (a > b)
            i = i + k + 1;
        else
            j = j + k + 1;
        if (i == j) ++j;
        k = 0;
    }
    return std::min(i, j);
}

}  // namespace detail

/// Rotation-equivalence class of a nonempty linear string, stored as the
/// rank-least rotation. Equality is rotation-invariant by construction.
class CircularString {
public:
    explicit CircularString(const LinearString& representative) {
        const std::string& s = representative.text();
        const std::size_t start = detail::least_rotation_start(s);
        std::string t = s.substr(start) + s.substr(0, start);
        canonical_ = LinearString(std::move(t));
    }

    const LinearString& canonical() const { return canonical_; }
    int size() const { return canonical_.size(); }

    /// All rotations, starting from the canonical one.
    std::vector<LinearString> rotations() const {
        std::vector<LinearString> out;
        const std::string& s = canonical_.text();
        out.reserve(s.size());
        for (std::size_t r = 0; r < s.size(); ++r)
            out.emplace_back(s.substr(r) + s.substr(0, r));
        return out;
    }

    friend bool operator==(const CircularString& a, const CircularString& b) {
        return a.canonical_ == b.canonical_;
    }
    friend bool operator!=(const CircularString& a, const CircularString& b) { return !(a == b); }
    friend bool operator<(const CircularString& a, const CircularString& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.canonical_ < b.canonical_;
    }

private:
    LinearString canonical_{"a"};
};

/// True iff s occurs in the infinite unrolling of c. Any occurrence starts
/// within the first |c| positions and spans at most |s| more symbols, so
/// ceil(|s|/|c|) + 1 copies of the period are enough to find it.
inline bool contains_circular(const CircularString& c, const LinearString& s) {
    const std::string& period = c.canonical().text();
    const int copies = (s.size() + c.size() - 1) / c.size() + 1;
    std::string unrolled;
    unrolled.reserve(period.size() * static_cast<std::size_t>(copies));
    for (int i = 0; i < copies; ++i) unrolled += period;
    return unrolled.find(s.text()) != std::string::npos;
}

/// The circular string over the first |w| - overlap(w, w) symbols of w, i.e.
/// the merge of w with itself read as a rotation class.
inline CircularString circularize(const LinearString& w) {
    const int keep = w.size() - overlap(w, w);
    return CircularString(LinearString(w.text().substr(0, static_cast<std::size_t>(keep))));
}

/// Factor-free, duplicate-free, nonempty set of linear strings, rank-sorted.
class InstanceSet {
public:
    static InstanceSet from_strings(std::vector<LinearString> raw) {
        if (raw.empty()) throw EmptyInstance("instance has no strings");
        std::sort(raw.begin(), raw.end());
        raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
        std::vector<LinearString> kept;
        kept.reserve(raw.size());
        for (const LinearString& s : raw) {
            bool absorbed = false;
            for (const LinearString& t : raw)
                if (s != t && is_substring(s, t)) {
                    absorbed = true;
                    break;
                }
            if (!absorbed) kept.push_back(s);
        }
        return InstanceSet(std::move(kept));
    }

    const std::vector<LinearString>& members() const { return members_; }
    int size() const { return static_cast<int>(members_.size()); }
    int total_length() const { return total_length_; }

    bool contains(const LinearString& s) const {
        return std::binary_search(members_.begin(), members_.end(), s);
    }

    friend bool operator==(const InstanceSet& a, const InstanceSet& b) {
        return a.members_ == b.members_;
    }

private:
    explicit InstanceSet(std::vector<LinearString> members) : members_(std::move(members)) {
        for (const LinearString& s : members_) total_length_ += s.size();
    }

    std::vector<LinearString> members_;
    int total_length_ = 0;
};

/// Duplicate removal plus factor-free closure; the entry point every solver
/// expects its input to have passed through.
inline InstanceSet normalize(std::vector<LinearString> raw) {
    return InstanceSet::from_strings(std::move(raw));
}

inline bool is_linear_superstring(const LinearString& w, const InstanceSet& instance) {
    return std::all_of(instance.members().begin(), instance.members().end(),
                       [&](const LinearString& s) { return is_substring(s, w); });
}

inline bool is_circular_superstring(const CircularString& c, const InstanceSet& instance) {
    return std::all_of(instance.members().begin(), instance.members().end(),
                       [&](const LinearString& s) { return contains_circular(c, s); });
}

}  // namespace superstring
