#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "numeric.hpp"

namespace symlat {

/// Path steps: up (1,1), down (1,-1), and level steps of width 1 ("h")
/// or width 2 ("H").
enum class Step : std::uint8_t { up, down, level, wide_level };

inline int step_width(Step s) { return s == Step::wide_level ? 2 : 1; }

inline int step_rise(Step s) {
    switch (s) {
        case Step::up: return 1;
        case Step::down: return -1;
        default: return 0;
    }
}

inline char step_char(Step s) {
    switch (s) {
        case Step::up: return 'U';
        case Step::down: return 'D';
        case Step::level: return 'h';
        default: return 'H';
    }
}

inline Step step_from_char(char c) {
    switch (c) {
        case 'U': return Step::up;
        case 'D': return Step::down;
        case 'h': return Step::level;
        case 'H': return Step::wide_level;
        default: throw std::invalid_argument(std::string("step_from_char: bad step '") + c + "'");
    }
}

/// An explicit step sequence. Symmetric paths of length 2n are handled
/// through their left halves (x-length n); a width-2 step can therefore
/// never straddle the midpoint, which keeps a vertex at x = n.
class LatticePath {
public:
    LatticePath() = default;
    explicit LatticePath(std::vector<Step> steps) : steps_(std::move(steps)) {}

    static LatticePath parse(std::string_view text) {
        std::vector<Step> steps;
        steps.reserve(text.size());
        for (char c : text) {
            if (c == ' ') continue;
            steps.push_back(step_from_char(c));
        }
        return LatticePath(std::move(steps));
    }

    const std::vector<Step>& steps() const { return steps_; }
    std::size_t step_count() const { return steps_.size(); }

    /// x-advance of the whole path.
    std::size_t length() const {
        std::size_t w = 0;
        for (Step s : steps_) w += static_cast<std::size_t>(step_width(s));
        return w;
    }

    /// Height after each step (the start vertex at height 0 is implicit).
    std::vector<int> heights() const {
        std::vector<int> h;
        h.reserve(steps_.size());
        int y = 0;
        for (Step s : steps_) h.push_back(y += step_rise(s));
        return h;
    }

    int final_height() const {
        int y = 0;
        for (Step s : steps_) y += step_rise(s);
        return y;
    }

    int min_height() const {
        int y = 0, lo = 0;
        for (Step s : steps_) lo = std::min(lo, y += step_rise(s));
        return lo;
    }

    bool nonnegative() const { return min_height() >= 0; }

    std::string str() const {
        std::string out;
        out.reserve(steps_.size());
        for (Step s : steps_) out += step_char(s);
        return out;
    }

    friend bool operator==(const LatticePath& a, const LatticePath& b) { return a.steps_ == b.steps_; }

private:
    std::vector<Step> steps_;
};

inline std::ostream& operator<<(std::ostream& os, const LatticePath& p) { return os << p.str(); }

/// Full symmetric path from a left half: append the reversed half with up
/// and down steps exchanged.
inline LatticePath mirror_half(const LatticePath& half) {
    std::vector<Step> steps = half.steps();
    steps.reserve(2 * steps.size());
    for (auto it = half.steps().rbegin(); it != half.steps().rend(); ++it) {
        Step s = *it;
        if (s == Step::up) s = Step::down;
        else if (s == Step::down) s = Step::up;
        steps.push_back(s);
    }
    return LatticePath(std::move(steps));
}

/// Which path family: allowed level widths, the nonnegativity constraint,
/// and whether the family is the symmetric one (represented by left
/// halves) or plain paths from (0,0) to (2n,0).
struct FamilySpec {
    bool allow_level1 = false;
    bool allow_level2 = false;
    bool nonnegative = true;
    bool symmetric = true;

    static FamilySpec dyck(bool nonneg = true, bool sym = true) { return {false, false, nonneg, sym}; }
    static FamilySpec motzkin(bool nonneg = true, bool sym = true) { return {true, false, nonneg, sym}; }
    static FamilySpec schroeder(bool nonneg = true, bool sym = true) { return {false, true, nonneg, sym}; }
    static FamilySpec ms(bool nonneg = true, bool sym = true) { return {true, true, nonneg, sym}; }

    std::string name() const {
        std::string base = allow_level1 ? (allow_level2 ? "ms" : "motzkin")
                                        : (allow_level2 ? "schroeder" : "dyck");
        return std::string(nonnegative ? "" : "free ") + std::string(symmetric ? "symmetric " : "") + base;
    }
};

/// Cap on the x-length of any explicitly enumerated object (a left half
/// for symmetric families, the whole path otherwise).
inline constexpr int default_enumeration_cap = 14;

namespace detail {

inline void walk_paths(const FamilySpec& spec, int remaining, int height, std::vector<Step>& acc,
                       const std::function<void(const LatticePath&)>& visit) {
    if (remaining == 0) {
        if (spec.symmetric || height == 0) visit(LatticePath(acc));
        return;
    }
    // Plain paths must be able to return to the axis in time.
    if (!spec.symmetric) {
        const int dist = height >= 0 ? height : -height;
        if (dist > remaining) return;
    }
    // Lexicographic step order U < D < h < H.
    acc.push_back(Step::up);
    walk_paths(spec, remaining - 1, height + 1, acc, visit);
    acc.pop_back();
    if (!spec.nonnegative || height > 0) {
        acc.push_back(Step::down);
        walk_paths(spec, remaining - 1, height - 1, acc, visit);
        acc.pop_back();
    }
    if (spec.allow_level1) {
        acc.push_back(Step::level);
        walk_paths(spec, remaining - 1, height, acc, visit);
        acc.pop_back();
    }
    if (spec.allow_level2 && remaining >= 2) {
        acc.push_back(Step::wide_level);
        walk_paths(spec, remaining - 2, height, acc, visit);
        acc.pop_back();
    }
}

inline void check_cap(const FamilySpec& spec, int n, int cap) {
    if (n < 0) throw std::invalid_argument("enumerate: negative half-length");
    const int width = spec.symmetric ? n : 2 * n;
    if (width > cap)
        throw std::invalid_argument("enumerate: x-length " + std::to_string(width) +
                                    " exceeds enumeration cap " + std::to_string(cap));
}

}  // namespace detail

/// Visit every family member of half-length n in lexicographic order
/// (U < D < h < H) without materializing the whole list.
inline void for_each_path(const FamilySpec& spec, int n,
                          const std::function<void(const LatticePath&)>& visit,
                          int cap = default_enumeration_cap) {
    detail::check_cap(spec, n, cap);
    std::vector<Step> acc;
    detail::walk_paths(spec, spec.symmetric ? n : 2 * n, 0, acc, visit);
}

/// All members of the family, as left halves for symmetric specs and as
/// whole paths otherwise.
inline std::vector<LatticePath> enumerate(const FamilySpec& spec, int n,
                                          int cap = default_enumeration_cap) {
    std::vector<LatticePath> out;
    for_each_path(spec, n, [&](const LatticePath& p) { out.push_back(p); }, cap);
    return out;
}

/// Counts for half-lengths 0..max_n in one quadratic-time pass over
/// (position, height), keeping only three DP columns alive. No
/// enumeration, so no cap.
inline std::vector<Int> count_table(const FamilySpec& spec, int max_n) {
    if (max_n < 0) throw std::invalid_argument("count_table: negative half-length");
    const int width = spec.symmetric ? max_n : 2 * max_n;
    const int offset = spec.nonnegative ? 0 : width;
    const std::size_t slots = static_cast<std::size_t>(spec.nonnegative ? width + 1 : 2 * width + 1);

    // cur = counts at x, ahead1/ahead2 = carried contributions at x+1, x+2
    // (wide level steps land two columns ahead).
    std::vector<Int> cur(slots), ahead1(slots), ahead2(slots);
    cur[static_cast<std::size_t>(offset)] = 1;

    std::vector<Int> out;
    out.reserve(static_cast<std::size_t>(max_n) + 1);
    auto harvest = [&](int x) {
        if (spec.symmetric) {
            Int total = 0;
            for (const Int& v : cur) total += v;
            out.push_back(total);
        } else if (x % 2 == 0) {
            out.push_back(cur[static_cast<std::size_t>(offset)]);
        }
    };

    harvest(0);
    for (int x = 0; x < width; ++x) {
        for (std::size_t i = 0; i < slots; ++i) {
            const Int& ways = cur[i];
            if (ways == 0) continue;
            if (i + 1 < slots) ahead1[i + 1] += ways;
            if (i > 0) ahead1[i - 1] += ways;
            if (spec.allow_level1) ahead1[i] += ways;
            if (spec.allow_level2 && x + 2 <= width) ahead2[i] += ways;
        }
        cur = std::move(ahead1);
        ahead1 = std::move(ahead2);
        ahead2.assign(slots, Int(0));
        harvest(x + 1);
    }
    return out;
}

/// Number of family members of half-length n (DP, no enumeration).
inline Int count(const FamilySpec& spec, int n) { return count_table(spec, n).back(); }

/// Rows 0..max_n of the triangle d(n, k): nonnegative symmetric Dyck left
/// halves of x-length n ending at height k. Row n has entries k = 0..n.
inline std::vector<std::vector<Int>> mid_height_table(int max_n) {
    if (max_n < 0) throw std::invalid_argument("mid_height_table: negative n");
    std::vector<std::vector<Int>> d(static_cast<std::size_t>(max_n) + 1);
    d[0] = {Int(1)};
    for (int n = 1; n <= max_n; ++n) {
        auto& row = d[static_cast<std::size_t>(n)];
        row.assign(static_cast<std::size_t>(n) + 1, Int(0));
        const auto& prev = d[static_cast<std::size_t>(n) - 1];
        for (int k = 0; k <= n; ++k) {
            Int v = 0;
            if (k - 1 >= 0 && k - 1 <= n - 1) v += prev[static_cast<std::size_t>(k) - 1];
            if (k + 1 <= n - 1) v += prev[static_cast<std::size_t>(k) + 1];
            row[static_cast<std::size_t>(k)] = v;
        }
    }
    return d;
}

/// Row n of the d(n, k) triangle alone, in linear memory.
inline std::vector<Int> mid_height_row(int n) {
    if (n < 0) throw std::invalid_argument("mid_height_row: negative n");
    std::vector<Int> row{Int(1)};
    for (int i = 1; i <= n; ++i) {
        std::vector<Int> next(static_cast<std::size_t>(i) + 1, Int(0));
        for (int k = 0; k <= i; ++k) {
            if (k - 1 >= 0) next[static_cast<std::size_t>(k)] += row[static_cast<std::size_t>(k) - 1];
            if (k + 1 <= i - 1) next[static_cast<std::size_t>(k)] += row[static_cast<std::size_t>(k) + 1];
        }
        row = std::move(next);
    }
    return row;
}

/// d(n, k); zero when k is negative, k > n, or n-k is odd.
inline Int count_midheight(int n, int k) {
    if (n < 0 || k < 0 || k > n) return 0;
    return mid_height_row(n)[static_cast<std::size_t>(k)];
}

/// Rows 0..max_n of the triangle s(n, k): free symmetric Schroeder left
/// halves of x-length n whose n left steps contain exactly k up steps.
inline std::vector<std::vector<Int>> schroeder_upstep_table(int max_n) {
    if (max_n < 0) throw std::invalid_argument("schroeder_upstep_table: negative n");
    std::vector<std::vector<Int>> s(static_cast<std::size_t>(max_n) + 1);
    s[0] = {Int(1)};
    for (int n = 1; n <= max_n; ++n) {
        auto& row = s[static_cast<std::size_t>(n)];
        row.assign(static_cast<std::size_t>(n) + 1, Int(0));
        // Classify by the final step of the half: U, D, or H.
        for (int k = 0; k <= n; ++k) {
            Int v = 0;
            if (k >= 1 && k - 1 <= n - 1) v += s[static_cast<std::size_t>(n) - 1][static_cast<std::size_t>(k) - 1];
            if (k <= n - 1) v += s[static_cast<std::size_t>(n) - 1][static_cast<std::size_t>(k)];
            if (n >= 2 && k <= n - 2) v += s[static_cast<std::size_t>(n) - 2][static_cast<std::size_t>(k)];
            row[static_cast<std::size_t>(k)] = v;
        }
    }
    return s;
}

inline Int count_free_schroeder_by_upsteps(int n, int k) {
    if (n < 0 || k < 0 || k > n) return 0;
    return schroeder_upstep_table(n)[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

namespace detail {

/// Axis vertices (height zero, endpoints included) of a full path whose
/// every step has width 1.
inline int axis_vertex_count(const LatticePath& full) {
    int count = 1;  // the origin
    int y = 0;
    for (Step s : full.steps())
        if ((y += step_rise(s)) == 0) ++count;
    return count;
}

}  // namespace detail

/// Total number of axis vertices over all nonnegative symmetric Dyck paths
/// of length 2n, by lattice DP: a full-path axis vertex at x <= n pairs a
/// half-prefix ending at height 0 with an arbitrary nonnegative
/// continuation, and the right half mirrors the left.
inline Int axis_points_total(int n) {
    if (n < 0) throw std::invalid_argument("axis_points_total: negative n");
    std::vector<Int> at_zero(static_cast<std::size_t>(n) + 1);       // prefixes of length x ending at 0
    std::vector<Int> prefix_total(static_cast<std::size_t>(n) + 1);  // prefixes of length x, any end
    std::vector<Int> row{Int(1)};
    for (int x = 0; x <= n; ++x) {
        if (x > 0) {
            std::vector<Int> next(static_cast<std::size_t>(x) + 1, Int(0));
            for (int k = 0; k <= x; ++k) {
                if (k - 1 >= 0) next[static_cast<std::size_t>(k)] += row[static_cast<std::size_t>(k) - 1];
                if (k + 1 <= x - 1) next[static_cast<std::size_t>(k)] += row[static_cast<std::size_t>(k) + 1];
            }
            row = std::move(next);
        }
        at_zero[static_cast<std::size_t>(x)] = row[0];
        Int t = 0;
        for (const Int& v : row) t += v;
        prefix_total[static_cast<std::size_t>(x)] = t;
    }
    Int doubled = 0;
    for (int x = 0; x <= n; x += 2)
        doubled += at_zero[static_cast<std::size_t>(x)] * prefix_total[static_cast<std::size_t>(n - x)];
    Int total = 2 * doubled;
    if (n % 2 == 0) total -= at_zero[static_cast<std::size_t>(n)];  // midpoint counted once
    return total;
}

/// Same statistic by explicit enumeration of left halves.
inline Int axis_points_total_oracle(int n, int cap = default_enumeration_cap) {
    Int total = 0;
    for_each_path(FamilySpec::dyck(true, true), n,
                  [&](const LatticePath& half) { total += detail::axis_vertex_count(mirror_half(half)); },
                  cap);
    return total;
}

/// Sum of mid-heights over all nonnegative symmetric Dyck paths of
/// length 2n.
inline Int mid_height_total(int n) {
    if (n < 0) throw std::invalid_argument("mid_height_total: negative n");
    const auto row = mid_height_row(n);
    Int total = 0;
    for (int k = 0; k <= n; ++k) total += Int(k) * row[static_cast<std::size_t>(k)];
    return total;
}

/// Total axis vertices over all plain (not symmetric) Dyck paths of
/// length 2n, by enumeration.
inline Int dyck_axis_points_total(int n, int cap = default_enumeration_cap) {
    Int total = 0;
    for_each_path(FamilySpec::dyck(true, false), n,
                  [&](const LatticePath& p) { total += detail::axis_vertex_count(p); }, cap);
    return total;
}

/// d(n, .) row from explicit enumeration, for cross-checking the DP.
inline std::vector<Int> mid_height_row_oracle(int n, int cap = default_enumeration_cap) {
    std::vector<Int> row(static_cast<std::size_t>(n) + 1, Int(0));
    for_each_path(FamilySpec::dyck(true, true), n,
                  [&](const LatticePath& half) { ++row[static_cast<std::size_t>(half.final_height())]; },
                  cap);
    return row;
}

/// s(n, .) row from explicit enumeration.
inline std::vector<Int> schroeder_upstep_row_oracle(int n, int cap = default_enumeration_cap) {
    std::vector<Int> row(static_cast<std::size_t>(n) + 1, Int(0));
    for_each_path(FamilySpec::schroeder(false, true), n, [&](const LatticePath& half) {
        int ups = 0;
        for (Step s : half.steps())
            if (s == Step::up) ++ups;
        ++row[static_cast<std::size_t>(ups)];
    }, cap);
    return row;
}

}  // namespace symlat
