#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "paths.hpp"

namespace symlat {

namespace detail {

inline void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

inline bool has_step(const LatticePath& p, Step s) {
    for (Step t : p.steps())
        if (t == s) return true;
    return false;
}

}  // namespace detail

/// Result of stripping level steps from a half: the Dyck core plus the
/// multiset of core vertices (0..core length) the removed steps sat at.
struct LevelRemoval {
    LatticePath dyck_half;
    std::vector<std::size_t> positions;
};

/// Strip all width-1 level steps from a nonnegative symmetric Motzkin
/// left half. The recorded positions make the map invertible; a half with
/// k level steps maps to a Dyck half of x-length n-k.
inline LevelRemoval remove_levels(const LatticePath& motzkin_half) {
    detail::require(!detail::has_step(motzkin_half, Step::wide_level),
                    "remove_levels: width-2 level step in a Motzkin half");
    detail::require(motzkin_half.nonnegative(), "remove_levels: half dips below the axis");
    LevelRemoval out;
    std::vector<Step> core;
    for (Step s : motzkin_half.steps()) {
        if (s == Step::level)
            out.positions.push_back(core.size());
        else
            core.push_back(s);
    }
    out.dyck_half = LatticePath(std::move(core));
    return out;
}

/// Inverse of remove_levels: insert one width-1 level step at each listed
/// vertex (repeats allowed). Positions must be sorted ascending.
inline LatticePath insert_levels(const LatticePath& dyck_half,
                                 const std::vector<std::size_t>& positions) {
    const auto& core = dyck_half.steps();
    std::vector<Step> steps;
    steps.reserve(core.size() + positions.size());
    std::size_t p = 0;
    for (std::size_t v = 0; v <= core.size(); ++v) {
        while (p < positions.size() && positions[p] == v) {
            steps.push_back(Step::level);
            ++p;
        }
        if (v < core.size()) steps.push_back(core[v]);
    }
    detail::require(p == positions.size(), "insert_levels: position beyond last vertex");
    return LatticePath(std::move(steps));
}

/// Strip all width-2 level steps from a nonnegative symmetric Schroeder
/// left half; k removed steps take x-length n to n-2k.
inline LevelRemoval remove_wide_levels(const LatticePath& schroeder_half) {
    detail::require(!detail::has_step(schroeder_half, Step::level),
                    "remove_wide_levels: width-1 level step in a Schroeder half");
    detail::require(schroeder_half.nonnegative(), "remove_wide_levels: half dips below the axis");
    LevelRemoval out;
    std::vector<Step> core;
    for (Step s : schroeder_half.steps()) {
        if (s == Step::wide_level)
            out.positions.push_back(core.size());
        else
            core.push_back(s);
    }
    out.dyck_half = LatticePath(std::move(core));
    return out;
}

inline LatticePath insert_wide_levels(const LatticePath& dyck_half,
                                      const std::vector<std::size_t>& positions) {
    const auto& core = dyck_half.steps();
    std::vector<Step> steps;
    steps.reserve(core.size() + positions.size());
    std::size_t p = 0;
    for (std::size_t v = 0; v <= core.size(); ++v) {
        while (p < positions.size() && positions[p] == v) {
            steps.push_back(Step::wide_level);
            ++p;
        }
        if (v < core.size()) steps.push_back(core[v]);
    }
    detail::require(p == positions.size(), "insert_wide_levels: position beyond last vertex");
    return LatticePath(std::move(steps));
}

/// A Dyck left half with the position of the last ascent to each height
/// 1..k marked, k being the mid-height. The scan runs left to right over
/// the half only; the last up step ending at height i wins.
struct AscentMarking {
    LatticePath path;
    std::vector<std::size_t> last_ascent_positions;  // index i-1 holds the mark for height i
};

inline AscentMarking mark_last_ascents(const LatticePath& dyck_half) {
    detail::require(!detail::has_step(dyck_half, Step::level) &&
                        !detail::has_step(dyck_half, Step::wide_level),
                    "mark_last_ascents: level step in a Dyck half");
    detail::require(dyck_half.nonnegative(), "mark_last_ascents: half dips below the axis");
    const int k = dyck_half.final_height();
    AscentMarking marking{dyck_half, std::vector<std::size_t>(static_cast<std::size_t>(k), 0)};
    int y = 0;
    for (std::size_t i = 0; i < dyck_half.step_count(); ++i) {
        y += step_rise(dyck_half.steps()[i]);
        if (dyck_half.steps()[i] == Step::up && y >= 1 && y <= k)
            marking.last_ascent_positions[static_cast<std::size_t>(y) - 1] = i;
    }
    return marking;
}

/// Turn the last ascents to heights 1..i into down steps. The image ends
/// at height k-2i and, for i > 0, dips below the axis; i = 0 is the
/// identity.
inline LatticePath phi(const LatticePath& dyck_half, int i) {
    const AscentMarking marking = mark_last_ascents(dyck_half);
    const int k = dyck_half.final_height();
    if (i < 0 || i > k)
        throw std::invalid_argument("phi: i = " + std::to_string(i) + " exceeds mid-height " +
                                    std::to_string(k));
    std::vector<Step> steps = dyck_half.steps();
    for (int h = 1; h <= i; ++h)
        steps[marking.last_ascent_positions[static_cast<std::size_t>(h) - 1]] = Step::down;
    return LatticePath(std::move(steps));
}

struct PhiPreimage {
    LatticePath restricted;  // the nonnegative half
    int premier_count = 0;   // how many premier descents were flipped
};

/// Recover the unique (Q, i) with phi(Q, i) equal to the given free half.
/// A descent is premier when it first takes the path from its running
/// minimum m <= 0 down to m-1, scanning left to right.
inline PhiPreimage phi_inverse(const LatticePath& free_half) {
    detail::require(!detail::has_step(free_half, Step::level) &&
                        !detail::has_step(free_half, Step::wide_level),
                    "phi_inverse: level step in a Dyck half");
    std::vector<Step> steps = free_half.steps();
    int y = 0, record_min = 0, flips = 0;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        const int rise = step_rise(steps[i]);
        if (steps[i] == Step::down && y == record_min) {
            steps[i] = Step::up;
            record_min = y - 1;
            ++flips;
        }
        y += rise;
    }
    return {LatticePath(std::move(steps)), flips};
}

/// One bit per up step of a free symmetric Schroeder half, in
/// left-to-right order; a set bit turns that up step into a width-1 level
/// step.
using UpStepMask = std::vector<bool>;

/// Replace the masked up steps by width-1 level steps, producing a free
/// symmetric MS half.
inline LatticePath psi(const LatticePath& schroeder_half, const UpStepMask& mask) {
    detail::require(!detail::has_step(schroeder_half, Step::level),
                    "psi: width-1 level step in a Schroeder half");
    std::vector<Step> steps = schroeder_half.steps();
    std::size_t bit = 0;
    for (Step& s : steps) {
        if (s != Step::up) continue;
        if (bit >= mask.size()) throw std::invalid_argument("psi: mask shorter than up-step count");
        if (mask[bit]) s = Step::level;
        ++bit;
    }
    if (bit != mask.size()) throw std::invalid_argument("psi: mask longer than up-step count");
    return LatticePath(std::move(steps));
}

struct PsiPreimage {
    LatticePath schroeder_half;
    UpStepMask mask;
};

/// Recover (Q, mask): every width-1 level step becomes an up step again,
/// and the mask records which up steps of Q had been masked.
inline PsiPreimage psi_inverse(const LatticePath& ms_half) {
    PsiPreimage out;
    std::vector<Step> steps = ms_half.steps();
    for (Step& s : steps) {
        if (s == Step::level) {
            out.mask.push_back(true);
            s = Step::up;
        } else if (s == Step::up) {
            out.mask.push_back(false);
        }
    }
    out.schroeder_half = LatticePath(std::move(steps));
    return out;
}

}  // namespace symlat
