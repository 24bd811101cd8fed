#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "bijections.hpp"
#include "paths.hpp"
#include "riordan.hpp"
#include "series.hpp"

namespace symlat {

/// The three independent evaluation routes an identity can be checked by.
enum class CheckMode { closed_form, riordan, oracle };

inline std::string_view mode_name(CheckMode m) {
    switch (m) {
        case CheckMode::closed_form: return "closed_form";
        case CheckMode::riordan: return "riordan";
        default: return "oracle";
    }
}

inline CheckMode mode_from_name(std::string_view name) {
    if (name == "closed_form") return CheckMode::closed_form;
    if (name == "riordan") return CheckMode::riordan;
    if (name == "oracle") return CheckMode::oracle;
    throw std::invalid_argument("unknown check mode '" + std::string(name) + "'");
}

inline const std::vector<CheckMode>& all_modes() {
    static const std::vector<CheckMode> modes = {CheckMode::closed_form, CheckMode::riordan,
                                                 CheckMode::oracle};
    return modes;
}

struct CheckFailure {
    long n = 0;
    std::string expected;
    std::string got;
    CheckMode mode = CheckMode::closed_form;
};

struct ModeReport {
    CheckMode mode = CheckMode::closed_form;
    bool available = true;
    long checked_up_to = -1;
    std::vector<bool> verdicts;  // one per n in 0..checked_up_to
    std::optional<CheckFailure> failure;

    bool pass() const { return available && !failure.has_value(); }
};

struct IdentityReport {
    std::string id;
    std::string description;
    long requested_max_n = -1;
    std::vector<ModeReport> modes;

    bool any_available() const {
        for (const auto& m : modes)
            if (m.available) return true;
        return false;
    }

    /// Pass requires every attempted mode to agree; a report with no
    /// available mode is "unavailable", not a pass.
    bool passed() const {
        if (!any_available()) return false;
        for (const auto& m : modes)
            if (m.available && m.failure) return false;
        return true;
    }

    bool failed() const {
        for (const auto& m : modes)
            if (m.available && m.failure) return true;
        return false;
    }

    std::optional<CheckFailure> first_failure() const {
        for (const auto& m : modes)
            if (m.failure) return m.failure;
        return std::nullopt;
    }

    long max_checked() const {
        long hi = -1;
        for (const auto& m : modes)
            if (m.available && m.checked_up_to > hi) hi = m.checked_up_to;
        return hi;
    }
};

/// Closed form for the mid-height triangle: (k+1)/(n+1) * binom(n+1, (n-k)/2)
/// when n-k is even, else 0.
inline Int midheight_closed_form(long n, long k) {
    if (n < 0 || k < 0 || k > n || (n - k) % 2 != 0) return 0;
    const Int num = Int(k + 1) * binomial(n + 1, (n - k) / 2);
    if (num % (n + 1) != 0)
        throw std::domain_error("midheight_closed_form: non-integral value at (" +
                                std::to_string(n) + "," + std::to_string(k) + ")");
    return num / (n + 1);
}

/// Closed form for the Schroeder up-step triangle:
/// sum_j binom(k+j, k) * binom(j, n-j-k).
inline Int schroeder_closed_form(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    Int total = 0;
    for (long j = 0; j <= n - k; ++j) total += binomial(k + j, k) * binomial(j, n - j - k);
    return total;
}

/// (2^n - binom(n, floor(n/2))) / binom(n, floor(n/2)): exact average
/// mid-height of the symmetric Dyck paths of length 2n.
inline Rat average_mid_height(long n) {
    if (n < 0) throw std::invalid_argument("average_mid_height: negative n");
    const Int central = binomial(n, n / 2);
    return Rat(pow2(n) - central, central);
}

/// Exact average number of axis points of symmetric Dyck paths of length
/// 2n: (4m+1)/(m+1) for n = 2m and 4(m+1)/(m+2) for n = 2m+1, both of
/// which tend to 4.
inline Rat average_axis_points(long n) {
    if (n < 0) throw std::invalid_argument("average_axis_points: negative n");
    const long m = n / 2;
    if (n % 2 == 0) return Rat(4 * m + 1, m + 1);
    return Rat(4 * (m + 1), m + 2);
}

struct AsymptoticComparison {
    long m = 0;
    Rat average;    // exact value at n = 2m
    Rat reference;  // sqrt(pi*m) - 1 to twelve decimal digits
    Rat abs_error;
    Rat tolerance;
    bool within = false;
};

/// Compare the exact average mid-height at n = 2m against sqrt(pi*m) - 1.
/// The reference uses a 35-digit rational pi and an integer square root,
/// so its own error (~1e-12) is far below any sane tolerance.
inline AsymptoticComparison mid_height_asymptotic_check(long m, const Rat& tolerance = Rat(1, 100)) {
    if (m < 1) throw std::invalid_argument("mid_height_asymptotic_check: m must be >= 1");
    static const Int pi_num("314159265358979323846264338327950288");
    static const Int pi_den = pow_int(10, 35);
    const Int scale = pow_int(10, 12);
    const Int scaled_sqrt = isqrt_floor(pi_num * m * scale * scale / pi_den);
    AsymptoticComparison out;
    out.m = m;
    out.average = average_mid_height(2 * m);
    out.reference = Rat(scaled_sqrt, scale) - 1;
    out.abs_error = out.average - out.reference;
    if (out.abs_error < 0) out.abs_error = -out.abs_error;
    out.tolerance = tolerance;
    out.within = out.abs_error <= tolerance;
    return out;
}

inline std::vector<Int> binomial_transform(const std::vector<Int>& a) {
    std::vector<Int> b(a.size());
    for (std::size_t n = 0; n < a.size(); ++n)
        for (std::size_t k = 0; k <= n; ++k)
            b[n] += binomial(static_cast<long>(n), static_cast<long>(k)) * a[k];
    return b;
}

inline std::vector<Int> inverse_binomial_transform(const std::vector<Int>& b) {
    std::vector<Int> a(b.size());
    for (std::size_t n = 0; n < b.size(); ++n)
        for (std::size_t k = 0; k <= n; ++k) {
            const Int term = binomial(static_cast<long>(n), static_cast<long>(k)) * b[k];
            if ((n - k) % 2 == 0)
                a[n] += term;
            else
                a[n] -= term;
        }
    return a;
}

/// Registry of every checked identity. Each case owns up to three
/// per-mode checkers with hard caps (series modes stop at the truncation
/// order, enumeration modes at the path cap); asking for more is an
/// error, not a silent clamp.
class IdentityRegistry {
public:
    struct ModeImpl {
        long max_n = 0;
        std::function<std::optional<CheckFailure>(long)> check_n;
    };

    struct Case {
        std::string id;
        std::string description;
        std::map<CheckMode, ModeImpl> impls;
    };

    void add(Case c) {
        if (c.impls.empty()) throw std::invalid_argument("IdentityRegistry: case with no modes");
        order_.push_back(c.id);
        cases_.emplace(c.id, std::move(c));
    }

    const std::vector<std::string>& ids() const { return order_; }

    bool contains(std::string_view id) const { return cases_.count(std::string(id)) > 0; }

    const Case& at(std::string_view id) const {
        auto it = cases_.find(std::string(id));
        if (it == cases_.end())
            throw std::invalid_argument("unknown identity id '" + std::string(id) + "'");
        return it->second;
    }

    /// Check one identity. Asking a requested mode for more than its cap
    /// is an error here; check_all clamps instead.
    IdentityReport check(std::string_view id, long max_n = -1,
                         const std::vector<CheckMode>& modes = all_modes()) const {
        return check_impl(at(id), max_n, modes, false);
    }

    /// Run the whole registry in registration order. Failures are data,
    /// never errors: per-identity ranges clamp to each mode's cap.
    std::vector<IdentityReport> check_all(long max_n = -1,
                                          const std::vector<CheckMode>& modes = all_modes()) const {
        std::vector<IdentityReport> out;
        out.reserve(order_.size());
        for (const std::string& id : order_) out.push_back(check_impl(at(id), max_n, modes, true));
        return out;
    }

    static IdentityRegistry standard(std::size_t order = default_order);

private:
    IdentityReport check_impl(const Case& c, long max_n, const std::vector<CheckMode>& modes,
                              bool clamp_to_cap) const {
        IdentityReport report;
        report.id = c.id;
        report.description = c.description;
        report.requested_max_n = max_n;
        for (CheckMode mode : modes) {
            ModeReport mr;
            mr.mode = mode;
            auto it = c.impls.find(mode);
            if (it == c.impls.end()) {
                mr.available = false;
                report.modes.push_back(std::move(mr));
                continue;
            }
            if (max_n > it->second.max_n && !clamp_to_cap)
                throw std::invalid_argument("identity " + c.id + ": max_n " + std::to_string(max_n) +
                                            " exceeds cap " + std::to_string(it->second.max_n) +
                                            " for mode " + std::string(mode_name(mode)));
            const long cap = max_n < 0 ? it->second.max_n : std::min(max_n, it->second.max_n);
            for (long n = 0; n <= cap; ++n) {
                auto failure = it->second.check_n(n);
                mr.verdicts.push_back(!failure.has_value());
                if (failure && !mr.failure) {
                    failure->mode = mode;
                    mr.failure = std::move(failure);
                }
            }
            mr.checked_up_to = cap;
            report.modes.push_back(std::move(mr));
        }
        return report;
    }

    std::vector<std::string> order_;
    std::map<std::string, Case, std::less<>> cases_;
};

namespace detail {

/// Everything the standard registry's checkers share, computed once.
struct RegistryContext {
    std::size_t order;
    long series_cap;  // highest n a series-backed mode can reach

    std::vector<Int> dv, mv, sv;      // d, m, s coefficients
    std::vector<Int> pell, hv;        // p_(n+1), h_(n+1) by recurrence
    std::vector<Int> pell_gf, h_gf;   // the same from 1/(1-2x-x^2), 1/(1-3x-x^2)
    std::vector<Int> geo2;            // 1/(1-2x)

    RiordanArray pascal, pascal_inv, dyck_strip, dyck_strip_inv, dstar, fib, estar, fib_inv;

    std::vector<Int> ftra_P_d, ftra_Pinv_m, ftra_D_d, ftra_Dinv_s, ftra_E_m, ftra_Einv_s;
    std::vector<Int> ftra_Dstar_ones, ftra_Dstar_nat, ftra_Estar_ones, ftra_Estar_geo2;

    std::vector<std::vector<Int>> dtab, stab;  // DP triangles
    std::vector<Int> axis_dp;                  // axis_points_total by DP

    std::vector<Int> gf_total, gf_even, gf_odd;          // axis-point series
    std::vector<Int> gf1_a, gf1_b, gf1_c, gf2_rhs;       // B(x^2) forms, 1/(1-2x) form
    std::vector<Int> gfs_rhs, gfd_b, gfd_c;              // s and d series identities

    explicit RegistryContext(std::size_t ord)
        : order(ord),
          series_cap(static_cast<long>(ord) - 1),
          pascal(named_array("P", ord)),
          pascal_inv(named_array("P_inv", ord)),
          dyck_strip(named_array("D", ord)),
          dyck_strip_inv(named_array("D_inv", ord)),
          dstar(named_array("D_star", ord)),
          fib(named_array("E", ord)),
          estar(named_array("E_star", ord)),
          fib_inv(named_array("E_inv", ord)) {
        const TruncatedSeries d = named_series("d", ord);
        const TruncatedSeries m = named_series("m", ord);
        const TruncatedSeries s = named_series("s", ord);
        dv = assert_integral(d);
        mv = assert_integral(m);
        sv = assert_integral(s);

        pell = {Int(1), Int(2)};
        hv = {Int(1), Int(3)};
        for (std::size_t n = 2; n < ord; ++n) {
            pell.push_back(2 * pell[n - 1] + pell[n - 2]);
            hv.push_back(3 * hv[n - 1] + hv[n - 2]);
        }

        const TruncatedSeries one = TruncatedSeries::constant(Rat(1), ord);
        pell_gf = assert_integral(div(one, TruncatedSeries::polynomial({1, -2, -1}, ord)));
        h_gf = assert_integral(div(one, TruncatedSeries::polynomial({1, -3, -1}, ord)));
        geo2 = assert_integral(div(one, TruncatedSeries::polynomial({1, -2}, ord)));

        ftra_P_d = assert_integral(apply_ftra(pascal, d));
        ftra_Pinv_m = assert_integral(apply_ftra(pascal_inv, m));
        ftra_D_d = assert_integral(apply_ftra(dyck_strip, d));
        ftra_Dinv_s = assert_integral(apply_ftra(dyck_strip_inv, s));
        ftra_E_m = assert_integral(apply_ftra(fib, m));
        ftra_Einv_s = assert_integral(apply_ftra(fib_inv, s));

        const TruncatedSeries ones_gf = div(one, TruncatedSeries::polynomial({1, -1}, ord));
        const TruncatedSeries nat_gf = ones_gf * ones_gf;  // 1, 2, 3, ...
        ftra_Dstar_ones = assert_integral(apply_ftra(dstar, ones_gf));
        ftra_Dstar_nat = assert_integral(apply_ftra(dstar, nat_gf));
        ftra_Estar_ones = assert_integral(apply_ftra(estar, ones_gf));
        ftra_Estar_geo2 = assert_integral(apply_ftra(estar, div(one, TruncatedSeries::polynomial({1, -2}, ord))));

        dtab = mid_height_table(series_cap);
        stab = schroeder_upstep_table(series_cap);
        axis_dp.reserve(ord);
        for (long n = 0; n <= series_cap; ++n) axis_dp.push_back(axis_points_total(static_cast<int>(n)));

        const std::size_t half = ord / 2 + 1;
        const TruncatedSeries c2 = stretch(named_series("C", half), 2).truncated(ord);
        const TruncatedSeries b2 = stretch(named_series("B", half), 2).truncated(ord);
        const TruncatedSeries r2 = stretch(named_series("R", half), 2).truncated(ord);

        gf_total = assert_integral(Rat(2) * (c2 * d) - c2);
        gf_even = assert_integral(c2 * (Rat(2) * b2 - one));
        gf_odd = assert_integral(Rat(2) * shift_up(b2 * c2 * c2, 1));

        gf1_a = assert_integral(b2);
        gf1_b = assert_integral(div(one, one - Rat(2) * shift_up(c2, 2)));
        gf1_c = assert_integral(div(c2, one - shift_up(c2 * c2, 2)));
        const TruncatedSeries q = one - shift_up(c2, 1);
        gf2_rhs = assert_integral(div(c2, q * q));
        gfs_rhs = assert_integral(one + shift_up(s, 1) + shift_up(s, 2) + shift_up(s * r2, 2));
        gfd_b = assert_integral(b2 + shift_up(b2 * c2, 1));
        gfd_c = assert_integral(div(c2, q));
    }
};

inline std::optional<CheckFailure> mismatch(long n, const Int& expected, const Int& got) {
    if (expected == got) return std::nullopt;
    return CheckFailure{n, expected.str(), got.str(), CheckMode::closed_form};
}

inline std::optional<CheckFailure> mismatch_rat(long n, const Rat& expected, const Rat& got) {
    if (expected == got) return std::nullopt;
    return CheckFailure{n, rational_string(expected), rational_string(got), CheckMode::closed_form};
}

}  // namespace detail

inline IdentityRegistry IdentityRegistry::standard(std::size_t order) {
    auto ctx = std::make_shared<const detail::RegistryContext>(order);
    const long cap = ctx->series_cap;
    const long oracle_cap = 12;

    IdentityRegistry reg;
    using detail::mismatch;
    using detail::mismatch_rat;

    auto count_dp = [](const FamilySpec& spec, long n) { return count(spec, static_cast<int>(n)); };

    reg.add({"T3.1", "m_n = sum_k binom(n,k) d_k (binomial transform of the d sequence)",
             {{CheckMode::closed_form, {cap, [ctx](long n) {
                   Int sum = 0;
                   for (long k = 0; k <= n; ++k) sum += binomial(n, k) * binomial(k, k / 2);
                   return mismatch(n, ctx->mv[static_cast<std::size_t>(n)], sum);
               }}},
              {CheckMode::riordan, {cap, [ctx](long n) {
                   return mismatch(n, ctx->mv[static_cast<std::size_t>(n)],
                                   ctx->ftra_P_d[static_cast<std::size_t>(n)]);
               }}},
              {CheckMode::oracle, {oracle_cap, [count_dp](long n) {
                   Int sum = 0;
                   for (long k = 0; k <= n; ++k)
                       sum += binomial(n, k) * count_dp(FamilySpec::dyck(), k);
                   return mismatch(n, count_dp(FamilySpec::motzkin(), n), sum);
               }}}}});

    reg.add({"T3.2", "d_n = sum_k (-1)^(n-k) binom(n,k) m_k (inverse binomial transform)",
             {{CheckMode::closed_form, {cap, [ctx](long n) {
                   Int sum = 0;
                   for (long k = 0; k <= n; ++k) {
                       const Int term = binomial(n, k) * ctx->mv[static_cast<std::size_t>(k)];
                       if ((n - k) % 2 == 0) sum += term; else sum -= term;
                   }
                   return mismatch(n, ctx->dv[static_cast<std::size_t>(n)], sum);
               }}},
              {CheckMode::riordan, {cap, [ctx](long n) {
                   return mismatch(n, ctx->dv[static_cast<std::size_t>(n)],
                                   ctx->ftra_Pinv_m[static_cast<std::size_t>(n)]);
               }}},
              {CheckMode::oracle, {oracle_cap, [count_dp](long n) {
                   Int sum = 0;
                   for (long k = 0; k <= n; ++k) {
                       const Int term = binomial(n, k) * count_dp(FamilySpec::motzkin(), k);
                       if ((n - k) % 2 == 0) sum += term; else sum -= term;
                   }
                   return mismatch(n, count_dp(FamilySpec::dyck(), n), sum);
               }}}}});

    reg.add({"T3.3", "s_n = sum_k binom(n-k, n-2k) d_(n-2k)",
             {{CheckMode::closed_form, {cap, [ctx](long n) {
                   Int sum = 0;
                   for (long k = 0; 2 * k <= n; ++k)
                       sum += binomial(n - k, n - 2 * k) * binomial(n - 2 * k, (n - 2 * k) / 2);
                   return mismatch(n, ctx->sv[static_cast<std::size_t>(n)], sum);
               }}},
              {CheckMode::riordan, {cap, [ctx](long n) {
                   return mismatch(n, ctx->sv[static_cast<std::size_t>(n)],
                                   ctx->ftra_D_d[static_cast<std::size_t>(n)]);
               }}},
              {CheckMode::oracle, {oracle_cap, [count_dp](long n) {
                   Int sum = 0;
                   for (long k = 0; 2 * k <= n; ++k)
                       sum += binomial(n - k, n - 2 * k) * count_dp(FamilySpec::dyck(), n - 2 * k);
                   return mismatch(n, count_dp(FamilySpec::schroeder(), n), sum);
               }}}}});

    reg.add({"T3.4", "d_n = sum_k (-1)^((n-k)/2) d(n,k) s_k",
             {{CheckMode::closed_form, {cap, [ctx](long n) {
                   Int sum = 0;
                   for (long k = n % 2; k <= n; k += 2) {
                       const Int term = midheight_closed_form(n, k) * ctx->sv[static_cast<std::size_t>(k)];
                       if (((n - k) / 2) % 2 == 0) sum += term; else sum -= term;
                   }
                   return mismatch(n, ctx->dv[static_cast<std::size_t>(n)], sum);
               }}},
              {CheckMode::riordan, {cap, [ctx](long n) {
                   return mismatch(n, ctx->dv[static_cast<std::size_t>(n)],
                                   ctx->ftra_Dinv_s[static_cast<std::size_t>(n)]);
               }}},
              {CheckMode::oracle, {oracle_cap, [ctx, count_dp](long n) {
                   Int sum = 0;
                   for (long k = n % 2; k <= n; k += 2) {
                       const Int term = ctx->dtab[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] *
                                        count_dp(FamilySpec::schroeder(), k);
                       if (((n - k) / 2) % 2 == 0) sum += term; else sum -= term;
                   }
                   return mismatch(n, count_dp(FamilySpec::dyck(), n), sum);
               }}}}});

    reg.add({"T3.5", "s_n = sum_k (-1)^(n-k) s(n,k) m_k",
             {{CheckMode::closed_form, {cap, [ctx](long n) {
                   Int sum = 0;
                   for (long k = 0; k <= n; ++k) {
                       const Int term = schroeder_closed_form(n, k) * ctx->mv[static_cast<std::size_t>(k)];
                       if ((n - k) % 2 == 0) sum += term; else sum -= term;
                   }
                   return mismatch(n, ctx->sv[static_cast<std::size_t>(n)], sum);
               }}},
              {CheckMode::riordan, {cap, [ctx](long n) {
                   return mismatch(n, ctx->sv[static_cast<std::size_t>(n)],
                                   ctx->ftra_E_m[static_cast<std::size_t>(n)]);
               }}},
              {CheckMode::oracle, {oracle_cap, [ctx, count_dp](long n) {
                   Int sum = 0;
                   for (long k = 0; k <= n; ++k) {
                       const Int term = ctx->stab[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] *
                                        count_dp(FamilySpec::motzkin(), k);
                       if ((n - k) % 2 == 0) sum += term; else sum -= term;
                   }
                   return mismatch(n, count_dp(FamilySpec::schroeder(), n), sum);
               }}}}});

    reg.add({"T3.6", "m_n = sum_k t(n,k) s_k with t(n,k) the entries of the inverse of E",
             {{CheckMode::riordan, {cap, [ctx](long n) {
                   return mismatch(n, ctx->mv[static_cast<std::size_t>(n)],
                                   ctx->ftra_Einv_s[static_cast<std::size_t>(n)]);
               }}}}});

    reg.add({"R7", "d(n,k) = d(n-1,k-1) + d(n-1,k+1)",
             {{CheckMode::closed_form, {cap, [](long n) -> std::optional<CheckFailure> {
                   if (n == 0) return std::nullopt;
                   for (long k = 0; k <= n; ++k) {
                       const Int want = midheight_closed_form(n - 1, k - 1) + midheight_closed_form(n - 1, k + 1);
                       if (auto f = mismatch(n, want, midheight_closed_form(n, k))) return f;
                   }
                   return std::nullopt;
               }}},
              {CheckMode::riordan, {cap, [ctx](long n) -> std::optional<CheckFailure> {
                   if (n == 0) return std::nullopt;
                   for (long k = 0; k <= n; ++k) {
                       Int want = 0;
                       if (k >= 1) want += ctx->dstar.entry(static_cast<std::size_t>(n - 1), static_cast<std::size_t>(k - 1));
                       if (k + 1 <= n - 1) want += ctx->dstar.entry(static_cast<std::size_t>(n - 1), static_cast<std::size_t>(k + 1));
                       if (auto f = mismatch(n, want, ctx->dstar.entry(static_cast<std::size_t>(n), static_cast<std::size_t>(k)))) return f;
                   }
                   return std::nullopt;
               }}},
              {CheckMode::oracle, {oracle_cap, [](long n) -> std::optional<CheckFailure> {
                   if (n == 0) return std::nullopt;
                   const auto row = mid_height_row_oracle(static_cast<int>(n));
                   const auto prev = mid_height_row_oracle(static_cast<int>(n) - 1);
                   for (long k = 0; k <= n; ++k) {
                       Int want = 0;
                       if (k >= 1) want += prev[static_cast<std::size_t>(k - 1)];
                       if (k + 1 <= n - 1) want += prev[static_cast<std::size_t>(k + 1)];
                       if (auto f = mismatch(n, want, row[static_cast<std::size_t>(k)])) return f;
                   }
                   return std::nullopt;
               }}}}});

    reg.add({"R8", "s(n,k) = s(n-1,k-1) + s(n-1,k) + s(n-2,k)",
             {{CheckMode::closed_form, {cap, [](long n) -> std::optional<CheckFailure> {
                   if (n == 0) return std::nullopt;
                   for (long k = 0; k <= n; ++k) {
                       const Int want = schroeder_closed_form(n - 1, k - 1) + schroeder_closed_form(n - 1, k) +
                                        schroeder_closed_form(n - 2, k);
                       if (auto f = mismatch(n, want, schroeder_closed_form(n, k))) return f;
                   }
                   return std::nullopt;
               }}},
              {CheckMode::riordan, {cap, [ctx](long n) -> std::optional<CheckFailure> {
                   if (n == 0) return std::nullopt;
                   auto entry = [ctx](long nn, long kk) -> Int {
                       if (nn < 0 || kk < 0 || kk > nn) return 0;
                       return ctx->estar.entry(static_cast<std::size_t>(nn), static_cast<std::size_t>(kk));
                   };
                   for (long k = 0; k <= n; ++k) {
                       const Int want = entry(n - 1, k - 1) + entry(n - 1, k) + entry(n - 2, k);
                       if (auto f = mismatch(n, want, entry(n, k))) return f;
                   }
                   return std::nullopt;
               }}},
              {CheckMode::oracle, {oracle_cap, [](long n) -> std::optional<CheckFailure> {
                   if (n < 2) return std::nullopt;
                   const auto row = schroeder_upstep_row_oracle(static_cast<int>(n));
                   const auto prev = schroeder_upstep_row_oracle(static_cast<int>(n) - 1);
                   const auto prev2 = schroeder_upstep_row_oracle(static_cast<int>(n) - 2);
                   for (long k = 0; k <= n; ++k) {
                       Int want = 0;
                       if (k >= 1) want += prev[static_cast<std::size_t>(k - 1)];
                       if (k <= n - 1) want += prev[static_cast<std::size_t>(k)];
                       if (k <= n - 2) want += prev2[static_cast<std::size_t>(k)];
                       if (auto f = mismatch(n, want, row[static_cast<std::size_t>(k)])) return f;
                   }
                   return std::nullopt;
               }}}}});

    reg.add({"T4.2", "sum_k d(n,k) = binom(n, floor(n/2))",
             {{CheckMode::closed_form, {cap, [](long n) {
                   Int sum = 0;
                   for (long k = 0; k <= n; ++k) sum += midheight_closed_form(n, k);
                   return mismatch(n, binomial(n, n / 2), sum);
               }}},
              {CheckMode::riordan, {cap, [ctx](long n) {
                   return mismatch(n, ctx->dv[static_cast<std::size_t>(n)],
                                   ctx->ftra_Dstar_ones[static_cast<std::size_t>(n)]);
               }}},
              {CheckMode::oracle, {oracle_cap, [](long n) {
                   const auto row = mid_height_row_oracle(static_cast<int>(n));
                   Int sum = 0;
                   for (const Int& v : row) sum += v;
                   return mismatch(n, binomial(n, n / 2), sum);
               }}}}});

    reg.add({"T4.3", "sum_k (k+1) d(n,k) = 2^n",
             {{CheckMode::closed_form, {cap, [](long n) {
                   Int sum = 0;
                   for (long k = 0; k <= n; ++k) sum += Int(k + 1) * midheight_closed_form(n, k);
                   return mismatch(n, pow2(n), sum);
               }}},
              {CheckMode::riordan, {cap, [ctx](long n) {
                   return mismatch(n, ctx->geo2[static_cast<std::size_t>(n)],
                                   ctx->ftra_Dstar_nat[static_cast<std::size_t>(n)]);
               }}},
              {CheckMode::oracle, {oracle_cap, [](long n) -> std::optional<CheckFailure> {
                   // The height-lowering maps, run exhaustively: their images
                   // must tile the full free set with no collision.
                   std::unordered_set<std::string> images;
                   Int produced = 0;
                   bool collision = false;
                   for_each_path(FamilySpec::dyck(true, true), static_cast<int>(n),
                                 [&](const LatticePath& q) {
                                     const int k = q.final_height();
                                     for (int i = 0; i <= k && !collision; ++i) {
                                         ++produced;
                                         if (!images.insert(phi(q, i).str()).second) collision = true;
                                     }
                                 });
                   if (collision)
                       return CheckFailure{n, "injective image set", "collision", CheckMode::oracle};
                   if (auto f = mismatch(n, pow2(n), produced)) return f;
                   return mismatch(n, pow2(n), Int(images.size()));
               }}}}});

    reg.add({"C4.4", "average mid-height equals (2^n - binom(n,floor(n/2))) / binom(n,floor(n/2))",
             {{CheckMode::closed_form, {cap, [](long n) {
                   Int total = 0, paths = 0;
                   for (long k = 0; k <= n; ++k) {
                       total += Int(k) * midheight_closed_form(n, k);
                       paths += midheight_closed_form(n, k);
                   }
                   return mismatch_rat(n, average_mid_height(n), Rat(total, paths));
               }}},
              {CheckMode::riordan, {cap, [ctx](long n) {
                   const Int total = ctx->ftra_Dstar_nat[static_cast<std::size_t>(n)] -
                                     ctx->ftra_Dstar_ones[static_cast<std::size_t>(n)];
                   return mismatch_rat(n, average_mid_height(n),
                                       Rat(total, ctx->ftra_Dstar_ones[static_cast<std::size_t>(n)]));
               }}},
              {CheckMode::oracle, {oracle_cap, [count_dp](long n) {
                   return mismatch_rat(n, average_mid_height(n),
                                       Rat(mid_height_total(static_cast<int>(n)),
                                           count_dp(FamilySpec::dyck(), n)));
               }}}}});

    reg.add({"T4.5", "axis-point generating function 2 C(x^2) d(x) - C(x^2) and its even/odd split",
             {{CheckMode::closed_form, {cap, [ctx](long n) {
                   return mismatch_rat(n, average_axis_points(n),
                                       Rat(ctx->axis_dp[static_cast<std::size_t>(n)], binomial(n, n / 2)));
               }}},
              {CheckMode::riordan, {cap, [ctx](long n) -> std::optional<CheckFailure> {
                   const std::size_t i = static_cast<std::size_t>(n);
                   if (auto f = mismatch(n, ctx->axis_dp[i], ctx->gf_total[i])) return f;
                   if (auto f = mismatch(n, ctx->gf_total[i], ctx->gf_even[i] + ctx->gf_odd[i])) return f;
                   const Int even_want = n % 2 == 0 ? ctx->axis_dp[i] : Int(0);
                   const Int odd_want = n % 2 == 1 ? ctx->axis_dp[i] : Int(0);
                   if (auto f = mismatch(n, even_want, ctx->gf_even[i])) return f;
                   return mismatch(n, odd_want, ctx->gf_odd[i]);
               }}},
              {CheckMode::oracle, {oracle_cap, [ctx](long n) {
                   return mismatch(n, ctx->axis_dp[static_cast<std::size_t>(n)],
                                   axis_points_total_oracle(static_cast<int>(n)));
               }}}}});

    reg.add({"R4.5a", "for even length, total axis points = (4m+1) C_m  (checked at n = 2m)",
             {{CheckMode::closed_form, {cap, [ctx](long n) -> std::optional<CheckFailure> {
                   if (n % 2 != 0) return std::nullopt;
                   return mismatch(n, Int(2 * n + 1) * catalan(n / 2),
                                   ctx->axis_dp[static_cast<std::size_t>(n)]);
               }}},
              {CheckMode::riordan, {cap, [ctx](long n) -> std::optional<CheckFailure> {
                   if (n % 2 != 0) return std::nullopt;
                   return mismatch(n, Int(2 * n + 1) * catalan(n / 2),
                                   ctx->gf_even[static_cast<std::size_t>(n)]);
               }}},
              {CheckMode::oracle, {oracle_cap, [](long n) -> std::optional<CheckFailure> {
                   if (n % 2 != 0) return std::nullopt;
                   return mismatch(n, Int(2 * n + 1) * catalan(n / 2),
                                   axis_points_total_oracle(static_cast<int>(n)));
               }}}}});

    reg.add({"R4.5b", "plain Dyck paths: total axis points = C_(n+1)",
             {{CheckMode::oracle, {7, [](long n) {
                   return mismatch(n, catalan(n + 1), dyck_axis_points_total(static_cast<int>(n)));
               }}}}});

    reg.add({"T4.7", "sum_k s(n,k) = p_(n+1) (Pell)",
             {{CheckMode::closed_form, {cap, [ctx](long n) {
                   Int sum = 0;
                   for (long k = 0; k <= n; ++k) sum += schroeder_closed_form(n, k);
                   return mismatch(n, ctx->pell[static_cast<std::size_t>(n)], sum);
               }}},
              {CheckMode::riordan, {cap, [ctx](long n) {
                   return mismatch(n, ctx->pell_gf[static_cast<std::size_t>(n)],
                                   ctx->ftra_Estar_ones[static_cast<std::size_t>(n)]);
               }}},
              {CheckMode::oracle, {oracle_cap, [ctx, count_dp](long n) -> std::optional<CheckFailure> {
                   const auto row = schroeder_upstep_row_oracle(static_cast<int>(n));
                   Int sum = 0;
                   for (const Int& v : row) sum += v;
                   if (auto f = mismatch(n, ctx->pell[static_cast<std::size_t>(n)], sum)) return f;
                   return mismatch(n, sum, count_dp(FamilySpec::schroeder(false, true), n));
               }}}}});

    reg.add({"T4.8", "sum_k 2^k s(n,k) = h_(n+1)",
             {{CheckMode::closed_form, {cap, [ctx](long n) {
                   Int sum = 0;
                   for (long k = 0; k <= n; ++k) sum += pow2(k) * schroeder_closed_form(n, k);
                   return mismatch(n, ctx->hv[static_cast<std::size_t>(n)], sum);
               }}},
              {CheckMode::riordan, {cap, [ctx](long n) {
                   return mismatch(n, ctx->h_gf[static_cast<std::size_t>(n)],
                                   ctx->ftra_Estar_geo2[static_cast<std::size_t>(n)]);
               }}},
              {CheckMode::oracle, {9, [ctx, count_dp](long n) -> std::optional<CheckFailure> {
                   // Mask maps run exhaustively over every free Schroeder
                   // half: images must be distinct and cover the MS family.
                   std::unordered_set<std::string> images;
                   Int produced = 0;
                   bool collision = false;
                   for_each_path(FamilySpec::schroeder(false, true), static_cast<int>(n),
                                 [&](const LatticePath& q) {
                                     int k = 0;
                                     for (Step s : q.steps())
                                         if (s == Step::up) ++k;
                                     for (unsigned long bits = 0; bits < (1ul << k) && !collision; ++bits) {
                                         UpStepMask mask(static_cast<std::size_t>(k));
                                         for (int b = 0; b < k; ++b) mask[static_cast<std::size_t>(b)] = (bits >> b) & 1;
                                         ++produced;
                                         if (!images.insert(psi(q, mask).str()).second) collision = true;
                                     }
                                 });
                   if (collision)
                       return CheckFailure{n, "injective image set", "collision", CheckMode::oracle};
                   if (auto f = mismatch(n, ctx->hv[static_cast<std::size_t>(n)], produced)) return f;
                   return mismatch(n, count_dp(FamilySpec::ms(false, true), n), Int(images.size()));
               }}}}});

    reg.add({"GF1", "B(x^2) = 1/(1-2x^2 C(x^2)) = C(x^2)/(1-x^2 C(x^2)^2)",
             {{CheckMode::riordan, {cap, [ctx](long n) -> std::optional<CheckFailure> {
                   const std::size_t i = static_cast<std::size_t>(n);
                   if (auto f = mismatch(n, ctx->gf1_a[i], ctx->gf1_b[i])) return f;
                   return mismatch(n, ctx->gf1_a[i], ctx->gf1_c[i]);
               }}}}});

    reg.add({"GF2", "1/(1-2x) = C(x^2)/(1-x C(x^2))^2",
             {{CheckMode::riordan, {cap, [ctx](long n) {
                   return mismatch(n, ctx->geo2[static_cast<std::size_t>(n)],
                                   ctx->gf2_rhs[static_cast<std::size_t>(n)]);
               }}}}});

    reg.add({"GFs", "s = 1 + x s + x^2 s + x^2 s R(x^2)",
             {{CheckMode::riordan, {cap, [ctx](long n) {
                   return mismatch(n, ctx->sv[static_cast<std::size_t>(n)],
                                   ctx->gfs_rhs[static_cast<std::size_t>(n)]);
               }}}}});

    reg.add({"GFd", "d = B(x^2) + x B(x^2) C(x^2) = C(x^2)/(1-x C(x^2))",
             {{CheckMode::riordan, {cap, [ctx](long n) -> std::optional<CheckFailure> {
                   const std::size_t i = static_cast<std::size_t>(n);
                   if (auto f = mismatch(n, ctx->dv[i], ctx->gfd_b[i])) return f;
                   return mismatch(n, ctx->dv[i], ctx->gfd_c[i]);
               }}}}});

    return reg;
}

}  // namespace symlat
