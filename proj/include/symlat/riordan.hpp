#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "series.hpp"

namespace symlat {

/// A Riordan group element (g, f): the infinite lower-triangular matrix
/// with entry(n, k) = [x^n] g(x) f(x)^k, stored as its pair of series.
/// Group membership requires g(0) = 1, f(0) = 0, f'(0) != 0. Column
/// series g*f^k are memoized per array behind a shared, mutex-guarded
/// cache so concurrent reads of one array are safe.
class RiordanArray {
public:
    RiordanArray(TruncatedSeries g, TruncatedSeries f, std::string label = {})
        : g_(std::move(g)), f_(std::move(f)), label_(std::move(label)), cache_(std::make_shared<Cache>()) {
        const std::size_t n = common_order(g_, f_);
        g_ = g_.truncated(n);
        f_ = f_.truncated(n);
        if (g_.coeff(0) != 1) throw std::domain_error("RiordanArray: g must have constant term 1");
        if (f_.coeff(0) != 0) throw std::domain_error("RiordanArray: f must have constant term 0");
        if (n < 2 || f_.coeff(1) == 0)
            throw std::domain_error("RiordanArray: f must have nonzero linear coefficient");
    }

    const TruncatedSeries& g() const { return g_; }
    const TruncatedSeries& f() const { return f_; }
    const std::string& label() const { return label_; }
    std::size_t order() const { return g_.order(); }

    /// Generating function of column k, i.e. g*f^k.
    TruncatedSeries column_gf(std::size_t k) const {
        if (k >= order())
            throw std::out_of_range("RiordanArray::column_gf: column beyond truncation order");
        std::lock_guard<std::mutex> lock(cache_->mutex);
        if (cache_->columns.empty()) cache_->columns.push_back(g_);
        while (cache_->columns.size() <= k)
            cache_->columns.push_back(cache_->columns.back() * f_);
        return cache_->columns[k];
    }

    /// Exact integer entry; non-integrality signals a bug, not a rounding.
    Int entry(std::size_t n, std::size_t k) const {
        if (n >= order() || k >= order())
            throw std::out_of_range("RiordanArray::entry: index beyond truncation order");
        if (k > n) return 0;
        const Rat c = column_gf(k).coeff(n);
        if (!is_integral(c))
            throw std::domain_error("RiordanArray::entry: entry (" + std::to_string(n) + "," +
                                    std::to_string(k) + ") is " + rational_string(c));
        return int_numerator(c);
    }

    /// Rows 0..count-1; row n has n+1 entries.
    std::vector<std::vector<Int>> rows(std::size_t count) const {
        if (count > order())
            throw std::invalid_argument("RiordanArray::rows: row count beyond truncation order");
        std::vector<std::vector<Int>> out;
        out.reserve(count);
        for (std::size_t n = 0; n < count; ++n) {
            std::vector<Int> row;
            row.reserve(n + 1);
            for (std::size_t k = 0; k <= n; ++k) row.push_back(entry(n, k));
            out.push_back(std::move(row));
        }
        return out;
    }

private:
    struct Cache {
        std::mutex mutex;
        std::vector<TruncatedSeries> columns;
    };

    TruncatedSeries g_, f_;
    std::string label_;
    std::shared_ptr<Cache> cache_;
};

inline RiordanArray identity_array(std::size_t order = default_order) {
    return RiordanArray(TruncatedSeries::constant(Rat(1), order), TruncatedSeries::identity(order), "I");
}

/// Group law: (g1, f1) * (g2, f2) = (g1 * g2(f1), f2(f1)).
inline RiordanArray multiply(const RiordanArray& a, const RiordanArray& b) {
    TruncatedSeries g = a.g() * compose(b.g(), a.f());
    TruncatedSeries f = compose(b.f(), a.f());
    std::string label;
    if (!a.label().empty() && !b.label().empty()) label = a.label() + "*" + b.label();
    return RiordanArray(std::move(g), std::move(f), std::move(label));
}

/// Group inverse: (g, f)^-1 = (1 / g(fbar), fbar) with fbar the
/// compositional inverse of f.
inline RiordanArray inverse(const RiordanArray& a) {
    TruncatedSeries fbar = revert(a.f());
    TruncatedSeries g = div(TruncatedSeries::constant(Rat(1), a.order()), compose(a.g(), fbar));
    std::string label = a.label().empty() ? std::string{} : a.label() + "^-1";
    return RiordanArray(std::move(g), std::move(fbar), std::move(label));
}

/// Fundamental theorem: (g, f) * A(x) = g(x) A(f(x)), the series whose
/// n-th coefficient is sum_k entry(n, k) * [x^k] A.
inline TruncatedSeries apply_ftra(const RiordanArray& r, const TruncatedSeries& a) {
    return r.g() * compose(a, r.f());
}

/// The eight arrays used by the identity suite, built from their
/// closed-form (g, f) pairs. The *_inv arrays are independent
/// constructions, not calls to inverse(); tests cross-check the two.
inline RiordanArray named_array(std::string_view name, std::size_t order = default_order) {
    if (order < 2) throw std::invalid_argument("named_array: order must be >= 2");
    const auto one = TruncatedSeries::constant(Rat(1), order);
    if (name == "P") {
        TruncatedSeries g = div(one, TruncatedSeries::polynomial({1, -1}, order));
        return RiordanArray(g, shift_up(g, 1), "P");
    }
    if (name == "P_inv") {
        TruncatedSeries g = div(one, TruncatedSeries::polynomial({1, 1}, order));
        return RiordanArray(g, shift_up(g, 1), "P_inv");
    }
    if (name == "D") {
        TruncatedSeries g = div(one, TruncatedSeries::polynomial({1, 0, -1}, order));
        return RiordanArray(g, shift_up(g, 1), "D");
    }
    if (name == "D_inv") {
        // ((sqrt(1+4x^2) - 1) / (2x^2), (sqrt(1+4x^2) - 1) / (2x))
        const std::size_t guard = order + 2;
        const TruncatedSeries root = sqrt(TruncatedSeries::polynomial({1, 0, 4}, guard));
        TruncatedSeries g =
            Rat(1, 2) * shift_down_exact(root - TruncatedSeries::constant(Rat(1), guard), 2);
        return RiordanArray(g, shift_up(g, 1), "D_inv");
    }
    if (name == "D_star") {
        // (C(x^2), x C(x^2))
        const TruncatedSeries c2 =
            stretch(named_series("C", order / 2 + 1), 2).truncated(order);
        return RiordanArray(c2, shift_up(c2, 1), "D_star");
    }
    if (name == "E") {
        TruncatedSeries g = div(one, TruncatedSeries::polynomial({1, 1, -1}, order));
        return RiordanArray(g, shift_up(g, 1), "E");
    }
    if (name == "E_star") {
        TruncatedSeries g = div(one, TruncatedSeries::polynomial({1, -1, -1}, order));
        return RiordanArray(g, shift_up(g, 1), "E_star");
    }
    if (name == "E_inv") {
        // ((sqrt(1-2x+5x^2) + x - 1) / (2x^2), (sqrt(1-2x+5x^2) + x - 1) / (2x))
        const std::size_t guard = order + 2;
        const TruncatedSeries root = sqrt(TruncatedSeries::polynomial({1, -2, 5}, guard));
        TruncatedSeries g = Rat(1, 2) * shift_down_exact(
                                root + TruncatedSeries::polynomial({-1, 1}, guard), 2);
        return RiordanArray(g, shift_up(g, 1), "E_inv");
    }
    throw std::invalid_argument("named_array: unknown name '" + std::string(name) + "'");
}

}  // namespace symlat
