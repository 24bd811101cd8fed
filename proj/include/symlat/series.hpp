#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "numeric.hpp"

namespace symlat {

/// Truncation order used by CLI-facing computations (coefficients of x^0..x^40).
inline constexpr std::size_t default_order = 41;

/// A formal power series kept to a finite number of leading coefficients,
/// with exact rational arithmetic. A series of order N carries the
/// coefficients of x^0..x^(N-1) and nothing else: binary operations
/// truncate to the smaller operand order, and no coefficient is ever
/// invented by zero padding.
class TruncatedSeries {
public:
    explicit TruncatedSeries(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) throw std::invalid_argument("TruncatedSeries: coefficient list must be nonempty");
    }

    static TruncatedSeries constant(const Rat& value, std::size_t order) {
        check_order(order);
        std::vector<Rat> c(order, Rat(0));
        c[0] = value;
        return TruncatedSeries(std::move(c));
    }

    /// The series x.
    static TruncatedSeries identity(std::size_t order) {
        if (order < 2) throw std::invalid_argument("TruncatedSeries::identity: order must be >= 2");
        std::vector<Rat> c(order, Rat(0));
        c[1] = 1;
        return TruncatedSeries(std::move(c));
    }

    /// A polynomial viewed as a series of the given order. Padding a
    /// polynomial with zeros is exact, unlike padding a truncation.
    static TruncatedSeries polynomial(std::vector<Rat> low, std::size_t order) {
        check_order(order);
        if (low.size() > order)
            throw std::invalid_argument("TruncatedSeries::polynomial: more coefficients than order");
        low.resize(order, Rat(0));
        return TruncatedSeries(std::move(low));
    }

    static TruncatedSeries polynomial(std::initializer_list<long long> low, std::size_t order) {
        std::vector<Rat> c;
        c.reserve(low.size());
        for (long long v : low) c.emplace_back(v);
        return polynomial(std::move(c), order);
    }

    std::size_t order() const { return coeffs_.size(); }

    const Rat& coeff(std::size_t n) const {
        if (n >= coeffs_.size())
            throw std::out_of_range("TruncatedSeries::coeff: index " + std::to_string(n) +
                                    " beyond truncation order " + std::to_string(coeffs_.size()));
        return coeffs_[n];
    }

    const std::vector<Rat>& coeffs() const { return coeffs_; }

    TruncatedSeries truncated(std::size_t new_order) const {
        if (new_order == 0 || new_order > coeffs_.size())
            throw std::invalid_argument("TruncatedSeries::truncated: bad order");
        return TruncatedSeries(std::vector<Rat>(coeffs_.begin(), coeffs_.begin() + new_order));
    }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.coeffs_ == b.coeffs_;
    }

private:
    static void check_order(std::size_t order) {
        if (order == 0) throw std::invalid_argument("TruncatedSeries: order must be >= 1");
    }

    std::vector<Rat> coeffs_;
};

inline std::size_t common_order(const TruncatedSeries& a, const TruncatedSeries& b) {
    return std::min(a.order(), b.order());
}

inline TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t n = common_order(a, b);
    std::vector<Rat> c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = a.coeff(i) + b.coeff(i);
    return TruncatedSeries(std::move(c));
}

inline TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t n = common_order(a, b);
    std::vector<Rat> c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = a.coeff(i) - b.coeff(i);
    return TruncatedSeries(std::move(c));
}

inline TruncatedSeries operator-(const TruncatedSeries& a) {
    std::vector<Rat> c(a.coeffs());
    for (Rat& v : c) v = -v;
    return TruncatedSeries(std::move(c));
}

/// Cauchy product, truncated to the smaller operand order.
inline TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t n = common_order(a, b);
    std::vector<Rat> c(n, Rat(0));
    for (std::size_t i = 0; i < n; ++i) {
        const Rat& ai = a.coeff(i);
        if (ai == 0) continue;
        for (std::size_t j = 0; i + j < n; ++j) {
            if (b.coeff(j) == 0) continue;
            c[i + j] += ai * b.coeff(j);
        }
    }
    return TruncatedSeries(std::move(c));
}

inline TruncatedSeries operator*(const Rat& s, const TruncatedSeries& a) {
    std::vector<Rat> c(a.coeffs());
    for (Rat& v : c) v *= s;
    return TruncatedSeries(std::move(c));
}

inline TruncatedSeries operator*(const TruncatedSeries& a, const Rat& s) { return s * a; }

/// Quotient q with q*b = a to the common order. The divisor must be a unit.
inline TruncatedSeries div(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (b.coeff(0) == 0) throw std::domain_error("div: divisor has zero constant term");
    const std::size_t n = common_order(a, b);
    std::vector<Rat> q(n);
    for (std::size_t i = 0; i < n; ++i) {
        Rat acc = a.coeff(i);
        for (std::size_t j = 1; j <= i; ++j) acc -= b.coeff(j) * q[i - j];
        q[i] = acc / b.coeff(0);
    }
    return TruncatedSeries(std::move(q));
}

/// Multiply by x^k. Always exact: low coefficients become true zeros and
/// the top k coefficients fall off the truncation.
inline TruncatedSeries shift_up(const TruncatedSeries& a, std::size_t k) {
    const std::size_t n = a.order();
    std::vector<Rat> c(n, Rat(0));
    for (std::size_t i = k; i < n; ++i) c[i] = a.coeff(i - k);
    return TruncatedSeries(std::move(c));
}

/// Divide by x^k after verifying the k low coefficients are exactly zero.
/// The order drops by k; quotients like (sqrt(1+4x^2)-1)/(2x^2) are built
/// through here rather than through div.
inline TruncatedSeries shift_down_exact(const TruncatedSeries& a, std::size_t k) {
    if (a.order() <= k) throw std::invalid_argument("shift_down_exact: order too small");
    for (std::size_t i = 0; i < k; ++i)
        if (a.coeff(i) != 0)
            throw std::domain_error("shift_down_exact: coefficient of x^" + std::to_string(i) +
                                    " is nonzero");
    return TruncatedSeries(std::vector<Rat>(a.coeffs().begin() + k, a.coeffs().end()));
}

/// Substitute x -> x^k. Coefficients are exact up to order k*order(a).
inline TruncatedSeries stretch(const TruncatedSeries& a, std::size_t k) {
    if (k == 0) throw std::invalid_argument("stretch: k must be >= 1");
    std::vector<Rat> c(a.order() * k, Rat(0));
    for (std::size_t i = 0; i < a.order(); ++i) c[i * k] = a.coeff(i);
    return TruncatedSeries(std::move(c));
}

/// a(f(x)) by Horner evaluation; f must have zero constant term.
inline TruncatedSeries compose(const TruncatedSeries& a, const TruncatedSeries& f) {
    if (f.coeff(0) != 0) throw std::domain_error("compose: inner series must have zero constant term");
    const std::size_t n = common_order(a, f);
    const TruncatedSeries inner = f.truncated(n);
    TruncatedSeries acc = TruncatedSeries::constant(a.coeff(n - 1), n);
    for (std::size_t i = n - 1; i-- > 0;)
        acc = acc * inner + TruncatedSeries::constant(a.coeff(i), n);
    return acc;
}

/// Derivative; one coefficient is lost at the top.
inline TruncatedSeries derivative(const TruncatedSeries& a) {
    if (a.order() < 2) throw std::invalid_argument("derivative: order must be >= 2");
    std::vector<Rat> c(a.order() - 1);
    for (std::size_t i = 0; i + 1 < a.order(); ++i) c[i] = Rat(static_cast<long>(i + 1)) * a.coeff(i + 1);
    return TruncatedSeries(std::move(c));
}

/// Compositional inverse: the series r with compose(r, f) = compose(f, r) = x
/// to the truncation order. Newton iteration on compose doubles the number
/// of correct coefficients per step; the derivative's unknown top
/// coefficient never reaches the trusted prefix.
inline TruncatedSeries revert(const TruncatedSeries& f) {
    if (f.order() < 2) throw std::invalid_argument("revert: order must be >= 2");
    if (f.coeff(0) != 0) throw std::domain_error("revert: constant term must be zero");
    if (f.coeff(1) == 0) throw std::domain_error("revert: linear coefficient must be nonzero");
    const std::size_t n = f.order();

    std::vector<Rat> dcoeffs(derivative(f).coeffs());
    dcoeffs.push_back(Rat(0));
    const TruncatedSeries fprime(std::move(dcoeffs));

    const TruncatedSeries x = TruncatedSeries::identity(n);
    TruncatedSeries g = Rat(1) / f.coeff(1) * x;  // correct through x^1
    for (std::size_t good = 2; good < n; good *= 2)
        g = g - div(compose(f, g) - x, compose(fprime, g));
    return g;
}

/// Square root with constant term +1, by Newton iteration s <- (s + a/s)/2.
inline TruncatedSeries sqrt(const TruncatedSeries& a) {
    if (a.coeff(0) != 1) throw std::domain_error("sqrt: constant term must be 1");
    const std::size_t n = a.order();
    TruncatedSeries s = TruncatedSeries::constant(Rat(1), n);
    for (std::size_t good = 1; good < n; good *= 2) s = (s + div(a, s)) * Rat(1, 2);
    return s;
}

inline const Rat& coeff(const TruncatedSeries& a, std::size_t n) { return a.coeff(n); }

/// All retained coefficients as integers; a coefficient with denominator
/// other than 1 is a hard error, never a rounding.
inline std::vector<Int> assert_integral(const TruncatedSeries& a) {
    std::vector<Int> out;
    out.reserve(a.order());
    for (std::size_t i = 0; i < a.order(); ++i) {
        const Rat& c = a.coeff(i);
        if (!is_integral(c))
            throw std::domain_error("assert_integral: coefficient of x^" + std::to_string(i) +
                                    " is " + rational_string(c));
        out.push_back(int_numerator(c));
    }
    return out;
}

inline bool prefix_equal(const TruncatedSeries& a, const TruncatedSeries& b, std::size_t count) {
    for (std::size_t i = 0; i < count; ++i)
        if (a.coeff(i) != b.coeff(i)) return false;
    return true;
}

namespace detail {

inline TruncatedSeries geometric_like(std::initializer_list<long long> denom, std::size_t order) {
    return div(TruncatedSeries::constant(Rat(1), order), TruncatedSeries::polynomial(denom, order));
}

// (sqrt(num/den) - 1) / (2x), computed with one guard coefficient so the
// result still has the requested order after the shift.
inline TruncatedSeries sqrt_ratio_shifted(std::initializer_list<long long> num,
                                          std::initializer_list<long long> den,
                                          std::size_t order) {
    const std::size_t guard = order + 1;
    const TruncatedSeries ratio =
        div(TruncatedSeries::polynomial(num, guard), TruncatedSeries::polynomial(den, guard));
    const TruncatedSeries root = sqrt(ratio);
    return Rat(1, 2) * shift_down_exact(root - TruncatedSeries::constant(Rat(1), guard), 1);
}

}  // namespace detail

/// The generating functions used throughout: C (Dyck paths), M (Motzkin
/// paths), R (Schroeder paths), B = 1/sqrt(1-4x), and d, m, s counting
/// symmetric Dyck / Motzkin / Schroeder paths of length 2n. Every
/// coefficient is checked to be integral before returning.
inline TruncatedSeries named_series(std::string_view name, std::size_t order = default_order) {
    if (order == 0) throw std::invalid_argument("named_series: order must be >= 1");
    TruncatedSeries result = TruncatedSeries::constant(Rat(0), 1);
    if (name == "C") {
        // (1 - sqrt(1-4x)) / (2x)
        const std::size_t guard = order + 1;
        const TruncatedSeries root = sqrt(TruncatedSeries::polynomial({1, -4}, guard));
        result = Rat(1, 2) * shift_down_exact(TruncatedSeries::constant(Rat(1), guard) - root, 1);
    } else if (name == "M") {
        // (1 - x - sqrt(1-2x-3x^2)) / (2x^2)
        const std::size_t guard = order + 2;
        const TruncatedSeries root = sqrt(TruncatedSeries::polynomial({1, -2, -3}, guard));
        result = Rat(1, 2) *
                 shift_down_exact(TruncatedSeries::polynomial({1, -1}, guard) - root, 2);
    } else if (name == "R") {
        // (1 - x - sqrt(1-6x+x^2)) / (2x)
        const std::size_t guard = order + 1;
        const TruncatedSeries root = sqrt(TruncatedSeries::polynomial({1, -6, 1}, guard));
        result = Rat(1, 2) *
                 shift_down_exact(TruncatedSeries::polynomial({1, -1}, guard) - root, 1);
    } else if (name == "B") {
        result = div(TruncatedSeries::constant(Rat(1), order),
                     sqrt(TruncatedSeries::polynomial({1, -4}, order)));
    } else if (name == "d") {
        result = detail::sqrt_ratio_shifted({1, 2}, {1, -2}, order);
    } else if (name == "m") {
        result = detail::sqrt_ratio_shifted({1, 1}, {1, -3}, order);
    } else if (name == "s") {
        result = detail::sqrt_ratio_shifted({-1, -2, 1}, {-1, 2, 1}, order);
    } else {
        throw std::invalid_argument("named_series: unknown name '" + std::string(name) + "'");
    }
    assert_integral(result);
    return result;
}

inline std::string to_string(const TruncatedSeries& a) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < a.order(); ++i) {
        if (i) os << ", ";
        os << rational_string(a.coeff(i));
    }
    os << "]";
    return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const TruncatedSeries& a) {
    return os << to_string(a);
}

}  // namespace symlat
