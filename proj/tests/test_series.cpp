#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "symlat/series.hpp"

using namespace symlat;

namespace {

TruncatedSeries from_ints(std::initializer_list<long long> values) {
    std::vector<Rat> c;
    c.reserve(values.size());
    for (long long v : values) c.emplace_back(v);
    return TruncatedSeries(std::move(c));
}

// Independent oracle: Catalan numbers by the convolution recurrence
// C_(n+1) = sum_i C_i C_(n-i).
std::vector<Int> catalan_by_recurrence(std::size_t count) {
    std::vector<Int> c{Int(1)};
    while (c.size() < count) {
        Int next = 0;
        for (std::size_t i = 0; i < c.size(); ++i) next += c[i] * c[c.size() - 1 - i];
        c.push_back(next);
    }
    return c;
}

// Independent oracle: Pell-type recurrence a(n+1) = q*a(n) + a(n-1).
std::vector<Int> two_term_recurrence(long q, std::size_t count) {
    std::vector<Int> a{Int(1), Int(q)};
    while (a.size() < count) a.push_back(q * a[a.size() - 1] + a[a.size() - 2]);
    a.resize(count);
    return a;
}

TruncatedSeries random_unit_series(std::mt19937& rng, std::size_t order, int lo = -4, int hi = 4) {
    std::uniform_int_distribution<int> dist(lo, hi);
    std::vector<Rat> c(order);
    c[0] = 1;
    for (std::size_t i = 1; i < order; ++i) c[i] = dist(rng);
    return TruncatedSeries(std::move(c));
}

}  // namespace

TEST_CASE("construction and coefficient access") {
    CHECK_THROWS_AS(TruncatedSeries(std::vector<Rat>{}), std::invalid_argument);

    const auto one = from_ints({1});
    CHECK(one.order() == 1);
    CHECK(one.coeff(0) == 1);

    const auto x = from_ints({0, 1});
    CHECK(x.order() == 2);
    CHECK(x.coeff(0) == 0);
    CHECK(x.coeff(1) == 1);
    CHECK_THROWS_AS(x.coeff(2), std::out_of_range);

    const auto b = named_series("B", 5);
    CHECK(assert_integral(b) == std::vector<Int>{1, 2, 6, 20, 70});
}

TEST_CASE("add, sub, mul basics") {
    const std::size_t n = 6;
    const auto one = TruncatedSeries::constant(Rat(1), n);
    const auto x = TruncatedSeries::identity(n);
    CHECK(assert_integral(one + x) == std::vector<Int>{1, 1, 0, 0, 0, 0});
    CHECK(assert_integral(x * x) == std::vector<Int>{0, 0, 1, 0, 0, 0});
    CHECK(assert_integral((one + x) - x) == std::vector<Int>{1, 0, 0, 0, 0, 0});

    SECTION("binary ops truncate to the smaller order") {
        const auto a = from_ints({1, 2, 3, 4, 5});
        const auto b = from_ints({1, 1});
        CHECK((a + b).order() == 2);
        CHECK((a * b).order() == 2);
        CHECK(div(a, b).order() == 2);
    }
}

TEST_CASE("C satisfies its first-return equation") {
    const std::size_t n = 12;
    const auto c = named_series("C", n);
    CHECK(assert_integral(c.truncated(6)) == catalan_by_recurrence(6));

    // C = 1 + x*C^2
    const auto rebuilt = TruncatedSeries::constant(Rat(1), n) + shift_up(c * c, 1);
    CHECK(rebuilt == c);
}

TEST_CASE("division") {
    const std::size_t n = 6;
    const auto one = TruncatedSeries::constant(Rat(1), n);
    CHECK(assert_integral(div(one, TruncatedSeries::polynomial({1, -1}, n))) ==
          std::vector<Int>{1, 1, 1, 1, 1, 1});
    CHECK(assert_integral(div(one, TruncatedSeries::polynomial({1, -2, -1}, n))) ==
          std::vector<Int>{1, 2, 5, 12, 29, 70});
    CHECK(assert_integral(div(one, TruncatedSeries::polynomial({1, -3, -1}, 5))) ==
          std::vector<Int>{1, 3, 10, 33, 109});
    CHECK(assert_integral(div(one, TruncatedSeries::polynomial({1, -2, -1}, n))) ==
          two_term_recurrence(2, n));
    CHECK(assert_integral(div(one, TruncatedSeries::polynomial({1, -3, -1}, n))) ==
          two_term_recurrence(3, n));
    CHECK_THROWS_AS(div(one, TruncatedSeries::identity(n)), std::domain_error);
}

TEST_CASE("composition") {
    const std::size_t n = 5;
    const auto one = TruncatedSeries::constant(Rat(1), n);
    const auto geom = div(one, TruncatedSeries::polynomial({1, -1}, n));
    const auto xg = shift_up(geom, 1);  // x/(1-x)

    CHECK(compose(geom, TruncatedSeries::identity(n)) == geom);
    // 1/(1-u) at u = x/(1-x) is (1-x)/(1-2x); with the 1/(1-x) prefactor
    // it collapses to 1/(1-2x).
    CHECK(assert_integral(compose(geom, xg)) == std::vector<Int>{1, 1, 2, 4, 8});
    CHECK(assert_integral(geom * compose(geom, xg)) == std::vector<Int>{1, 2, 4, 8, 16});
    CHECK_THROWS_AS(compose(geom, one), std::domain_error);

    SECTION("(1/(1-x)) d(x/(1-x)) = m(x)") {
        const auto d = named_series("d", n);
        const auto m = geom * compose(d, xg);
        CHECK(assert_integral(m) == std::vector<Int>{1, 2, 5, 13, 35});
    }
}

TEST_CASE("reversion") {
    const std::size_t n = 8;
    const auto one = TruncatedSeries::constant(Rat(1), n);
    const auto x = TruncatedSeries::identity(n);
    CHECK(revert(x) == x);

    const auto xg = shift_up(div(one, TruncatedSeries::polynomial({1, -1}, n)), 1);
    CHECK(assert_integral(revert(xg).truncated(5)) == std::vector<Int>{0, 1, -1, 1, -1});

    SECTION("x/(1-x^2) reverts to an odd alternating-Catalan series") {
        const auto f = shift_up(div(one, TruncatedSeries::polynomial({1, 0, -1}, n)), 1);
        const auto fbar = revert(f);
        CHECK(assert_integral(fbar) == std::vector<Int>{0, 1, 0, -1, 0, 2, 0, -5});
        CHECK(compose(fbar, f) == x);
        CHECK(compose(f, fbar) == x);
    }

    CHECK_THROWS_AS(revert(one), std::domain_error);                              // f(0) != 0
    CHECK_THROWS_AS(revert(shift_up(x, 1)), std::domain_error);                   // f'(0) == 0
}

TEST_CASE("square root") {
    const std::size_t n = 6;
    const auto one = TruncatedSeries::constant(Rat(1), n);
    CHECK(sqrt(one) == one);

    const auto root = sqrt(TruncatedSeries::polynomial({1, -4}, n));
    CHECK(assert_integral(root) == std::vector<Int>{1, -2, -2, -4, -10, -28});
    CHECK(root * root == TruncatedSeries::polynomial({1, -4}, n));

    SECTION("sqrt((1+2x)/(1-2x)) = 1 + 2x d(x)") {
        const auto ratio = div(TruncatedSeries::polynomial({1, 2}, n),
                               TruncatedSeries::polynomial({1, -2}, n));
        const auto d = named_series("d", n);
        CHECK(sqrt(ratio) == one + Rat(2) * shift_up(d, 1));
    }

    CHECK_THROWS_AS(sqrt(TruncatedSeries::polynomial({2, 1}, n)), std::domain_error);
}

TEST_CASE("named series match their known prefixes") {
    CHECK(assert_integral(named_series("d", 8)) == std::vector<Int>{1, 1, 2, 3, 6, 10, 20, 35});
    CHECK(assert_integral(named_series("m", 8)) ==
          std::vector<Int>{1, 2, 5, 13, 35, 96, 267, 750});
    CHECK(assert_integral(named_series("s", 8)) ==
          std::vector<Int>{1, 1, 3, 5, 13, 25, 63, 129});
    CHECK(assert_integral(named_series("C", 8)) ==
          std::vector<Int>{1, 1, 2, 5, 14, 42, 132, 429});
    CHECK(assert_integral(named_series("M", 8)) == std::vector<Int>{1, 1, 2, 4, 9, 21, 51, 127});
    CHECK(assert_integral(named_series("R", 6)) == std::vector<Int>{1, 2, 6, 22, 90, 394});
    CHECK_THROWS_AS(named_series("Z", 8), std::invalid_argument);
}

TEST_CASE("assert_integral rejects fractional coefficients") {
    // sqrt(1+x) runs through half-integer binomials
    const auto root = sqrt(TruncatedSeries::polynomial({1, 1}, 5));
    CHECK_THROWS_AS(assert_integral(root), std::domain_error);
}

TEST_CASE("shift helpers") {
    const auto a = from_ints({0, 0, 3, 4});
    CHECK(assert_integral(shift_down_exact(a, 2)) == std::vector<Int>{3, 4});
    CHECK_THROWS_AS(shift_down_exact(from_ints({0, 1, 3}), 2), std::domain_error);
    CHECK(assert_integral(shift_up(from_ints({1, 2, 3}), 1)) == std::vector<Int>{0, 1, 2});
    CHECK(assert_integral(stretch(from_ints({1, 2}), 2)) == std::vector<Int>{1, 0, 2, 0});
}

TEST_CASE("generating function identities from the d, B, C family") {
    const std::size_t n = 24;
    const auto one = TruncatedSeries::constant(Rat(1), n);
    const auto c2 = stretch(named_series("C", n / 2 + 1), 2).truncated(n);
    const auto b2 = stretch(named_series("B", n / 2 + 1), 2).truncated(n);
    const auto d = named_series("d", n);

    SECTION("B(x^2) = 1/(1-2x^2 C(x^2)) = C(x^2)/(1-x^2 C(x^2)^2)") {
        CHECK(b2 == div(one, one - Rat(2) * shift_up(c2, 2)));
        CHECK(b2 == div(c2, one - shift_up(c2 * c2, 2)));
    }
    SECTION("1/(1-2x) = C(x^2)/(1-x C(x^2))^2") {
        const auto q = one - shift_up(c2, 1);
        CHECK(div(one, TruncatedSeries::polynomial({1, -2}, n)) == div(c2, q * q));
    }
    SECTION("d = B(x^2) + x B(x^2) C(x^2) = C(x^2)/(1-x C(x^2))") {
        CHECK(d == b2 + shift_up(b2 * c2, 1));
        CHECK(d == div(c2, one - shift_up(c2, 1)));
    }
    SECTION("s = 1 + x s + x^2 s + x^2 s R(x^2)") {
        const auto s = named_series("s", n);
        const auto r2 = stretch(named_series("R", n / 2 + 1), 2).truncated(n);
        CHECK(s == one + shift_up(s, 1) + shift_up(s, 2) + shift_up(s * r2, 2));
    }
}

TEST_CASE("algebra properties on random series") {
    std::mt19937 rng(20240811);
    const std::size_t order = 16;

    SECTION("multiplication commutes and division inverts it") {
        for (int trial = 0; trial < 40; ++trial) {
            const auto a = random_unit_series(rng, order);
            const auto b = random_unit_series(rng, order);
            CHECK(a * b == b * a);
            CHECK(div(a, b) * b == a);
        }
    }

    SECTION("compose/revert round-trips on series with f(0)=0, f'(0)=1") {
        std::uniform_int_distribution<int> dist(-3, 3);
        const auto x = TruncatedSeries::identity(order);
        for (int trial = 0; trial < 40; ++trial) {
            std::vector<Rat> c(order, Rat(0));
            c[1] = 1;
            for (std::size_t i = 2; i < order; ++i) c[i] = dist(rng);
            const TruncatedSeries f{std::move(c)};
            const auto fbar = revert(f);
            CHECK(compose(fbar, f) == x);
            CHECK(compose(f, fbar) == x);
        }
    }

    SECTION("sqrt squares back") {
        for (int trial = 0; trial < 40; ++trial) {
            const auto a = random_unit_series(rng, order);
            const auto s = sqrt(a);
            CHECK(s * s == a);
            CHECK(s.coeff(0) == 1);
        }
    }
}
