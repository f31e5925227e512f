#include <catch2/catch_amalgamated.hpp>

#include "jtab/tropical.hpp"

using namespace jtab;

namespace {

MinPlusMatrix2 make(long long a, long long b, long long c, long long d) {
    MinPlusMatrix2 m;
    m.e[0][0] = MinPlus(a);
    m.e[0][1] = MinPlus(b);
    m.e[1][0] = MinPlus(c);
    m.e[1][1] = MinPlus(d);
    return m;
}

// literal s-fold min-plus power, (1,1) entry, capped by u
long long direct_power_11(const OrderMatrix& t, int s, int u) {
    MinPlusMatrix2 acc = MinPlusMatrix2::identity();
    for (int i = 0; i < s; ++i) acc = min_plus_mul(acc, t.matrix());
    return oplus(acc.e[0][0], MinPlus(u)).value();
}

}  // namespace

TEST_CASE("min-plus scalar") {
    CHECK(oplus(MinPlus(3), MinPlus(5)).value() == 3);
    CHECK(otimes(MinPlus(3), MinPlus(5)).value() == 8);
    CHECK(oplus(MinPlus::infinity(), MinPlus(5)).value() == 5);
    CHECK(otimes(MinPlus::infinity(), MinPlus(5)).is_infinite());
    CHECK_THROWS_AS(MinPlus(-1), std::invalid_argument);
    CHECK_THROWS_AS(MinPlus::infinity().value(), std::logic_error);
}

TEST_CASE("min-plus 2x2 product") {
    const MinPlusMatrix2 t = make(2, 0, 4, 1);
    CHECK(min_plus_mul(t, MinPlusMatrix2::identity()) == t);
    CHECK(min_plus_mul(MinPlusMatrix2::identity(), t) == t);
    CHECK(min_plus_mul(t, t) == make(4, 1, 5, 2));

    MinPlusMatrix2 infrow = t;
    infrow.e[1][0] = MinPlus::infinity();
    infrow.e[1][1] = MinPlus::infinity();
    const MinPlusMatrix2 prod = min_plus_mul(infrow, t);
    CHECK(prod.e[1][0].is_infinite());
    CHECK(prod.e[1][1].is_infinite());
}

TEST_CASE("order matrix validation") {
    CHECK(OrderMatrix(2, 1, 4).matrix() == make(2, 0, 4, 1));
    CHECK_THROWS_AS(OrderMatrix(0, 1, 4), std::invalid_argument);
    CHECK_THROWS_AS(OrderMatrix(4, 1, 4), std::invalid_argument);
    CHECK_THROWS_AS(OrderMatrix(2, 3, 4), std::invalid_argument);
    CHECK_THROWS_AS(OrderMatrix(2, 0, 4), std::invalid_argument);
}

TEST_CASE("tropical power closed form examples") {
    const OrderMatrix t(2, 1, 4);
    CHECK(tropical_power_11(t, 2, 7) == 4);
    CHECK(tropical_power_11(t, 3, 7) == 5);
    CHECK(tropical_power_11(t, 1, 7) == 2);
    CHECK_THROWS_AS(tropical_power_11(t, 0, 7), std::invalid_argument);
}

TEST_CASE("simplified power examples") {
    CHECK(simplified_power_11(OrderMatrix(2, 1, 4), 2, 7) == 4);
    CHECK(simplified_power_11(OrderMatrix(1, 1, 2), 5, 5) == 5);
    CHECK(simplified_power_11(OrderMatrix(3, 1, 6), 2, 8) == 6);
    CHECK_THROWS_AS(simplified_power_11(OrderMatrix(2, 1, 4), 1, 7), std::invalid_argument);
}

TEST_CASE("closed forms match direct min-plus powering") {
    // modest sweep here; the full range runs in the acceptance suite
    for (int r = 2; r <= 9; ++r)
        for (int k = 1; k <= r - 1; ++k)
            for (int lp = 1; lp <= r - k; ++lp) {
                const OrderMatrix t(k, lp, r);
                for (int u = r; u <= 14; ++u)
                    for (int s = 2; s <= 16; ++s) {
                        const long long direct = direct_power_11(t, s, u);
                        CHECK(tropical_power_11(t, s, u) == direct);
                        CHECK(simplified_power_11(t, s, u) == direct);
                    }
            }
}

TEST_CASE("corank_at examples") {
    CHECK(corank_at(7, 4, 2, 1, 2) == 6);
    CHECK(corank_at(7, 4, 2, 1, 5) == 10);
    CHECK(corank_at(7, 4, 1, 1, 1) == 2);
    CHECK_THROWS_AS(corank_at(7, 4, 0, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(corank_at(7, 4, 4, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(corank_at(7, 4, 1, 4, 1), std::invalid_argument);
    CHECK_THROWS_AS(corank_at(7, 4, 1, 1, 0), std::invalid_argument);
    CHECK_THROWS_AS(corank_at(4, 4, 1, 1, 1), std::invalid_argument);
}

TEST_CASE("corank_sequence examples") {
    CHECK(corank_sequence(7, 4, 2, 1).values == std::vector<int>{3, 6, 8, 9, 10});
    CHECK(corank_sequence(7, 4, 1, 1).values == std::vector<int>{2, 4, 6, 7, 8, 9, 10});
    CHECK(corank_sequence(5, 2, 1, 1).values == std::vector<int>{2, 4, 6, 7, 8});
}

TEST_CASE("corank sequences are concave, increasing, and stabilize in time") {
    for (int u = 3; u <= 14; ++u)
        for (int r = 2; r < u; ++r)
            for (int k = 1; k <= r - 1; ++k)
                for (int l = 1; l <= u - r; ++l) {
                    const auto seq = corank_sequence(u, r, k, l).values;
                    REQUIRE(!seq.empty());
                    CHECK(seq.front() == k + l);
                    CHECK(seq.back() == 2 * u - r);
                    CHECK(int(seq.size()) <= u);
                    int prev_diff = seq[0];
                    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
                        const int diff = seq[i + 1] - seq[i];
                        CHECK(seq[i + 1] >= seq[i]);
                        CHECK(diff <= prev_diff);
                        prev_diff = diff;
                    }
                }
}

TEST_CASE("corank_at is the lower envelope of the four lines") {
    for (int u = 3; u <= 12; ++u)
        for (int r = 2; r < u; ++r)
            for (int k = 1; k <= r - 1; ++k)
                for (int l = 1; l <= u - r; ++l) {
                    const int lp = std::min(l, r - k);
                    for (int s = 2; s <= 2 * u; ++s) {
                        const int c = corank_at(u, r, k, l, s);
                        CHECK(c <= (k + l) * s);
                        CHECK(c <= k * s + u - r);
                        CHECK(c <= lp * s + u - 2 * lp);
                        CHECK(c <= 2 * u - r);
                    }
                }
}

TEST_CASE("intersection coordinates") {
    const auto x = intersection_coordinates(7, 4, 2, 1);
    CHECK(x.x12 == Rational(3, 1));
    REQUIRE(x.x23.has_value());
    CHECK(*x.x23 == Rational(2, 1));
    CHECK(x.x13 == Rational(5, 2));
    CHECK(x.x24 == Rational(7, 2));
    CHECK(x.x34 == Rational(5, 1));

    const auto par = intersection_coordinates(7, 4, 2, 2);  // l' = 2 = k
    CHECK_FALSE(par.x23.has_value());
}

TEST_CASE("rational normalization") {
    CHECK(Rational(4, 2) == Rational(2, 1));
    CHECK(Rational(-3, -6) == Rational(1, 2));
    CHECK(Rational(3, -6).num == -1);
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}
