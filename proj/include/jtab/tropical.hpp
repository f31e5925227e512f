#pragma once

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

namespace jtab {

// Min-plus scalar: a non-negative integer or +infinity. oplus is min,
// otimes is integer addition with infinity absorbing.
class MinPlus {
public:
    constexpr MinPlus() : inf_(true), v_(0) {}
    constexpr explicit MinPlus(long long v) : inf_(false), v_(v) {
        if (v < 0) throw std::invalid_argument("min-plus values are non-negative");
    }

    static constexpr MinPlus infinity() { return MinPlus(); }
    constexpr bool is_infinite() const { return inf_; }
    constexpr long long value() const {
        if (inf_) throw std::logic_error("value() of +infinity");
        return v_;
    }

    friend constexpr MinPlus oplus(MinPlus x, MinPlus y) {
        if (x.inf_) return y;
        if (y.inf_) return x;
        return MinPlus(std::min(x.v_, y.v_));
    }
    friend constexpr MinPlus otimes(MinPlus x, MinPlus y) {
        if (x.inf_ || y.inf_) return infinity();
        return MinPlus(x.v_ + y.v_);
    }

    constexpr bool operator==(const MinPlus&) const = default;

private:
    bool inf_;
    long long v_;
};

// 2x2 matrix over the min-plus semiring. Default-constructed entries are
// +infinity, so the default matrix is the additive zero.
struct MinPlusMatrix2 {
    std::array<std::array<MinPlus, 2>, 2> e{};

    static MinPlusMatrix2 identity() {
        MinPlusMatrix2 m;
        m.e[0][0] = MinPlus(0);
        m.e[1][1] = MinPlus(0);
        return m;
    }

    bool operator==(const MinPlusMatrix2&) const = default;
};

inline MinPlusMatrix2 min_plus_mul(const MinPlusMatrix2& x, const MinPlusMatrix2& y) {
    MinPlusMatrix2 out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            out.e[std::size_t(i)][std::size_t(j)] =
                oplus(otimes(x.e[std::size_t(i)][0], y.e[0][std::size_t(j)]),
                      otimes(x.e[std::size_t(i)][1], y.e[1][std::size_t(j)]));
    return out;
}

// Order matrix T = [[k, 0], [r, l']] of a module map: k = ord(a), 0 = ord(g),
// r = ord(h t^r), l' = min(l, r-k) = ord(b) at a generic point of the locus.
struct OrderMatrix {
    int k;
    int lprime;
    int r;

    OrderMatrix(int k_, int lprime_, int r_) : k(k_), lprime(lprime_), r(r_) {
        if (k < 1 || k > r - 1) throw std::invalid_argument("order matrix needs 1 <= k <= r-1");
        if (lprime < 1 || lprime > r - k)
            throw std::invalid_argument("order matrix needs 1 <= l' <= r-k");
    }

    MinPlusMatrix2 matrix() const {
        MinPlusMatrix2 m;
        m.e[0][0] = MinPlus(k);
        m.e[0][1] = MinPlus(0);
        m.e[1][0] = MinPlus(r);
        m.e[1][1] = MinPlus(lprime);
        return m;
    }
};

// Closed form for (T^{otimes s})_{11} capped by u, with separate even and odd
// branches. s = 1 is the bare entry k.
inline long long tropical_power_11(const OrderMatrix& t, int s, int u) {
    if (s < 1) throw std::invalid_argument("tropical_power_11 needs s >= 1");
    const long long k = t.k, lp = t.lprime, r = t.r, uu = u;
    if (s == 1) return k;
    const long long sk = (long long)s * k;
    const long long tail = (long long)(s - 2) * lp + r;
    if (s % 2 == 0) return std::min({sk, (long long)(s / 2) * r, tail, uu});
    const long long half = (long long)((s - 1) / 2) * r;
    return std::min({sk, k + half, lp + half, tail, uu});
}

// The reduction min(sk, (s-2)l' + r, u), valid for s >= 2 whenever
// k + l' <= r (which the OrderMatrix invariant guarantees).
inline long long simplified_power_11(const OrderMatrix& t, int s, int u) {
    if (s < 2) throw std::invalid_argument("simplified_power_11 needs s >= 2");
    return std::min({(long long)s * t.k, (long long)(s - 2) * t.lprime + t.r, (long long)u});
}

namespace detail {

inline void check_table_coords(int u, int r, int k, int l) {
    if (r < 2 || u <= r) throw std::invalid_argument("need u > r >= 2");
    if (k < 1 || k > r - 1) throw std::invalid_argument("need 1 <= k <= r-1");
    if (l < 1 || l > u - r) throw std::invalid_argument("need 1 <= l <= u-r");
}

// The four lines whose lower envelope gives corank A^s for s >= 2.
struct CorankLines {
    long long k, l, lp, u, r;
    CorankLines(int u_, int r_, int k_, int l_)
        : k(k_), l(l_), lp(std::min(l_, r_ - k_)), u(u_), r(r_) {}
    long long l1(long long s) const { return (k + l) * s; }
    long long l2(long long s) const { return k * s + u - r; }
    long long l3(long long s) const { return lp * s + u - 2 * lp; }
    long long l4(long long) const { return 2 * u - r; }
};

}  // namespace detail

// corank A^s for a generic point of the (k,l) locus: k + l at s = 1, the
// four-line minimum for s >= 2.
inline int corank_at(int u, int r, int k, int l, int s) {
    detail::check_table_coords(u, r, k, l);
    if (s < 1) throw std::invalid_argument("corank_at needs s >= 1");
    if (s == 1) return k + l;
    const detail::CorankLines L(u, r, k, l);
    return int(std::min({L.l1(s), L.l2(s), L.l3(s), L.l4(s)}));
}

struct CorankSequence {
    int u, r, k, l;
    std::vector<int> values;  // corank(1), corank(2), ... ending at 2u - r

    bool operator==(const CorankSequence&) const = default;
};

inline CorankSequence corank_sequence(int u, int r, int k, int l) {
    detail::check_table_coords(u, r, k, l);
    CorankSequence seq{u, r, k, l, {}};
    const int top = 2 * u - r;
    for (int s = 1; s <= 2 * u; ++s) {
        seq.values.push_back(corank_at(u, r, k, l, s));
        if (seq.values.back() == top) break;
    }
    // L4 dominates once s >= max(x24, x34), both at most u
    if (seq.values.back() != top || int(seq.values.size()) > u)
        throw std::logic_error("corank sequence failed to stabilize by s = u");
    return seq;
}

// Exact rational, reduced, positive denominator.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d) : num(n), den(d) {
        if (den == 0) throw std::invalid_argument("zero denominator");
        if (den < 0) { num = -num; den = -den; }
        const long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    bool operator==(const Rational&) const = default;
};

// s-coordinates of the pairwise intersections of the corank lines. x23 is
// undefined when k = l' (parallel or identical lines).
struct IntersectionCoordinates {
    Rational x12, x13, x24, x34;
    std::optional<Rational> x23;
};

inline IntersectionCoordinates intersection_coordinates(int u, int r, int k, int l) {
    detail::check_table_coords(u, r, k, l);
    const int lp = std::min(l, r - k);
    IntersectionCoordinates x;
    x.x12 = Rational(u - r, l);
    x.x13 = Rational(u - 2 * lp, k + l - lp);
    if (k != lp) x.x23 = Rational(r - 2 * lp, k - lp);
    x.x24 = Rational(u, k);
    x.x34 = Rational(u - r + 2 * lp, lp);
    return x;
}

}  // namespace jtab
