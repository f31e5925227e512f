#pragma once

#include <algorithm>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace jtab {

// Integer partition: weakly decreasing positive parts. The empty partition is
// a legal neutral value; operations that need content reject it explicitly.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1)
                throw std::invalid_argument("partition parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw std::invalid_argument("partition parts must be weakly decreasing");
            weight_ += parts_[i];
        }
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int weight() const { return weight_; }
    bool empty() const { return parts_.empty(); }
    std::size_t size() const { return parts_.size(); }
    int operator[](std::size_t i) const { return parts_.at(i); }

    bool operator==(const Partition&) const = default;

    // "(5,3,2)"; the empty partition prints as "()".
    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(parts_[i]);
        }
        return s + ")";
    }

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

// The stable two-part partition Q = (u, u-r) with u > r >= 2. The gap r >= 2
// is exactly super-distinctness for a two-part partition.
struct StableQ {
    int u;
    int r;

    StableQ(int u_, int r_) : u(u_), r(r_) {
        if (r < 2 || u <= r) throw std::invalid_argument("stable Q needs u > r >= 2");
    }

    int second_part() const { return u - r; }
    Partition partition() const { return Partition{u, u - r}; }
};

// The (a,b)-form P = (a^{n_a}, (a-1)^{n_a1}, b^{n_b}, (b-1)^{n_b1}) of a
// union of two almost rectangular clusters separated by a - b >= 2.
struct AbForm {
    int a, n_a, n_a1;
    int b, n_b, n_b1;

    Partition reassemble() const {
        std::vector<int> v;
        v.insert(v.end(), std::size_t(n_a), a);
        v.insert(v.end(), std::size_t(n_a1), a - 1);
        v.insert(v.end(), std::size_t(n_b), b);
        v.insert(v.end(), std::size_t(n_b1), b - 1);
        return Partition(std::move(v));
    }
};

inline Partition conjugate(const Partition& p) {
    if (p.empty()) return {};
    const std::size_t ncols = std::size_t(p[0]);
    std::vector<int> cols(ncols, 0);
    for (int part : p.parts())
        for (int j = 0; j < part; ++j) ++cols[std::size_t(j)];
    return Partition(std::move(cols));
}

enum class Dominance { less_or_equal, greater, incomparable };

// Dominance order by prefix sums; tri-state, "less_or_equal" includes equality.
inline Dominance dominance_leq(const Partition& p, const Partition& r) {
    if (p.weight() != r.weight())
        throw std::invalid_argument("dominance comparison needs equal weights");
    bool le = true, ge = true;
    long long sp = 0, sr = 0;
    const std::size_t n = std::max(p.size(), r.size());
    for (std::size_t i = 0; i < n; ++i) {
        sp += i < p.size() ? p[i] : 0;
        sr += i < r.size() ? r[i] : 0;
        le = le && sp <= sr;
        ge = ge && sp >= sr;
    }
    if (le) return Dominance::less_or_equal;
    if (ge) return Dominance::greater;
    return Dominance::incomparable;
}

// The unique almost rectangular partition of m with k parts, the bracket
// [m]^k: ceil(m/k) repeated m mod k times, then floor(m/k).
inline Partition almost_rectangular(int m, int k) {
    if (m < 1 || k < 1) throw std::invalid_argument("almost_rectangular needs m, k >= 1");
    if (k > m) throw std::invalid_argument("almost_rectangular needs k <= m");
    std::vector<int> parts(std::size_t(k), m / k);
    for (int i = 0; i < m % k; ++i) ++parts[std::size_t(i)];
    return Partition(std::move(parts));
}

// Super-distinct: consecutive parts differ by at least two.
inline bool is_stable(const Partition& p) {
    if (p.empty()) throw std::invalid_argument("is_stable rejects the empty partition");
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
        if (p[i] - p[i + 1] < 2) return false;
    return true;
}

// Greedy (a,b)-form parse: the a-cluster takes every part equal to a or a-1,
// the remainder must be a single b/(b-1) cluster with a - b >= 2. Returns
// nullopt when the parse fails, in particular when P is itself almost
// rectangular.
inline std::optional<AbForm> ab_decomposition(const Partition& p) {
    if (p.empty()) throw std::invalid_argument("ab_decomposition rejects the empty partition");
    const auto& parts = p.parts();
    auto count = [&](int v) {
        return int(std::count(parts.begin(), parts.end(), v));
    };
    const int a = parts[0];
    const int na = count(a);
    const int na1 = count(a - 1);
    const std::size_t taken = std::size_t(na + na1);
    if (taken == parts.size()) return std::nullopt;
    const int b = parts[taken];
    if (a - b < 2) return std::nullopt;
    const int nb = count(b);
    const int nb1 = b > 1 ? count(b - 1) : 0;
    if (taken + std::size_t(nb + nb1) != parts.size()) return std::nullopt;
    return AbForm{a, na, na1, b, nb, nb1};
}

// Subset of the labels {A, B, C}.
struct TypeSet {
    bool a = false, b = false, c = false;
    bool empty() const { return !(a || b || c); }
    bool operator==(const TypeSet&) const = default;

    std::string str() const {
        std::string s;
        if (a) s += 'A';
        if (b) s += 'B';
        if (c) s += 'C';
        return s;
    }
};

// Raw type A/B/C membership predicates relative to u, evaluated on the greedy
// (a,b)-form. The predicates may overlap; this reports plain truth values,
// not table placement.
inline TypeSet classify_type(const Partition& p, int u) {
    const auto d = ab_decomposition(p);
    if (!d) throw std::invalid_argument("classify_type needs an (a,b)-form decomposition");
    TypeSet t;
    t.a = u == d->a * d->n_a + (d->a - 1) * d->n_a1;
    const bool hook = d->b == d->a - 2 && u == 2 * d->n_a + (d->a - 1) * d->n_a1 + d->b * d->n_b;
    t.b = u == 2 * d->n_a + 2 * d->n_a1 + d->b * d->n_b + (d->b - 1) * d->n_b1;
    t.b = t.b || (hook && d->n_b1 == 0);
    t.c = hook && d->n_a > 0 && d->n_a1 > 0 && d->n_b > 0 && d->n_b1 > 0;
    return t;
}

}  // namespace jtab
