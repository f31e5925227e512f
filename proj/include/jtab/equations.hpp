#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "jtab/modp.hpp"
#include "jtab/partition.hpp"
#include "jtab/table.hpp"

namespace jtab {

enum class VarFamily : std::uint8_t { a, b, g, h };

inline char family_char(VarFamily f) { return "abgh"[std::size_t(f)]; }

// Indexed coordinate of the commutator coordinate ring: a_1..a_{u-1},
// b_1..b_{u-r-1}, g_0..g_{u-r-1}, h_0..h_{u-r-1}.
struct Var {
    VarFamily family;
    int index;

    auto operator<=>(const Var&) const = default;
    std::string str() const { return family_char(family) + std::to_string(index); }
};

// coefficient * monomial, monomial a multiset of at most two variables
struct Term {
    int coeff = 0;
    std::vector<Var> vars;

    bool operator==(const Term&) const = default;
};

struct PolyGenerator {
    std::vector<Term> terms;

    bool operator==(const PolyGenerator&) const = default;

    // e.g. "a2*b2 - g0*h0"
    std::string str() const {
        std::string s;
        for (std::size_t i = 0; i < terms.size(); ++i) {
            const Term& t = terms[i];
            if (i == 0) {
                if (t.coeff < 0) s += '-';
            } else {
                s += t.coeff < 0 ? " - " : " + ";
            }
            const int mag = t.coeff < 0 ? -t.coeff : t.coeff;
            if (mag != 1 || t.vars.empty()) {
                s += std::to_string(mag);
                if (!t.vars.empty()) s += '*';
            }
            for (std::size_t j = 0; j < t.vars.size(); ++j) {
                if (j) s += '*';
                s += t.vars[j].str();
            }
        }
        return s;
    }
};

// The generator set E^Q_{k,l}. For k+l <= r it is the linear set
// {a_1..a_{k-1}, b_1..b_{l-1}}. For k+l >= r+1 the b-range shortens to
// b_1..b_{r-k-1} and the convolution quadratics
//   G_m = sum_j a_{k+j} b_{r-k+m-j} - sum_j g_j h_{m-j},  m = 0..k+l-r-1,
// are appended; G_m is the t^{r+m} coefficient of a*b - g*h*t^r once the
// linear generators vanish.
inline std::vector<PolyGenerator> equation_set(const StableQ& q, TableIndex idx) {
    check_index(q, idx);
    const int k = idx.k, l = idx.l, r = q.r;
    std::vector<PolyGenerator> gens;
    auto linear = [&gens](VarFamily f, int i) {
        gens.push_back(PolyGenerator{{Term{1, {Var{f, i}}}}});
    };
    for (int i = 1; i <= k - 1; ++i) linear(VarFamily::a, i);
    const int btop = k + l <= r ? l - 1 : r - k - 1;
    for (int i = 1; i <= btop; ++i) linear(VarFamily::b, i);
    for (int m = 0; m <= k + l - r - 1; ++m) {
        PolyGenerator g;
        for (int j = 0; j <= m; ++j)
            g.terms.push_back(Term{1, {Var{VarFamily::a, k + j}, Var{VarFamily::b, r - k + m - j}}});
        for (int j = 0; j <= m; ++j)
            g.terms.push_back(Term{-1, {Var{VarFamily::g, j}, Var{VarFamily::h, m - j}}});
        gens.push_back(std::move(g));
    }
    return gens;
}

// F_p values for every coordinate of the ambient Q.
class ParamAssignment {
public:
    ParamAssignment(const StableQ& q, std::uint64_t p)
        : u_(q.u), r_(q.r), p_(p),
          a_(std::size_t(q.u), 0),
          b_(std::size_t(q.u - q.r), 0),
          g_(std::size_t(q.u - q.r), 0),
          h_(std::size_t(q.u - q.r), 0) {
        if (!is_prime_u64(p)) throw std::invalid_argument("modulus must be prime");
    }

    int u() const { return u_; }
    int r() const { return r_; }
    std::uint64_t prime() const { return p_; }

    std::uint64_t get(Var v) const { return storage(v.family)[slot(v)]; }
    void set(Var v, std::uint64_t x) { storage(v.family)[slot(v)] = x % p_; }

private:
    std::size_t slot(Var v) const {
        const int i = v.index;
        switch (v.family) {
            case VarFamily::a:
                if (i < 1 || i > u_ - 1) break;
                return std::size_t(i);
            case VarFamily::b:
                if (i < 1 || i > u_ - r_ - 1) break;
                return std::size_t(i);
            case VarFamily::g:
            case VarFamily::h:
                if (i < 0 || i > u_ - r_ - 1) break;
                return std::size_t(i);
        }
        throw std::out_of_range("variable " + v.str() + " out of range for this Q");
    }

    const std::vector<std::uint64_t>& storage(VarFamily f) const {
        switch (f) {
            case VarFamily::a: return a_;
            case VarFamily::b: return b_;
            case VarFamily::g: return g_;
            default: return h_;
        }
    }
    std::vector<std::uint64_t>& storage(VarFamily f) {
        return const_cast<std::vector<std::uint64_t>&>(std::as_const(*this).storage(f));
    }

    int u_, r_;
    std::uint64_t p_;
    std::vector<std::uint64_t> a_, b_, g_, h_;
};

inline std::uint64_t evaluate(const PolyGenerator& gen, const ParamAssignment& asn) {
    const std::uint64_t p = asn.prime();
    std::uint64_t total = 0;
    for (const Term& t : gen.terms) {
        const long long c = t.coeff % (long long)p;
        std::uint64_t v = std::uint64_t(c < 0 ? c + (long long)p : c);
        for (Var var : t.vars) v = mul_mod(v, asn.get(var), p);
        total = add_mod(total, v, p);
    }
    return total;
}

// Deterministic generic point of V(E^Q_{k,l}): linear-generator variables are
// zeroed, a_k, g_0, h_0 (and b_l when it exists and k+l <= r) are drawn
// nonzero, everything else uniform. When k+l >= r+1 the quadratics are solved
// for b_{r-k}..b_{l-1} in turn, dividing by a_k.
inline ParamAssignment sample_point(const StableQ& q, TableIndex idx, std::uint64_t seed,
                                    std::uint64_t p = kDefaultPrime) {
    check_index(q, idx);
    if (p < (std::uint64_t(1) << 31)) throw std::invalid_argument("sample_point needs p >= 2^31");
    const int u = q.u, r = q.r, k = idx.k, l = idx.l;
    ParamAssignment asn(q, p);
    CounterRng rng({0x73616d70ull, seed, std::uint64_t(u), std::uint64_t(r),
                    std::uint64_t(k), std::uint64_t(l)});
    for (int i = 1; i <= u - 1; ++i) {
        const std::uint64_t x = i < k ? 0 : i == k ? rng.uniform_nonzero(p) : rng.uniform(p);
        asn.set({VarFamily::a, i}, x);
    }
    const bool linear_only = k + l <= r;
    const int zero_below = linear_only ? l : r - k;
    for (int i = 1; i <= u - r - 1; ++i) {
        if (i < zero_below) continue;  // already zero
        if (!linear_only && i <= l - 1) continue;  // solved below
        const bool force = linear_only && i == l;
        asn.set({VarFamily::b, i}, force ? rng.uniform_nonzero(p) : rng.uniform(p));
    }
    for (int i = 0; i <= u - r - 1; ++i)
        asn.set({VarFamily::g, i}, i == 0 ? rng.uniform_nonzero(p) : rng.uniform(p));
    for (int i = 0; i <= u - r - 1; ++i)
        asn.set({VarFamily::h, i}, i == 0 ? rng.uniform_nonzero(p) : rng.uniform(p));
    if (!linear_only) {
        const std::uint64_t a_k_inv = inv_mod(asn.get({VarFamily::a, k}), p);
        for (int m = 0; m <= k + l - r - 1; ++m) {
            std::uint64_t s = 0;
            for (int j = 0; j <= m; ++j)
                s = add_mod(s, mul_mod(asn.get({VarFamily::g, j}), asn.get({VarFamily::h, m - j}), p), p);
            for (int j = 1; j <= m; ++j)
                s = sub_mod(s, mul_mod(asn.get({VarFamily::a, k + j}),
                                       asn.get({VarFamily::b, r - k + m - j}), p), p);
            asn.set({VarFamily::b, r - k + m}, mul_mod(s, a_k_inv, p));
        }
    }
    for (const PolyGenerator& gen : equation_set(q, idx))
        if (evaluate(gen, asn) != 0)
            throw std::logic_error("sampled point does not satisfy its generator set");
    return asn;
}

// Fully unconstrained assignment, every coordinate uniform.
inline ParamAssignment random_assignment(const StableQ& q, std::uint64_t seed,
                                         std::uint64_t p = kDefaultPrime) {
    ParamAssignment asn(q, p);
    CounterRng rng({0x66726565ull, seed, std::uint64_t(q.u), std::uint64_t(q.r)});
    for (int i = 1; i <= q.u - 1; ++i) asn.set({VarFamily::a, i}, rng.uniform(p));
    for (int i = 1; i <= q.u - q.r - 1; ++i) asn.set({VarFamily::b, i}, rng.uniform(p));
    for (int i = 0; i <= q.u - q.r - 1; ++i) asn.set({VarFamily::g, i}, rng.uniform(p));
    for (int i = 0; i <= q.u - q.r - 1; ++i) asn.set({VarFamily::h, i}, rng.uniform(p));
    return asn;
}

}  // namespace jtab
