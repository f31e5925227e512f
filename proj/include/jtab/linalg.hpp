#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "jtab/equations.hpp"
#include "jtab/modp.hpp"
#include "jtab/partition.hpp"

namespace jtab {

// Dense square matrix over F_p.
class ModMatrix {
public:
    ModMatrix(int n, std::uint64_t p) : n_(n), p_(p), e_(std::size_t(n) * std::size_t(n), 0) {
        if (n < 1) throw std::invalid_argument("matrix dimension must be positive");
        if (!is_prime_u64(p)) throw std::invalid_argument("modulus must be prime");
    }

    int dim() const { return n_; }
    std::uint64_t prime() const { return p_; }

    std::uint64_t at(int i, int j) const { return e_[std::size_t(i) * std::size_t(n_) + std::size_t(j)]; }
    void set(int i, int j, std::uint64_t v) { e_[std::size_t(i) * std::size_t(n_) + std::size_t(j)] = v % p_; }

    bool is_zero() const {
        for (std::uint64_t x : e_) if (x) return false;
        return true;
    }

    bool operator==(const ModMatrix&) const = default;

private:
    int n_;
    std::uint64_t p_;
    std::vector<std::uint64_t> e_;
};

inline ModMatrix mat_mul(const ModMatrix& x, const ModMatrix& y) {
    if (x.dim() != y.dim() || x.prime() != y.prime())
        throw std::invalid_argument("matrix product needs matching shape and modulus");
    const int n = x.dim();
    const std::uint64_t p = x.prime();
    ModMatrix out(n, p);
    for (int i = 0; i < n; ++i)
        for (int m = 0; m < n; ++m) {
            const std::uint64_t v = x.at(i, m);
            if (!v) continue;
            for (int j = 0; j < n; ++j)
                out.set(i, j, add_mod(out.at(i, j), mul_mod(v, y.at(m, j), p), p));
        }
    return out;
}

// Exact rank by Gaussian elimination with row pivoting.
inline int rank(ModMatrix m) {
    const int n = m.dim();
    const std::uint64_t p = m.prime();
    int rk = 0;
    for (int col = 0; col < n && rk < n; ++col) {
        int piv = -1;
        for (int i = rk; i < n; ++i)
            if (m.at(i, col) != 0) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != rk)
            for (int j = col; j < n; ++j) {
                const std::uint64_t t = m.at(rk, j);
                m.set(rk, j, m.at(piv, j));
                m.set(piv, j, t);
            }
        const std::uint64_t inv = inv_mod(m.at(rk, col), p);
        for (int i = rk + 1; i < n; ++i) {
            const std::uint64_t f = mul_mod(m.at(i, col), inv, p);
            if (!f) continue;
            for (int j = col; j < n; ++j)
                m.set(i, j, sub_mod(m.at(i, j), mul_mod(f, m.at(rk, j), p), p));
        }
        ++rk;
    }
    return rk;
}

inline int corank(const ModMatrix& m) { return m.dim() - rank(m); }

// Repeated squaring to exponent >= n.
inline bool is_nilpotent(const ModMatrix& m) {
    ModMatrix sq = m;
    for (int e = 1; e < m.dim(); e *= 2) sq = mat_mul(sq, sq);
    return sq.is_zero();
}

// coranks of m, m^2, ... up to the first full-corank power
inline std::vector<int> corank_profile(const ModMatrix& m) {
    if (!is_nilpotent(m)) throw std::invalid_argument("matrix is not nilpotent");
    std::vector<int> out;
    ModMatrix pw = m;
    for (;;) {
        out.push_back(corank(pw));
        if (out.back() == m.dim()) return out;
        pw = mat_mul(pw, m);
    }
}

// Jordan type of a nilpotent matrix: conjugate of the corank-profile
// differences.
inline Partition jordan_type_of(const ModMatrix& m) {
    const std::vector<int> prof = corank_profile(m);
    std::vector<int> diffs;
    int prev = 0;
    for (int c : prof) {
        diffs.push_back(c - prev);
        prev = c;
    }
    return conjugate(Partition(std::move(diffs)));
}

// Direct sum of multiplication-by-t blocks on k[t]/(t^size), one per part.
inline ModMatrix jordan_matrix(const Partition& p, std::uint64_t prime = kDefaultPrime) {
    if (p.empty()) throw std::invalid_argument("jordan_matrix needs a nonempty partition");
    ModMatrix m(p.weight(), prime);
    int off = 0;
    for (int sz : p.parts()) {
        for (int i = 1; i < sz; ++i) m.set(off + i, off + i - 1, 1);
        off += sz;
    }
    return m;
}

// Matrix of (x, y) -> (a x + t^r g y, h x + b y) on k[t]/(t^u) (+)
// k[t]/(t^{u-r}) in the coefficient basis. The t^r factor on the g block is
// what makes the (1,2) component a module homomorphism; in this basis the
// image of (a=t, b=t, g=h=0) is the Jordan matrix of Q.
inline ModMatrix build_matrix(const ParamAssignment& asn, const StableQ& q) {
    if (asn.u() != q.u || asn.r() != q.r)
        throw std::invalid_argument("assignment belongs to a different Q");
    const int u = q.u, r = q.r, n = 2 * u - r;
    ModMatrix m(n, asn.prime());
    for (int j = 0; j < u; ++j) {  // x_j column
        for (int i = j + 1; i < u; ++i)
            m.set(i, j, asn.get({VarFamily::a, i - j}));
        for (int i2 = j; i2 < u - r; ++i2)
            m.set(u + i2, j, asn.get({VarFamily::h, i2 - j}));
    }
    for (int j2 = 0; j2 < u - r; ++j2) {  // y_j2 column
        for (int i = r + j2; i < u; ++i)
            m.set(i, u + j2, asn.get({VarFamily::g, i - r - j2}));
        for (int i2 = j2 + 1; i2 < u - r; ++i2)
            m.set(u + i2, u + j2, asn.get({VarFamily::b, i2 - j2}));
    }
    return m;
}

// Random nilpotent element of the commutant of J_P. Block (i,j) is the
// homomorphism t^{max(0, p_i - p_j)} c(t) with min(p_i, p_j) free
// coefficients; within each group of equal part sizes the matrix of leading
// coefficients is drawn strictly upper triangular, which forces nilpotency.
inline ModMatrix commutant_sample(const Partition& parts, std::uint64_t seed,
                                  std::uint64_t p = kDefaultPrime) {
    if (parts.empty()) throw std::invalid_argument("commutant_sample needs a nonempty partition");
    CounterRng rng({0x636f6d6dull, seed});
    for (int part : parts.parts()) rng.absorb(std::uint64_t(part));

    const int nblocks = int(parts.size());
    std::vector<int> off(std::size_t(nblocks) + 1, 0);
    for (int i = 0; i < nblocks; ++i) off[std::size_t(i) + 1] = off[std::size_t(i)] + parts[std::size_t(i)];

    ModMatrix m(parts.weight(), p);
    for (int i = 0; i < nblocks; ++i)
        for (int j = 0; j < nblocks; ++j) {
            const int pi = parts[std::size_t(i)], pj = parts[std::size_t(j)];
            const int ncoef = std::min(pi, pj);
            const int shift = pi > pj ? pi - pj : 0;
            for (int d = 0; d < ncoef; ++d) {
                std::uint64_t c;
                if (pi == pj && d == 0)
                    c = i < j ? rng.uniform(p) : 0;
                else
                    c = rng.uniform(p);
                if (!c) continue;
                for (int s = 0; s + shift + d < pi && s < pj; ++s)
                    m.set(off[std::size_t(i)] + shift + d + s, off[std::size_t(j)] + s, c);
            }
        }

    const ModMatrix j = jordan_matrix(parts, p);
    if (!(mat_mul(m, j) == mat_mul(j, m)))
        throw std::logic_error("commutant sample does not commute with J_P");
    if (!is_nilpotent(m)) throw std::logic_error("commutant sample is not nilpotent");
    return m;
}

// Monte Carlo estimate of the generic commuting type D(P): the dominance
// maximum of the sampled types. Unlucky samples fall strictly below the
// generic type, never above, so the maximum is the estimate.
inline Partition d_oracle(const Partition& parts, int trials, std::uint64_t seed,
                          std::uint64_t p = kDefaultPrime) {
    if (parts.empty()) throw std::invalid_argument("d_oracle needs a nonempty partition");
    if (trials < 1) throw std::invalid_argument("d_oracle needs trials >= 1");
    CounterRng trial_seeds({0x646f7261ull, seed});
    std::vector<Partition> obs;
    obs.reserve(std::size_t(trials));
    for (int t = 0; t < trials; ++t)
        obs.push_back(jordan_type_of(commutant_sample(parts, trial_seeds.next(), p)));
    for (const Partition& cand : obs) {
        bool maximal = true;
        for (const Partition& o : obs)
            maximal = maximal && dominance_leq(o, cand) == Dominance::less_or_equal;
        if (maximal) return cand;
    }
    throw std::runtime_error("sampled commuting types have no dominance maximum");
}

}  // namespace jtab
