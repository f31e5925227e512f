#pragma once

#include <cstdint>
#include <initializer_list>
#include <stdexcept>

namespace jtab {

// Default working prime: 2^61 - 1.
inline constexpr std::uint64_t kDefaultPrime = (std::uint64_t(1) << 61) - 1;

inline std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    std::uint64_t s = a + b;
    return s >= p ? s - p : s;
}

inline std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return a >= b ? a - b : a + (p - b);
}

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return std::uint64_t((unsigned __int128)a * b % p);
}

inline std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mul_mod(r, a, p);
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    return r;
}

// Inverse mod a prime, via Fermat.
inline std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
    if (a % p == 0) throw std::invalid_argument("inverse of zero");
    return pow_mod(a, p - 2, p);
}

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

// Counter-mode generator built on the splitmix64 finalizer. The stream is a
// pure function of the key words, so every sampled object is reproducible
// from (seed, context).
class CounterRng {
public:
    CounterRng(std::initializer_list<std::uint64_t> key_words) {
        for (std::uint64_t w : key_words) absorb(w);
    }

    // Fold another word into the key. Only meaningful before drawing.
    void absorb(std::uint64_t w) { key_ = mix(key_ ^ w); }

    std::uint64_t next() { return mix(key_ + 0x9e3779b97f4a7c15ull * ++ctr_); }

    // Uniform on [0, p).
    std::uint64_t uniform(std::uint64_t p) {
        if (p < 2) throw std::invalid_argument("uniform needs modulus >= 2");
        const std::uint64_t rem = (0 - p) % p;  // 2^64 mod p
        for (;;) {
            std::uint64_t x = next();
            if (rem == 0 || x < 0 - rem) return x % p;
        }
    }

    // Uniform on [1, p).
    std::uint64_t uniform_nonzero(std::uint64_t p) {
        for (;;) {
            std::uint64_t x = uniform(p);
            if (x != 0) return x;
        }
    }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ull;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    std::uint64_t key_ = 0x8d2f1f7b3a9c55e1ull;
    std::uint64_t ctr_ = 0;
};

}  // namespace jtab
