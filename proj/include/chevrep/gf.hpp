// gf.hpp - prime field scalar arithmetic.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace chevrep {

// Internal consistency check that stays on in release builds.
#define CHEVREP_CHECK(cond, msg)                                               \
    do {                                                                       \
        if (!(cond)) throw std::runtime_error(std::string("chevrep: ") + msg); \
    } while (0)

inline bool is_prime(uint32_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Arithmetic in GF(p) on uint32_t residues [0, p).
struct PrimeField {
    uint32_t p;

    explicit PrimeField(uint32_t prime) : p(prime) {
        if (!is_prime(prime)) throw std::invalid_argument("PrimeField: p must be prime");
    }

    uint32_t reduce(int64_t v) const {
        int64_t r = v % static_cast<int64_t>(p);
        if (r < 0) r += p;
        return static_cast<uint32_t>(r);
    }
    uint32_t add(uint32_t a, uint32_t b) const {
        uint32_t s = a + b;
        return s >= p ? s - p : s;
    }
    uint32_t sub(uint32_t a, uint32_t b) const { return a >= b ? a - b : a + p - b; }
    uint32_t neg(uint32_t a) const { return a == 0 ? 0 : p - a; }
    uint32_t mul(uint32_t a, uint32_t b) const {
        return static_cast<uint32_t>((static_cast<uint64_t>(a) * b) % p);
    }
    uint32_t pow(uint32_t a, uint64_t e) const {
        uint32_t r = 1 % p, base = a % p;
        while (e) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }
    uint32_t inv(uint32_t a) const {
        CHEVREP_CHECK(a % p != 0, "PrimeField::inv of zero");
        return pow(a, p - 2);
    }
};

}  // namespace chevrep
