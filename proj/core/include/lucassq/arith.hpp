#pragma once

#include <cstdint>
#include <stdexcept>

#include <gmpxx.h>

namespace lucassq {

using BigInt = mpz_class;

// Least nonnegative residue together with its modulus.
struct Residue {
    std::uint64_t value = 0;
    std::uint64_t modulus = 2;

    friend bool operator==(const Residue&, const Residue&) = default;
};

struct domain_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

namespace arith {

// C(n, k), exact. Returns 0 for k > n.
BigInt binomial(std::uint64_t n, std::uint64_t k);

// Floor square root of x >= 0. Throws domain_error for negative x.
BigInt isqrt(const BigInt& x);

// True iff x >= 0 and some s has s*s == x. Zero counts as a square.
bool is_perfect_square(const BigInt& x);

// True iff x > 0 and x is a perfect square.
bool is_nonzero_square(const BigInt& x);

// Least nonnegative residue of x mod m. Throws domain_error for m < 2.
Residue mod_norm(const BigInt& x, std::uint64_t m);

} // namespace arith
} // namespace lucassq
