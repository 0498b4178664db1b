#include "lucassq/arith.hpp"

namespace lucassq::arith {

BigInt binomial(std::uint64_t n, std::uint64_t k)
{
    if (k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    // Multiplicative formula with running exact division: after step i the
    // accumulator equals C(n-k+i, i), so each division is exact.
    BigInt acc = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        acc *= n - k + i;
        mpz_divexact_ui(acc.get_mpz_t(), acc.get_mpz_t(), i);
    }
    return acc;
}

BigInt isqrt(const BigInt& x)
{
    if (sgn(x) < 0)
        throw domain_error("isqrt: negative argument");
    if (sgn(x) == 0)
        return 0;

    // Newton iteration s <- (s + x/s) / 2 from an overestimate. The iterates
    // decrease monotonically until they land on floor(sqrt(x)).
    const std::size_t bits = mpz_sizeinbase(x.get_mpz_t(), 2);
    BigInt s = 1;
    s <<= (bits + 1) / 2; // s^2 >= x
    for (;;) {
        BigInt t = (s + x / s) >> 1;
        if (t >= s)
            return s;
        s = std::move(t);
    }
}

bool is_perfect_square(const BigInt& x)
{
    if (sgn(x) < 0)
        return false;
    BigInt s = isqrt(x);
    return s * s == x;
}

bool is_nonzero_square(const BigInt& x)
{
    return sgn(x) > 0 && is_perfect_square(x);
}

Residue mod_norm(const BigInt& x, std::uint64_t m)
{
    if (m < 2)
        throw domain_error("mod_norm: modulus must be >= 2");
    BigInt r;
    mpz_mod_ui(r.get_mpz_t(), x.get_mpz_t(), m); // GMP mod_ui is nonnegative
    return Residue{mpz_get_ui(r.get_mpz_t()), m};
}

} // namespace lucassq::arith
