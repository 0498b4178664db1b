#include "lucassq/lucas.hpp"

#include <array>
#include <utility>

namespace lucassq {

BigInt u_rec(const LucasParams& params, SequenceIndex n)
{
    BigInt a = 0; // U_k
    BigInt b = 1; // U_{k+1}
    for (SequenceIndex k = 0; k < n; ++k) {
        BigInt next = params.p * b - params.q * a;
        a = std::move(b);
        b = std::move(next);
    }
    return a;
}

BigInt u_closed(const LucasParams& params, SequenceIndex n)
{
    if (n == 0)
        throw domain_error("u_closed: defined for n >= 1 only");

    const SequenceIndex rmax = (n - 1) / 2;
    BigInt sum = 0;
    BigInt q_pow = 1; // Q^r
    for (SequenceIndex r = 0; r <= rmax; ++r) {
        BigInt p_pow; // P^(n-1-2r), with 0^0 = 1
        mpz_pow_ui(p_pow.get_mpz_t(), params.p.get_mpz_t(), n - 1 - 2 * r);
        BigInt term = p_pow * q_pow * arith::binomial(n - 1 - r, r);
        if (r % 2 == 0)
            sum += term;
        else
            sum -= term;
        if (r < rmax)
            q_pow *= params.q;
    }
    return sum;
}

namespace {

// 2x2 big-integer matrix, row major.
using Mat2 = std::array<BigInt, 4>;

Mat2 mul(const Mat2& a, const Mat2& b)
{
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
            a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

} // namespace

BigInt u_matrix(const LucasParams& params, SequenceIndex n)
{
    // M^n * (U_1, U_0)^T = (U_{n+1}, U_n)^T with M = [[P,-Q],[1,0]].
    Mat2 acc = {1, 0, 0, 1};
    Mat2 base = {params.p, -params.q, 1, 0};
    SequenceIndex e = n;
    while (e > 0) {
        if (e & 1)
            acc = mul(acc, base);
        e >>= 1;
        if (e > 0)
            base = mul(base, base);
    }
    // Seed column is (1, 0), so U_n is the bottom-left entry of M^n.
    return acc[2];
}

namespace {

using WordMat2 = std::array<std::uint64_t, 4>;

WordMat2 mul_mod(const WordMat2& a, const WordMat2& b, std::uint64_t m)
{
    auto cell = [&](int i, int j) {
        unsigned __int128 s =
            static_cast<unsigned __int128>(a[2 * i]) * b[j] % m;
        s += static_cast<unsigned __int128>(a[2 * i + 1]) * b[2 + j] % m;
        return static_cast<std::uint64_t>(s % m);
    };
    return {cell(0, 0), cell(0, 1), cell(1, 0), cell(1, 1)};
}

} // namespace

Residue u_mod(const LucasParams& params, SequenceIndex n, std::uint64_t m)
{
    if (m < 2)
        throw domain_error("u_mod: modulus must be >= 2");
    const std::uint64_t p = arith::mod_norm(params.p, m).value;
    const std::uint64_t neg_q = arith::mod_norm(-params.q, m).value;

    WordMat2 acc = {1 % m, 0, 0, 1 % m};
    WordMat2 base = {p, neg_q, 1 % m, 0};
    SequenceIndex e = n;
    while (e > 0) {
        if (e & 1)
            acc = mul_mod(acc, base, m);
        e >>= 1;
        if (e > 0)
            base = mul_mod(base, base, m);
    }
    return Residue{acc[2], m};
}

} // namespace lucassq
