#include <doctest.h>

#include <numeric>

#include "lucassq/periods.hpp"

using namespace lucassq;

TEST_CASE("Fibonacci mod 4 has the 6-cycle 0,1,1,2,3,1")
{
    const auto info = period_mod({1, -1}, 4);
    CHECK(info.preperiod == 0);
    CHECK(info.period == 6);
    CHECK(info.prefix.empty());
    CHECK(info.cycle == std::vector<std::uint64_t>{0, 1, 1, 2, 3, 1});
}

TEST_CASE("U(1,1) mod 4 has the 6-cycle 0,1,1,0,3,3")
{
    const auto info = period_mod({1, 1}, 4);
    CHECK(info.preperiod == 0);
    CHECK(info.period == 6);
    CHECK(info.cycle == std::vector<std::uint64_t>{0, 1, 1, 0, 3, 3});
}

TEST_CASE("U(3,2) mod 4 stabilizes at 3 after two terms")
{
    // U_n(3,2) = 2^n - 1 mod 4: 0, 1, 3, 3, 3, ...
    const auto info = period_mod({3, 2}, 4);
    CHECK(info.preperiod == 2);
    CHECK(info.period == 1);
    CHECK(info.prefix == std::vector<std::uint64_t>{0, 1});
    CHECK(info.cycle == std::vector<std::uint64_t>{3});
}

TEST_CASE("residues_mod fixtures")
{
    CHECK(residues_mod({1, -1}, 4, 10) ==
          std::vector<std::uint64_t>{0, 1, 1, 2, 3, 1, 0, 1, 1, 2});
    CHECK(residues_mod({1, 1}, 4, 12) ==
          std::vector<std::uint64_t>{0, 1, 1, 0, 3, 3, 0, 1, 1, 0, 3, 3});
    CHECK(residues_mod({9, -14}, 2, 2) == std::vector<std::uint64_t>{0, 1});
    CHECK_THROWS_AS(residues_mod({1, 1}, 1, 5), domain_error);
    CHECK_THROWS_AS(period_mod({1, 1}, 0), domain_error);
}

TEST_CASE("reconstruction matches direct residues")
{
    for (long p = -4; p <= 4; ++p) {
        for (long q = -4; q <= 4; ++q) {
            for (std::uint64_t m = 2; m <= 12; ++m) {
                const LucasParams params{p, q};
                const auto info = period_mod(params, m);
                const std::uint64_t count = 4 * m * m + 1;
                const auto direct = residues_mod(params, m, count);
                for (std::uint64_t k = 0; k < count; ++k)
                    CHECK(info.residue_at(k) == direct[k]);
            }
        }
    }
}

TEST_CASE("purely periodic when gcd(Q, m) = 1")
{
    for (long p = -4; p <= 4; ++p)
        for (long q = -4; q <= 4; ++q)
            for (std::uint64_t m = 2; m <= 12; ++m)
                if (std::gcd(std::abs(q), static_cast<long>(m)) == 1)
                    CHECK(period_mod({p, q}, m).preperiod == 0);
}

TEST_CASE("u_mod matches period reconstruction")
{
    const LucasParams params{5, 6};
    const auto info = period_mod(params, 12);
    for (SequenceIndex k = 0; k <= 1000; ++k)
        CHECK(u_mod(params, k, 12).value == info.residue_at(k));
}

TEST_CASE("reported period is minimal")
{
    for (long p = -4; p <= 4; ++p) {
        for (long q = -4; q <= 4; ++q) {
            const auto info = period_mod({p, q}, 8);
            for (std::uint64_t d = 1; d < info.period; ++d) {
                if (info.period % d != 0)
                    continue;
                bool shifted_ok = true;
                for (std::uint64_t k = 0; k < info.period; ++k)
                    if (info.cycle[k] != info.cycle[(k + d) % info.period])
                        shifted_ok = false;
                CHECK_FALSE(shifted_ok);
            }
        }
    }
}

TEST_CASE("Brent path agrees with the table path")
{
    // m = 6000 exceeds the visited-table threshold; check against the
    // direct residue stream.
    const LucasParams params{7, 10};
    const auto info = period_mod(params, 6000);
    const std::uint64_t count = info.preperiod + 3 * info.period;
    const auto direct = residues_mod(params, 6000, count);
    for (std::uint64_t k = 0; k < count; ++k)
        CHECK(info.residue_at(k) == direct[k]);
    // and against a small modulus where the answer is known
    const auto fib4 = period_mod({1, -1}, 4096);
    const auto direct4 = residues_mod({1, -1}, 4096,
                                      fib4.preperiod + 2 * fib4.period);
    for (std::uint64_t k = 0; k < direct4.size(); ++k)
        CHECK(fib4.residue_at(k) == direct4[k]);
}
