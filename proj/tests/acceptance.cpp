// Acceptance suite: runs each release gate and prints one pass/fail line.
// Exits nonzero if any gate fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <numeric>
#include <random>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "lucassq/criteria.hpp"
#include "lucassq/lucas.hpp"
#include "lucassq/periods.hpp"
#include "lucassq/verify.hpp"

using namespace lucassq;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool ok,
            const std::string& detail = "")
{
    std::cout << (ok ? "PASS" : "FAIL") << "  " << number << ". " << name;
    if (!detail.empty())
        std::cout << "  (" << detail << ")";
    std::cout << '\n';
    if (!ok)
        ++failures;
}

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct CliResult {
    int exit_code = -1;
    std::string output;
};

CliResult run_cli(const std::string& args)
{
    const std::string cmd =
        std::string(LUCASSQ_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    CliResult result;
    if (!pipe)
        return result;
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        result.output.append(buf.data(), got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

// 1. Three evaluators agree over P,Q in [-8,8], n in [1,64]; < 10 s.
void criterion_1()
{
    const auto start = Clock::now();
    const auto r =
        run_cli("equiv --p-bound 8 --q-bound 8 --n-max 64 --format jsonl");
    const double elapsed = seconds_since(start);
    const bool ok = r.exit_code == 0 &&
                    r.output.find("\"residue_mismatches\":[]") !=
                        std::string::npos &&
                    r.output.find("\"triples_checked\":18496") !=
                        std::string::npos &&
                    elapsed < 10.0;
    report(1, "evaluator equivalence, 289*64 triples",
           ok, std::to_string(elapsed) + " s");
}

// 2. The two mod-4 period tables, bit-exact.
void criterion_2()
{
    const auto fib = run_cli("period --p 1 --q -1 --modulus 4");
    const auto u11 = run_cli("period --p 1 --q 1 --modulus 4");
    const bool ok =
        fib.exit_code == 0 &&
        fib.output.find("period=6") != std::string::npos &&
        fib.output.find("cycle: [0 1 1 2 3 1]") != std::string::npos &&
        u11.exit_code == 0 &&
        u11.output.find("period=6") != std::string::npos &&
        u11.output.find("cycle: [0 1 1 0 3 3]") != std::string::npos;
    report(2, "mod-4 period tables reproduced", ok);
}

// 3. Worked mod-4 residues at n = 3,5,...,17 for 1000 random odd P, Q with
// the matching Q residue class.
void criterion_3()
{
    struct Row {
        SequenceIndex n;
        int q_mod4; // 0 = either odd class
        std::uint64_t expected;
    };
    const Row rows[] = {{3, 3, 2},  {5, 1, 3},  {7, 0, 1},  {9, 3, 2},
                        {11, 1, 3}, {13, 0, 1}, {15, 3, 2}, {17, 1, 3}};
    std::mt19937_64 rng(20240901);
    std::uniform_int_distribution<long> dist(-100000, 100000);
    std::uint64_t mismatches = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const long p = dist(rng) | 1;
        long q = dist(rng) | 1;
        for (const auto& row : rows) {
            long qq = q;
            if (row.q_mod4 != 0) {
                // shift into the required odd residue class mod 4
                while (((qq % 4) + 4) % 4 != row.q_mod4)
                    qq += 2;
            }
            if (u_mod({p, qq}, row.n, 4).value != row.expected)
                ++mismatches;
        }
    }
    report(3, "worked examples n=3..17 over 1000 random (P,Q)",
           mismatches == 0, std::to_string(mismatches) + " mismatches");
}

// 4. Full criterion sweep over P,Q in [-21,21], n in [0,999]; < 60 s.
void criterion_4()
{
    const auto start = Clock::now();
    const auto r = run_cli(
        "verify --criterion ALL --p-bound 21 --q-bound 21 --n-max 999 "
        "--direct-limit 201 --jobs 4 --format jsonl");
    const double elapsed = seconds_since(start);
    bool clean = r.exit_code == 0;
    // every emitted report line must carry empty failure lists
    std::size_t lines = 0, pos = 0;
    while ((pos = r.output.find('\n', pos)) != std::string::npos) {
        ++lines;
        ++pos;
    }
    clean = clean && lines == 5 &&
            r.output.find("\"residue_mismatches\":[{") == std::string::npos &&
            r.output.find("\"square_violations\":[{") == std::string::npos;
    report(4, "theorem sweeps, all criteria", clean && elapsed < 60.0,
           std::to_string(elapsed) + " s");
}

// 5. Ribenboim-McDaniel subset at desk scale, plus the Fibonacci census.
void criterion_5()
{
    const auto r =
        run_cli("rm-check --p-max 15 --q-bound 15 --n-max 500");
    bool ok = r.exit_code == 0;

    const auto c = census({1, -1}, 500);
    std::vector<SequenceIndex> squares;
    for (const auto& [n, root] : c.square_indices)
        squares.push_back(n);
    ok = ok && squares == std::vector<SequenceIndex>{1, 2, 12};
    report(5, "rm-check clean; Fibonacci squares exactly {1,2,12}", ok);
}

// 6. u_mod at n = 10^12 in < 10 ms, agreeing with the period lookup.
void criterion_6()
{
    const LucasParams fib{1, -1};
    const SequenceIndex n = 1000000000000ull;

    const auto info = period_mod(fib, 4);
    const std::uint64_t expected = info.residue_at(n);

    const auto start = Clock::now();
    const auto r = u_mod(fib, n, 4);
    const double ms = seconds_since(start) * 1000.0;

    const auto cli =
        run_cli("mod --p 1 --q -1 --n 1000000000000 --modulus 4");
    const bool ok = r.value == expected && ms < 10.0 &&
                    cli.output == std::to_string(expected) + "\n";
    report(6, "modular fast path at n=10^12", ok,
           std::to_string(ms) + " ms");
}

// 7. u_matrix at n = 10^5 in < 1 s; digit count matches u_rec at n = 10^4.
void criterion_7()
{
    const LucasParams fib{1, -1};
    const auto start = Clock::now();
    const BigInt big = u_matrix(fib, 100000);
    const double elapsed = seconds_since(start);

    const BigInt spot_matrix = u_matrix(fib, 10000);
    const BigInt spot_rec = u_rec(fib, 10000);
    const bool ok = elapsed < 1.0 && spot_matrix == spot_rec &&
                    big.get_str().size() == 20899; // F_100000 digit count
    report(7, "u_matrix performance and spot agreement", ok,
           std::to_string(elapsed) + " s");
}

// 8. Property suites under a fixed seed.
void criterion_8()
{
    std::mt19937_64 rng(424242);
    bool ok = true;

    // Pascal identity to 40
    for (std::uint64_t k = 0; k <= 40 && ok; ++k)
        for (std::uint64_t r = 0; r <= k && ok; ++r)
            ok = arith::binomial(k, r) +
                     (r ? arith::binomial(k, r - 1) : BigInt(0)) ==
                 arith::binomial(k + 1, r);

    // isqrt contract on random inputs below 10^30
    BigInt bound = 1;
    for (int i = 0; i < 30; ++i)
        bound *= 10;
    for (int i = 0; i < 1000000 && ok; ++i) {
        BigInt x = BigInt(std::to_string(rng()));
        x = (x << 36) | BigInt(std::to_string(rng() & 0xfffffffffull));
        x %= bound;
        const BigInt s = arith::isqrt(x);
        ok = s * s <= x && (s + 1) * (s + 1) > x;
    }

    // pure periodicity when gcd(Q, m) = 1
    for (long p = -4; p <= 4 && ok; ++p)
        for (long q = -4; q <= 4 && ok; ++q)
            for (std::uint64_t m = 2; m <= 12 && ok; ++m)
                if (std::gcd(std::abs(q), static_cast<long>(m)) == 1)
                    ok = period_mod({p, q}, m).preperiod == 0;

    // sign symmetry
    for (long p = -8; p <= 8 && ok; ++p)
        for (long q = -8; q <= 8 && ok; ++q)
            for (SequenceIndex n = 0; n <= 32 && ok; ++n) {
                BigInt rhs = u_rec({p, q}, n);
                if (n % 2 == 0 && n > 0)
                    rhs = -rhs;
                ok = u_rec({-p, q}, n) == rhs;
            }

    // classifier residue soundness
    for (long p = -20; p <= 20 && ok; ++p)
        for (long q = -20; q <= 20 && ok; ++q)
            for (SequenceIndex n = 0; n <= 600 && ok; ++n)
                for (const auto& [id, residue] :
                     classify({p, q}, n).predicted_residues_mod4)
                    ok = ok && u_mod({p, q}, n, 4).value == residue;

    report(8, "property suites (fixed seed)", ok);
}

} // namespace

int main()
{
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    std::cout << (failures == 0 ? "ALL ACCEPTANCE CRITERIA PASSED"
                                : "ACCEPTANCE FAILURES: " +
                                      std::to_string(failures))
              << '\n';
    return failures == 0 ? 0 : 1;
}
