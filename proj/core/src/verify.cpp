#include "lucassq/verify.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <thread>
#include <utility>

namespace lucassq {

namespace {

// Runs worker(begin, end) over [0, total) split into contiguous chunks, one
// per thread, and merges the per-chunk reports in index order. Chunking by
// index keeps reports identical for every jobs value.
template <typename Worker>
VerificationReport parallel_sweep(std::size_t total, unsigned jobs,
                                  Worker worker)
{
    jobs = std::max(1u, jobs);
    if (jobs == 1 || total <= 1)
        return worker(0, total);

    const std::size_t chunks = std::min<std::size_t>(jobs, total);
    std::vector<VerificationReport> parts(chunks);
    std::vector<std::thread> threads;
    threads.reserve(chunks);
    for (std::size_t c = 0; c < chunks; ++c) {
        const std::size_t lo = total * c / chunks;
        const std::size_t hi = total * (c + 1) / chunks;
        threads.emplace_back(
            [&, c, lo, hi] { parts[c] = worker(lo, hi); });
    }
    for (auto& t : threads)
        t.join();

    VerificationReport merged;
    for (auto& part : parts)
        merged.merge(std::move(part));
    return merged;
}

std::vector<BigInt> range_values(long lo, long hi)
{
    std::vector<BigInt> out;
    out.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (long v = lo; v <= hi; ++v)
        out.emplace_back(v);
    return out;
}

} // namespace

GridSpec GridSpec::symmetric(long p_bound, long q_bound, SequenceIndex n_lo,
                             SequenceIndex n_hi, SequenceIndex direct_limit)
{
    return GridSpec{range_values(-p_bound, p_bound),
                    range_values(-q_bound, q_bound), n_lo, n_hi,
                    direct_limit};
}

void VerificationReport::merge(VerificationReport other)
{
    triples_checked += other.triples_checked;
    residue_mismatches.insert(
        residue_mismatches.end(),
        std::make_move_iterator(other.residue_mismatches.begin()),
        std::make_move_iterator(other.residue_mismatches.end()));
    square_violations.insert(
        square_violations.end(),
        std::make_move_iterator(other.square_violations.begin()),
        std::make_move_iterator(other.square_violations.end()));
}

VerificationReport check_equivalence(long p_bound, long q_bound,
                                     SequenceIndex n_max, unsigned jobs)
{
    const auto p_values = range_values(-p_bound, p_bound);
    const auto q_values = range_values(-q_bound, q_bound);
    const std::size_t pairs = p_values.size() * q_values.size();

    auto worker = [&](std::size_t begin, std::size_t end) {
        VerificationReport report;
        report.check = "EQUIV";
        for (std::size_t idx = begin; idx < end; ++idx) {
            const LucasParams params{p_values[idx / q_values.size()],
                                     q_values[idx % q_values.size()]};
            // One pass of the recurrence serves as the u_rec value stream.
            BigInt a = 0, b = 1;
            for (SequenceIndex n = 1; n <= n_max; ++n) {
                BigInt next = params.p * b - params.q * a;
                a = std::move(b);
                b = std::move(next);
                const BigInt& rec = a; // U_n
                const BigInt closed = u_closed(params, n);
                const BigInt mat = u_matrix(params, n);
                ++report.triples_checked;
                if (closed != rec)
                    report.residue_mismatches.push_back(
                        {params.p, params.q, n, rec.get_str(),
                         closed.get_str()});
                if (mat != rec)
                    report.residue_mismatches.push_back(
                        {params.p, params.q, n, rec.get_str(),
                         mat.get_str()});
            }
        }
        return report;
    };

    auto report = parallel_sweep(pairs, jobs, worker);
    report.check = "EQUIV";
    return report;
}

VerificationReport verify_criterion(CriterionId criterion,
                                    const GridSpec& grid, unsigned jobs)
{
    const std::size_t pairs = grid.p_values.size() * grid.q_values.size();

    auto worker = [&](std::size_t begin, std::size_t end) {
        VerificationReport report;
        for (std::size_t idx = begin; idx < end; ++idx) {
            const LucasParams params{
                grid.p_values[idx / grid.q_values.size()],
                grid.q_values[idx % grid.q_values.size()]};

            // Walk the recurrence once so exact values up to direct_limit
            // come for free.
            BigInt a = 0, b = 1; // U_n, U_{n+1}
            const SequenceIndex exact_hi =
                std::min(grid.direct_limit, grid.n_hi);
            for (SequenceIndex n = 0; n <= grid.n_hi; ++n) {
                const auto verdict = classify(params, n);
                const auto it =
                    verdict.predicted_residues_mod4.find(criterion);
                if (it != verdict.predicted_residues_mod4.end() &&
                    n >= grid.n_lo) {
                    ++report.triples_checked;
                    const std::uint64_t actual = u_mod(params, n, 4).value;
                    if (actual != it->second)
                        report.residue_mismatches.push_back(
                            {params.p, params.q, n,
                             std::to_string(it->second),
                             std::to_string(actual)});
                    if (n <= exact_hi && arith::is_nonzero_square(a))
                        report.square_violations.push_back(
                            {params.p, params.q, n, a});
                }
                if (n <= exact_hi) {
                    BigInt next = params.p * b - params.q * a;
                    a = std::move(b);
                    b = std::move(next);
                }
            }
        }
        return report;
    };

    auto report = parallel_sweep(pairs, jobs, worker);
    report.check = to_string(criterion);
    return report;
}

std::vector<VerificationReport> verify_all(const GridSpec& grid,
                                           unsigned jobs)
{
    std::vector<VerificationReport> reports;
    for (auto id : {CriterionId::T31A, CriterionId::T31B, CriterionId::T32,
                    CriterionId::T33, CriterionId::T34})
        reports.push_back(verify_criterion(id, grid, jobs));
    return reports;
}

CensusReport census(const LucasParams& params, SequenceIndex n_max)
{
    CensusReport report;
    report.params = params;
    report.n_max = n_max;
    BigInt a = 0, b = 1;
    for (SequenceIndex n = 0; n <= n_max; ++n) {
        if (sgn(a) == 0) {
            report.zero_indices.push_back(n);
        } else if (sgn(a) > 0) {
            BigInt root = arith::isqrt(a);
            if (root * root == a)
                report.square_indices.emplace_back(n, std::move(root));
        }
        BigInt next = params.p * b - params.q * a;
        a = std::move(b);
        b = std::move(next);
    }
    return report;
}

VerificationReport check_rm_subset(long p_max, long q_bound,
                                   SequenceIndex n_max, unsigned jobs)
{
    // n = 0 is excluded from the allowed set: U_0 = 0 is not a nonzero
    // square, and the census only reports nonzero squares anyway.
    static constexpr SequenceIndex allowed[] = {1, 2, 3, 6, 12};

    std::vector<LucasParams> pairs;
    for (long p = 1; p <= p_max; p += 2) {
        for (long q = -q_bound; q <= q_bound; ++q) {
            if (q % 2 == 0)
                continue;
            if (std::gcd(p, std::abs(q)) != 1)
                continue;
            if (static_cast<long long>(p) * p - 4LL * q <= 0)
                continue;
            pairs.push_back({BigInt(p), BigInt(q)});
        }
    }

    auto worker = [&](std::size_t begin, std::size_t end) {
        VerificationReport report;
        report.check = "RM";
        for (std::size_t idx = begin; idx < end; ++idx) {
            const auto& params = pairs[idx];
            const auto c = census(params, n_max);
            ++report.triples_checked;
            for (const auto& [n, root] : c.square_indices) {
                if (std::find(std::begin(allowed), std::end(allowed), n) ==
                    std::end(allowed))
                    report.square_violations.push_back(
                        {params.p, params.q, n, root * root});
            }
        }
        return report;
    };

    auto report = parallel_sweep(pairs.size(), jobs, worker);
    report.check = "RM";
    return report;
}

} // namespace lucassq
