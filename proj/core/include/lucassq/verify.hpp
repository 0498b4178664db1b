#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lucassq/criteria.hpp"
#include "lucassq/lucas.hpp"

namespace lucassq {

// Parameter grid for a theorem sweep. Exact big-integer square checks run
// for n <= direct_limit; above it only the mod-4 residue check runs.
struct GridSpec {
    std::vector<BigInt> p_values;
    std::vector<BigInt> q_values;
    SequenceIndex n_lo = 0;
    SequenceIndex n_hi = 0;
    SequenceIndex direct_limit = 0;

    static GridSpec symmetric(long p_bound, long q_bound, SequenceIndex n_lo,
                              SequenceIndex n_hi, SequenceIndex direct_limit);
};

// Expected/actual are decimal strings: mod-4 residues for criterion sweeps,
// full evaluator outputs for equivalence disagreements.
struct ResidueMismatch {
    BigInt p, q;
    SequenceIndex n = 0;
    std::string expected;
    std::string actual;
};

struct SquareViolation {
    BigInt p, q;
    SequenceIndex n = 0;
    BigInt value;
};

// Grid-sweep outcome for one theorem (or for the evaluator-equivalence and
// Ribenboim-McDaniel checks, which reuse the shape). Empty failure lists
// mean the sweep verified.
struct VerificationReport {
    std::string check;                    // "T31A".."T34", "ALL", "EQUIV", "RM"
    std::uint64_t triples_checked = 0;
    std::vector<ResidueMismatch> residue_mismatches;
    std::vector<SquareViolation> square_violations;

    bool ok() const
    {
        return residue_mismatches.empty() && square_violations.empty();
    }
    void merge(VerificationReport other);
};

// Indices n <= n_max at which U_n(P,Q) is zero or a nonzero square.
struct CensusReport {
    LucasParams params;
    SequenceIndex n_max = 0;
    std::vector<SequenceIndex> zero_indices;
    std::vector<std::pair<SequenceIndex, BigInt>> square_indices; // (n, root)
};

// Asserts u_rec = u_closed = u_matrix over P in [-p_bound, p_bound],
// Q in [-q_bound, q_bound], n in [1, n_max]. Disagreements are reported as
// residue mismatches carrying the differing evaluator outputs.
VerificationReport check_equivalence(long p_bound, long q_bound,
                                     SequenceIndex n_max, unsigned jobs = 1);

// Sweeps one criterion over the grid: residue check mod 4 for every
// applicable triple, exact non-squareness check for n <= direct_limit.
VerificationReport verify_criterion(CriterionId criterion,
                                    const GridSpec& grid, unsigned jobs = 1);

// All five criteria over the same grid; reports in CriterionId order.
std::vector<VerificationReport> verify_all(const GridSpec& grid,
                                           unsigned jobs = 1);

// Exhaustive square census of U_0 .. U_{n_max} by the recurrence.
CensusReport census(const LucasParams& params, SequenceIndex n_max);

// Desk-scale check of the Ribenboim-McDaniel square-index theorem: for
// every P odd in [1, p_max], Q odd in [-q_bound, q_bound] with
// gcd(P, Q) = 1 and P^2 - 4Q > 0, the census square indices up to n_max
// must lie in {1, 2, 3, 6, 12}.
VerificationReport check_rm_subset(long p_max, long q_bound,
                                   SequenceIndex n_max, unsigned jobs = 1);

} // namespace lucassq
