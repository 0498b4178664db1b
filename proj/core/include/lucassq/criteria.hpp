#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "lucassq/lucas.hpp"

namespace lucassq {

// The four non-square criteria (the mod-6 theorem contributes two cases).
enum class CriterionId {
    T31A, // P,Q,n odd, n = 3 (mod 6), Q = 3 (mod 4)  -> U_n = 2 (mod 4)
    T31B, // P,Q,n odd, n = 5 (mod 6), Q = 1 (mod 4)  -> U_n = 3 (mod 4)
    T32,  // P odd, n odd, n >= 3, Q = 2 (mod 4)      -> U_n = 3 (mod 4)
    T33,  // P = 3 (mod 4), n even >= 2, Q = 0 (mod 4) -> U_n = 3 (mod 4)
    T34,  // n = 2, P = 2 or 3 (mod 4)                 -> U_2 = P (mod 4)
};

std::string to_string(CriterionId id);

// Parses "T31A" etc.; throws domain_error on anything else.
CriterionId criterion_from_string(const std::string& name);

struct CriterionVerdict {
    // Applicable criteria with their predicted mod-4 residues. Map keeps the
    // CriterionId ordering deterministic.
    std::map<CriterionId, std::uint64_t> predicted_residues_mod4;
    bool proved_non_square = false; // true iff the map is nonempty

    friend bool operator==(const CriterionVerdict&,
                           const CriterionVerdict&) = default;
};

// Evaluates every criterion's hypotheses on the least nonnegative residues
// of P, Q, n. An empty verdict means inconclusive, never "is a square".
CriterionVerdict classify(const LucasParams& params, SequenceIndex n);

// Human-readable rendering of a verdict, ordered by CriterionId.
std::string explain(const CriterionVerdict& verdict);

} // namespace lucassq
