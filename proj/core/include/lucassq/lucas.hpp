#pragma once

#include <cstdint>

#include "lucassq/arith.hpp"

namespace lucassq {

// The pair (P, Q) of U_n = P*U_{n-1} - Q*U_{n-2}. No constraints here;
// theorem hypotheses are checked by the criteria module.
struct LucasParams {
    BigInt p;
    BigInt q;

    friend bool operator==(const LucasParams&, const LucasParams&) = default;
};

using SequenceIndex = std::uint64_t;

// U_n by linear iteration of the recurrence. O(n) big-integer operations.
BigInt u_rec(const LucasParams& params, SequenceIndex n);

// U_n by the binomial closed form
//   sum_{r=0}^{floor((n-1)/2)} (-1)^r P^{n-1-2r} Q^r C(n-1-r, r),
// valid for n >= 1 only; n = 0 throws domain_error. Uses the convention
// 0^0 = 1 so P = 0 evaluates correctly.
BigInt u_closed(const LucasParams& params, SequenceIndex n);

// U_n by exponentiation-by-squaring of the companion matrix [[P,-Q],[1,0]]
// applied to the seed column (U_1, U_0) = (1, 0). O(log n) multiplications.
BigInt u_matrix(const LucasParams& params, SequenceIndex n);

// U_n mod m via companion-matrix powering with word-size entries.
// Requires 2 <= m; m must fit a machine word. O(log n).
Residue u_mod(const LucasParams& params, SequenceIndex n, std::uint64_t m);

} // namespace lucassq
