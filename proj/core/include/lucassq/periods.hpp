#pragma once

#include <cstdint>
#include <vector>

#include "lucassq/lucas.hpp"

namespace lucassq {

// Eventual period of U_n mod m. For every k >= preperiod,
//   U_k == cycle[(k - preperiod) % period] (mod m),
// and prefix holds U_0 .. U_{preperiod-1}. Both preperiod and period are
// minimal. Cycles are anchored at index 0.
struct PeriodInfo {
    std::uint64_t modulus = 2;
    std::uint64_t preperiod = 0;
    std::uint64_t period = 1;
    std::vector<std::uint64_t> prefix;
    std::vector<std::uint64_t> cycle;

    std::uint64_t residue_at(SequenceIndex k) const
    {
        if (k < preperiod)
            return prefix[k];
        return cycle[(k - preperiod) % period];
    }

    friend bool operator==(const PeriodInfo&, const PeriodInfo&) = default;
};

// Detects the eventual period of (U_n mod m) by iterating the state pair
// (U_k, U_{k+1}) mod m from (0, 1). Terminates within m^2 + 1 steps.
// Throws domain_error for m < 2.
PeriodInfo period_mod(const LucasParams& params, std::uint64_t m);

// Residues of U_0 .. U_{count-1} mod m by direct modular iteration.
std::vector<std::uint64_t> residues_mod(const LucasParams& params,
                                        std::uint64_t m, std::uint64_t count);

} // namespace lucassq
