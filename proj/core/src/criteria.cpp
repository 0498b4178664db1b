#include "lucassq/criteria.hpp"

#include <sstream>

namespace lucassq {

std::string to_string(CriterionId id)
{
    switch (id) {
    case CriterionId::T31A: return "T31A";
    case CriterionId::T31B: return "T31B";
    case CriterionId::T32: return "T32";
    case CriterionId::T33: return "T33";
    case CriterionId::T34: return "T34";
    }
    return "?";
}

CriterionId criterion_from_string(const std::string& name)
{
    if (name == "T31A") return CriterionId::T31A;
    if (name == "T31B") return CriterionId::T31B;
    if (name == "T32") return CriterionId::T32;
    if (name == "T33") return CriterionId::T33;
    if (name == "T34") return CriterionId::T34;
    throw domain_error("unknown criterion: " + name);
}

CriterionVerdict classify(const LucasParams& params, SequenceIndex n)
{
    const std::uint64_t p4 = arith::mod_norm(params.p, 4).value;
    const std::uint64_t q4 = arith::mod_norm(params.q, 4).value;
    const bool p_odd = p4 % 2 == 1;
    const bool q_odd = q4 % 2 == 1;
    const bool n_odd = n % 2 == 1;

    CriterionVerdict v;
    if (p_odd && q_odd && n_odd) {
        if (n % 6 == 3 && q4 == 3)
            v.predicted_residues_mod4[CriterionId::T31A] = 2;
        if (n % 6 == 5 && q4 == 1)
            v.predicted_residues_mod4[CriterionId::T31B] = 3;
    }
    if (p_odd && n_odd && n >= 3 && q4 == 2)
        v.predicted_residues_mod4[CriterionId::T32] = 3;
    // n = 0 is excluded: U_0 = 0 and the congruence U_n = P^{n-1} has no
    // content there.
    if (p4 == 3 && n >= 2 && n % 2 == 0 && q4 == 0)
        v.predicted_residues_mod4[CriterionId::T33] = 3;
    if (n == 2 && (p4 == 2 || p4 == 3))
        v.predicted_residues_mod4[CriterionId::T34] = p4;

    v.proved_non_square = !v.predicted_residues_mod4.empty();
    return v;
}

namespace {

const char* hypothesis_text(CriterionId id)
{
    switch (id) {
    case CriterionId::T31A:
        return "P, Q, n odd, n ≡ 3 (mod 6), Q ≡ 3 (mod 4)";
    case CriterionId::T31B:
        return "P, Q, n odd, n ≡ 5 (mod 6), Q ≡ 1 (mod 4)";
    case CriterionId::T32:
        return "P odd, n odd, n ≥ 3, Q ≡ 2 (mod 4)";
    case CriterionId::T33:
        return "P ≡ 3 (mod 4), n even, Q ≡ 0 (mod 4)";
    case CriterionId::T34:
        return "n = 2, P ≡ 2 or 3 (mod 4)";
    }
    return "";
}

} // namespace

std::string explain(const CriterionVerdict& verdict)
{
    if (!verdict.proved_non_square)
        return "no criterion applies; inconclusive (U_n may or may not be a "
               "nonzero square)\n";
    std::ostringstream out;
    for (const auto& [id, residue] : verdict.predicted_residues_mod4) {
        out << to_string(id) << ": " << hypothesis_text(id)
            << " => U_n ≡ " << residue
            << " (mod 4), not a nonzero square\n";
    }
    return out.str();
}

} // namespace lucassq
