#include "lucassq/periods.hpp"

#include <unordered_map>
#include <utility>

namespace lucassq {

namespace {

struct State {
    std::uint64_t a; // U_k mod m
    std::uint64_t b; // U_{k+1} mod m

    friend bool operator==(const State&, const State&) = default;
};

struct StateMap {
    std::uint64_t p, neg_q, m;

    State step(State s) const
    {
        unsigned __int128 t = static_cast<unsigned __int128>(p) * s.b % m;
        t += static_cast<unsigned __int128>(neg_q) * s.a % m;
        return State{s.b, static_cast<std::uint64_t>(t % m)};
    }
};

// First repeat via a visited-state table: the first state seen twice is the
// cycle entry point, so preperiod and period fall out directly.
std::pair<std::uint64_t, std::uint64_t> find_cycle_table(const StateMap& f)
{
    std::unordered_map<std::uint64_t, std::uint64_t> seen;
    State s{0, 1 % f.m};
    for (std::uint64_t k = 0;; ++k) {
        const std::uint64_t key = s.a * f.m + s.b;
        auto [it, fresh] = seen.emplace(key, k);
        if (!fresh)
            return {it->second, k - it->second};
        s = f.step(s);
    }
}

// Brent's cycle finding; no per-state storage, for large moduli.
std::pair<std::uint64_t, std::uint64_t> find_cycle_brent(const StateMap& f)
{
    const State x0{0, 1 % f.m};

    std::uint64_t power = 1, lambda = 1;
    State tortoise = x0;
    State hare = f.step(x0);
    while (!(tortoise == hare)) {
        if (power == lambda) {
            tortoise = hare;
            power *= 2;
            lambda = 0;
        }
        hare = f.step(hare);
        ++lambda;
    }

    // Advance one pointer by lambda, then walk both until they meet; the
    // meeting index is the minimal preperiod.
    hare = x0;
    for (std::uint64_t i = 0; i < lambda; ++i)
        hare = f.step(hare);
    std::uint64_t mu = 0;
    tortoise = x0;
    while (!(tortoise == hare)) {
        tortoise = f.step(tortoise);
        hare = f.step(hare);
        ++mu;
    }
    return {mu, lambda};
}

} // namespace

PeriodInfo period_mod(const LucasParams& params, std::uint64_t m)
{
    if (m < 2)
        throw domain_error("period_mod: modulus must be >= 2");
    const StateMap f{arith::mod_norm(params.p, m).value,
                     arith::mod_norm(-params.q, m).value, m};

    auto [mu, lambda] = m <= 4096 ? find_cycle_table(f) : find_cycle_brent(f);

    PeriodInfo info;
    info.modulus = m;
    info.preperiod = mu;
    info.period = lambda;
    auto residues = residues_mod(params, m, mu + lambda);
    info.prefix.assign(residues.begin(), residues.begin() + mu);
    info.cycle.assign(residues.begin() + mu, residues.end());
    return info;
}

std::vector<std::uint64_t> residues_mod(const LucasParams& params,
                                        std::uint64_t m, std::uint64_t count)
{
    if (m < 2)
        throw domain_error("residues_mod: modulus must be >= 2");
    const StateMap f{arith::mod_norm(params.p, m).value,
                     arith::mod_norm(-params.q, m).value, m};
    std::vector<std::uint64_t> out;
    out.reserve(count);
    State s{0, 1 % m};
    for (std::uint64_t k = 0; k < count; ++k) {
        out.push_back(s.a);
        s = f.step(s);
    }
    return out;
}

} // namespace lucassq
