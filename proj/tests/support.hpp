#ifndef TEAMSEM_TESTS_SUPPORT_HPP
#define TEAMSEM_TESTS_SUPPORT_HPP

#include <string>
#include <vector>

#include "teamsem/classes.hpp"
#include "teamsem/parse.hpp"
#include "teamsem/rng.hpp"
#include "teamsem/semantics.hpp"

namespace support {

using namespace teamsem;

inline Signature sig1() { return Signature({"p"}); }
inline Signature sig2() { return Signature({"p", "q"}); }
inline Signature sig3() { return Signature({"p", "q", "r"}); }

inline Team team_of(std::initializer_list<std::uint64_t> bits) {
    std::vector<Valuation> vs;
    for (auto b : bits) vs.push_back(Valuation{b});
    return Team(std::move(vs));
}

// ---------------------------------------------------------------------------
// Independent satisfaction oracle.  Plods through the definition literally:
// disjunction enumerates every pair of subteams whose union is the team, with
// no complement shortcut, no memoization and no bitset machinery, so it
// shares nothing with the library's evaluation path.
// ---------------------------------------------------------------------------

inline std::vector<Valuation> subteam(const std::vector<Valuation>& xs,
                                      std::uint64_t mask) {
    std::vector<Valuation> out;
    for (std::size_t i = 0; i < xs.size(); ++i)
        if ((mask >> i) & 1) out.push_back(xs[i]);
    return out;
}

inline bool oracle_eval(const Signature& sig, const std::vector<Valuation>& team,
                        const Formula& f) {
    switch (f.kind()) {
        case Formula::Kind::Top:
            return true;
        case Formula::Kind::Bot:
            return team.empty();
        case Formula::Kind::Var: {
            std::size_t i = *sig.index_of(f.name());
            for (const auto& v : team)
                if (!v.value(i)) return false;
            return true;
        }
        case Formula::Kind::NegVar: {
            std::size_t i = *sig.index_of(f.name());
            for (const auto& v : team)
                if (v.value(i)) return false;
            return true;
        }
        case Formula::Kind::Dep: {
            for (const auto& v : team) {
                for (const auto& w : team) {
                    bool agree_args = true;
                    for (const auto& a : f.dep_args())
                        if (v.value(*sig.index_of(a)) != w.value(*sig.index_of(a)))
                            agree_args = false;
                    if (agree_args &&
                        v.value(*sig.index_of(f.name())) != w.value(*sig.index_of(f.name())))
                        return false;
                }
            }
            return true;
        }
        case Formula::Kind::And:
            return oracle_eval(sig, team, f.lhs()) && oracle_eval(sig, team, f.rhs());
        case Formula::Kind::Or: {
            std::uint64_t all = (std::uint64_t{1} << team.size()) - 1;
            for (std::uint64_t y = 0; y <= all; ++y)
                for (std::uint64_t z = 0; z <= all; ++z)
                    if ((y | z) == all && oracle_eval(sig, subteam(team, y), f.lhs()) &&
                        oracle_eval(sig, subteam(team, z), f.rhs()))
                        return true;
            return false;
        }
    }
    return false;
}

inline bool oracle_eval(const Signature& sig, const Team& team, const Formula& f) {
    return oracle_eval(sig, team.members(), f);
}

// Per-team oracle rendering of the full extension.
inline DynBitset oracle_models(const Signature& sig, const Formula& f) {
    std::size_t teams = std::size_t{1} << (std::size_t{1} << sig.size());
    DynBitset bits(teams);
    for (std::size_t t = 0; t < teams; ++t)
        if (oracle_eval(sig, Team::from_mask(sig, t), f)) bits.set(t);
    return bits;
}

// ---------------------------------------------------------------------------
// Random structures.
// ---------------------------------------------------------------------------

inline Formula random_formula(Rng& rng, const Signature& sig, std::uint32_t budget,
                              bool allow_dep) {
    auto leaf = [&]() -> Formula {
        switch (rng.below(allow_dep ? 5 : 4)) {
            case 0:
                return Formula::var(sig.var(rng.below(sig.size())));
            case 1:
                return Formula::neg_var(sig.var(rng.below(sig.size())));
            case 2:
                return Formula::top();
            case 3:
                return Formula::bot();
            default: {
                std::vector<std::string> args;
                for (std::size_t i = 0; i < sig.size(); ++i)
                    if (rng.bernoulli(0.5)) args.push_back(sig.var(i));
                return Formula::dep(std::move(args), sig.var(rng.below(sig.size())));
            }
        }
    };
    if (budget < 3 || rng.bernoulli(0.25)) return leaf();
    std::uint32_t left = 1 + static_cast<std::uint32_t>(rng.below(budget - 2));
    Formula l = random_formula(rng, sig, left, allow_dep);
    Formula r = random_formula(rng, sig, budget - 1 - left, allow_dep);
    return rng.bernoulli(0.5) ? Formula::conj(std::move(l), std::move(r))
                              : Formula::disj(std::move(l), std::move(r));
}

inline Team random_team(Rng& rng, const Signature& sig, double density = 0.5) {
    std::vector<Valuation> vs;
    for (std::uint64_t v = 0; v < (1ull << sig.size()); ++v)
        if (rng.bernoulli(density)) vs.push_back(Valuation{v});
    return Team(std::move(vs));
}

// ---------------------------------------------------------------------------
// Worklist closure oracle: the same Horn rules, executed pair-at-a-time on a
// plain set of pairs rather than on bitset rows.
// ---------------------------------------------------------------------------

inline std::vector<std::pair<std::size_t, std::size_t>> naive_close(
    const std::vector<std::pair<std::size_t, std::size_t>>& seeds,
    const ClassIndex& classes) {
    std::size_t c = classes.size();
    std::vector<std::vector<bool>> in(c, std::vector<bool>(c, false));
    for (std::size_t a = 0; a < c; ++a) in[a][a] = true;
    for (auto [a, b] : seeds) in[a][b] = true;
    bool changed = true;
    while (changed) {
        changed = false;
        auto add = [&](std::size_t a, std::size_t b) {
            if (!in[a][b]) {
                in[a][b] = true;
                changed = true;
            }
        };
        for (std::size_t a = 0; a < c; ++a)
            for (std::size_t b = 0; b < c; ++b) {
                if (!in[a][b]) continue;
                for (std::size_t d = 0; d < c; ++d) {
                    if (classes.family(b).is_subset_of(classes.family(d))) add(a, d);
                    if (in[classes.meet(a, b)][d]) add(a, d);        // Cut
                    if (in[a][d]) add(classes.meet(a, b), d);        // CM
                }
            }
    }
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t a = 0; a < c; ++a)
        for (std::size_t b = 0; b < c; ++b)
            if (in[a][b]) out.emplace_back(a, b);
    return out;
}

}  // namespace support

#endif  // TEAMSEM_TESTS_SUPPORT_HPP
