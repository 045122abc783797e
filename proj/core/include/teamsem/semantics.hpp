#ifndef TEAMSEM_SEMANTICS_HPP
#define TEAMSEM_SEMANTICS_HPP

#include <cstddef>
#include <optional>

#include "teamsem/bitset.hpp"
#include "teamsem/formula.hpp"
#include "teamsem/logic.hpp"
#include "teamsem/signature.hpp"
#include "teamsem/team.hpp"

namespace teamsem {

// Capacity guards.  Team enumeration walks all 2^(2^|N|) teams, family
// enumeration all 2^(2^|N|) bits per family; these bounds keep both at desk
// scale and cover everything the verifiers need.
inline constexpr std::size_t kMaxEnumVars = 4;   // models_of / check_property
inline constexpr std::size_t kMaxClassVars = 2;  // class-index exhaustion
inline constexpr std::size_t kMaxTeamEvalMembers = 16;  // eval_team splits

// Number of interpretations of the logic over n variables: valuations for
// CPL, teams for TPL/PDL.
std::size_t interpretation_count(Logic logic, std::size_t nvars);

// The extension of a formula as a set of interpretations, plus the two
// property flags every PDL class is expected to carry.  For CPL the bits
// index valuations and the team-property flags are not meaningful.
struct TeamFamily {
    Signature sig;
    Logic logic;
    DynBitset bits;  // size == interpretation_count(logic, sig.size())
    bool downward_closed = false;
    bool contains_empty_team = false;

    TeamFamily(Signature s, Logic l, DynBitset b);

    bool contains(const Team& team) const;
    std::vector<Team> teams() const;  // ascending team-mask order
};

// Classical truth-table evaluation.  Dependence atoms are rejected.
bool eval_classical(const Signature& sig, const Valuation& v, const Formula& f);

// Team satisfaction.  Disjunction splits the team into a union of two
// satisfying subteams; since every formula of the language is downward
// closed, it suffices to try each subteam against the complement.
// logic must be TPL (PL formulas only) or PDL.
bool eval_team(const Signature& sig, const Team& team, const Formula& f, Logic logic);

// The full extension over sig: all teams for TPL/PDL, all valuations for
// CPL.  Throws CapacityError beyond kMaxEnumVars.
TeamFamily models_of(const Formula& f, const Signature& sig, Logic logic);

enum class TeamProperty { Flatness, EmptyTeam, DownwardClosure };

struct PropertyCheck {
    bool holds = false;
    std::optional<Team> witness;          // first counterexample team
    std::optional<Team> witness_subteam;  // downward closure only
};

// Exhaustively checks the quantified property definition over every team of
// sig; the witness is the first counterexample in canonical team order.
PropertyCheck check_property(const Formula& f, const Signature& sig, Logic logic,
                             TeamProperty which);

}  // namespace teamsem

#endif  // TEAMSEM_SEMANTICS_HPP
