#ifndef TEAMSEM_TEAM_HPP
#define TEAMSEM_TEAM_HPP

#include <cstdint>
#include <vector>

#include "teamsem/signature.hpp"

namespace teamsem {

// A total {0,1}-assignment over a signature, packed into bits: bit i is the
// value of sig.var(i).  The packed word is also the valuation's canonical
// index in [0, 2^|N|).
struct Valuation {
    std::uint64_t bits = 0;

    bool value(std::size_t var_index) const { return (bits >> var_index) & 1; }
    bool operator==(const Valuation&) const = default;
    auto operator<=>(const Valuation&) const = default;
};

// A set of valuations over one signature.  Members are kept sorted and
// deduplicated, so teams given with repeated rows collapse to the same
// value.
class Team {
public:
    Team() = default;
    explicit Team(std::vector<Valuation> members);

    static Team empty() { return Team(); }

    // Unpacks a team mask over the full valuation space (bit v of `mask`
    // set iff valuation v is a member).  Requires sig.size() <= 6 so the
    // mask fits one word; enumeration contexts stay far below that.
    static Team from_mask(const Signature& sig, std::uint64_t mask);

    std::size_t size() const noexcept { return members_.size(); }
    bool is_empty() const noexcept { return members_.empty(); }
    const std::vector<Valuation>& members() const noexcept { return members_; }

    bool contains(const Valuation& v) const;

    // Packs back into a valuation-space mask (requires sig.size() <= 6).
    std::uint64_t to_mask(const Signature& sig) const;

    bool operator==(const Team&) const = default;

private:
    std::vector<Valuation> members_;  // sorted, unique
};

}  // namespace teamsem

#endif  // TEAMSEM_TEAM_HPP
