#ifndef TEAMSEM_LOGIC_HPP
#define TEAMSEM_LOGIC_HPP

#include <string>

#include "teamsem/error.hpp"

namespace teamsem {

// The three logics handled by this library.  CPL interprets formulas over
// single valuations, TPL over teams (PL formulas only), PDL over teams with
// dependence atoms.
enum class Logic : unsigned char { CPL, TPL, PDL };

inline bool is_team_logic(Logic l) noexcept { return l != Logic::CPL; }

inline const char* to_string(Logic l) noexcept {
    switch (l) {
        case Logic::CPL: return "CPL";
        case Logic::TPL: return "TPL";
        default: return "PDL";
    }
}

inline Logic logic_from_string(const std::string& s) {
    if (s == "cpl" || s == "CPL") return Logic::CPL;
    if (s == "tpl" || s == "TPL") return Logic::TPL;
    if (s == "pdl" || s == "PDL") return Logic::PDL;
    throw InvalidArgument("unknown logic: " + s);
}

}  // namespace teamsem

#endif  // TEAMSEM_LOGIC_HPP
