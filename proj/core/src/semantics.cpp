#include "teamsem/semantics.hpp"

#include <algorithm>
#include <unordered_map>

#include "teamsem/error.hpp"

namespace teamsem {

std::size_t interpretation_count(Logic logic, std::size_t nvars) {
    if (nvars == 0) throw InvalidArgument("signature must not be empty");
    if (nvars > kMaxEnumVars)
        throw CapacityError("interpretation enumeration supports at most " +
                            std::to_string(kMaxEnumVars) + " variables");
    std::size_t valuations = std::size_t{1} << nvars;
    return is_team_logic(logic) ? (std::size_t{1} << valuations) : valuations;
}

TeamFamily::TeamFamily(Signature s, Logic l, DynBitset b)
    : sig(std::move(s)), logic(l), bits(std::move(b)) {
    if (bits.size() != interpretation_count(logic, sig.size()))
        throw InvalidArgument("family bit width does not match the signature");
    if (is_team_logic(logic)) {
        contains_empty_team = bits.test(0);
        downward_closed = true;
        std::size_t valuations = std::size_t{1} << sig.size();
        for (std::size_t t = bits.find_first(); t < bits.size() && downward_closed;
             t = bits.find_next(t + 1)) {
            for (std::size_t v = 0; v < valuations; ++v) {
                if ((t >> v) & 1 && !bits.test(t & ~(std::size_t{1} << v))) {
                    downward_closed = false;
                    break;
                }
            }
        }
    } else {
        downward_closed = true;
        contains_empty_team = false;
    }
}

bool TeamFamily::contains(const Team& team) const {
    if (!is_team_logic(logic))
        throw InvalidArgument("CPL families index valuations, not teams");
    return bits.test(team.to_mask(sig));
}

std::vector<Team> TeamFamily::teams() const {
    if (!is_team_logic(logic))
        throw InvalidArgument("CPL families index valuations, not teams");
    std::vector<Team> out;
    for (std::size_t t = bits.find_first(); t < bits.size(); t = bits.find_next(t + 1))
        out.push_back(Team::from_mask(sig, t));
    return out;
}

namespace {

// Flattened AST in postorder with variables resolved against the signature.
struct FlatNode {
    Formula::Kind kind;
    std::size_t var = 0;                // Var/NegVar
    std::vector<std::size_t> dep_args;  // Dep
    std::size_t dep_target = 0;         // Dep
    int lhs = -1, rhs = -1;
};

std::size_t resolve(const Signature& sig, const std::string& name) {
    auto idx = sig.index_of(name);
    if (!idx)
        throw InvalidArgument("formula variable '" + name +
                              "' is not in the signature");
    return *idx;
}

int flatten(const Formula& f, const Signature& sig, std::vector<FlatNode>& out) {
    FlatNode node;
    node.kind = f.kind();
    switch (f.kind()) {
        case Formula::Kind::Var:
        case Formula::Kind::NegVar:
            node.var = resolve(sig, f.name());
            break;
        case Formula::Kind::Dep:
            // Repeated arguments carry no extra constraint; dropping them
            // keeps the projection word below one bit per variable.
            for (const auto& a : f.dep_args()) node.dep_args.push_back(resolve(sig, a));
            std::sort(node.dep_args.begin(), node.dep_args.end());
            node.dep_args.erase(std::unique(node.dep_args.begin(), node.dep_args.end()),
                                node.dep_args.end());
            node.dep_target = resolve(sig, f.name());
            break;
        case Formula::Kind::And:
        case Formula::Kind::Or:
            node.lhs = flatten(f.lhs(), sig, out);
            node.rhs = flatten(f.rhs(), sig, out);
            break;
        default:
            break;
    }
    out.push_back(std::move(node));
    return static_cast<int>(out.size()) - 1;
}

// Satisfaction of every subset of `members`, per subformula, bottom-up.
// Subset masks index into `members`; the answer for a team is the root
// node's entry at the full mask.  Disjunction tries each subset against its
// complement, which is exact here because every formula of the language is
// downward closed.
std::vector<std::vector<char>> team_tables(const std::vector<FlatNode>& nodes,
                                           const std::vector<Valuation>& members) {
    std::size_t n = members.size();
    std::size_t masks = std::size_t{1} << n;
    std::vector<std::vector<char>> tables(nodes.size());

    for (std::size_t ni = 0; ni < nodes.size(); ++ni) {
        const FlatNode& node = nodes[ni];
        std::vector<char>& table = tables[ni];
        table.assign(masks, 0);
        switch (node.kind) {
            case Formula::Kind::Top:
                std::fill(table.begin(), table.end(), 1);
                break;
            case Formula::Kind::Bot:
                table[0] = 1;
                break;
            case Formula::Kind::Var:
            case Formula::Kind::NegVar: {
                bool want = node.kind == Formula::Kind::Var;
                std::size_t ok = 0;
                for (std::size_t j = 0; j < n; ++j)
                    if (members[j].value(node.var) == want) ok |= std::size_t{1} << j;
                for (std::size_t m = 0; m < masks; ++m) table[m] = (m & ~ok) == 0;
                break;
            }
            case Formula::Kind::Dep: {
                // Group members by their argument projection; inside one
                // group the target must not take both values.
                std::unordered_map<std::uint64_t, std::pair<std::size_t, std::size_t>> groups;
                for (std::size_t j = 0; j < n; ++j) {
                    std::uint64_t proj = 0;
                    for (std::size_t ai = 0; ai < node.dep_args.size(); ++ai)
                        proj |= std::uint64_t{members[j].value(node.dep_args[ai])} << ai;
                    auto& g = groups[proj];
                    (members[j].value(node.dep_target) ? g.second : g.first) |=
                        std::size_t{1} << j;
                }
                for (std::size_t m = 0; m < masks; ++m) {
                    bool ok = true;
                    for (const auto& [proj, g] : groups) {
                        (void)proj;
                        if ((m & g.first) && (m & g.second)) {
                            ok = false;
                            break;
                        }
                    }
                    table[m] = ok;
                }
                break;
            }
            case Formula::Kind::And: {
                const auto& l = tables[node.lhs];
                const auto& r = tables[node.rhs];
                for (std::size_t m = 0; m < masks; ++m) table[m] = l[m] && r[m];
                break;
            }
            case Formula::Kind::Or: {
                const auto& l = tables[node.lhs];
                const auto& r = tables[node.rhs];
                for (std::size_t m = 0; m < masks; ++m) {
                    char ok = 0;
                    std::size_t y = 0;
                    while (true) {  // submasks of m, ascending
                        if (l[y] && r[m & ~y]) {
                            ok = 1;
                            break;
                        }
                        if (y == m) break;
                        y = (y - m) & m;
                    }
                    table[m] = ok;
                }
                break;
            }
        }
    }
    return tables;
}

std::vector<Valuation> full_valuation_space(const Signature& sig) {
    std::vector<Valuation> all;
    all.reserve(std::size_t{1} << sig.size());
    for (std::uint64_t v = 0; v < (1ull << sig.size()); ++v) all.push_back(Valuation{v});
    return all;
}

void check_team_logic(const Formula& f, Logic logic) {
    if (!is_team_logic(logic))
        throw InvalidArgument("expected a team logic (TPL or PDL)");
    if (logic == Logic::TPL && !f.is_pl())
        throw InvalidArgument("TPL does not admit dependence atoms");
}

}  // namespace

bool eval_classical(const Signature& sig, const Valuation& v, const Formula& f) {
    switch (f.kind()) {
        case Formula::Kind::Var:
            return v.value(resolve(sig, f.name()));
        case Formula::Kind::NegVar:
            return !v.value(resolve(sig, f.name()));
        case Formula::Kind::Bot:
            return false;
        case Formula::Kind::Top:
            return true;
        case Formula::Kind::And:
            return eval_classical(sig, v, f.lhs()) && eval_classical(sig, v, f.rhs());
        case Formula::Kind::Or:
            return eval_classical(sig, v, f.lhs()) || eval_classical(sig, v, f.rhs());
        default:
            throw InvalidArgument(
                "dependence atoms are not supported by classical evaluation");
    }
}

bool eval_team(const Signature& sig, const Team& team, const Formula& f, Logic logic) {
    check_team_logic(f, logic);
    if (team.size() > kMaxTeamEvalMembers)
        throw CapacityError("team evaluation supports at most " +
                            std::to_string(kMaxTeamEvalMembers) + " members");
    if (sig.size() < 64)
        for (const auto& v : team.members())
            if (v.bits >= (1ull << sig.size()))
                throw InvalidArgument("team member lies outside the signature's space");

    std::vector<FlatNode> nodes;
    flatten(f, sig, nodes);
    auto tables = team_tables(nodes, team.members());
    std::size_t full = (std::size_t{1} << team.size()) - 1;
    return tables.back()[full] != 0;
}

TeamFamily models_of(const Formula& f, const Signature& sig, Logic logic) {
    std::size_t total = interpretation_count(logic, sig.size());
    if (logic == Logic::CPL) {
        if (!f.is_pl())
            throw InvalidArgument("CPL does not admit dependence atoms");
        DynBitset bits(total);
        for (std::uint64_t v = 0; v < total; ++v)
            if (eval_classical(sig, Valuation{v}, f)) bits.set(v);
        return TeamFamily(sig, logic, std::move(bits));
    }
    check_team_logic(f, logic);
    std::vector<FlatNode> nodes;
    flatten(f, sig, nodes);
    auto tables = team_tables(nodes, full_valuation_space(sig));
    DynBitset bits(total);
    const auto& root = tables.back();
    for (std::size_t t = 0; t < total; ++t)
        if (root[t]) bits.set(t);
    return TeamFamily(sig, logic, std::move(bits));
}

PropertyCheck check_property(const Formula& f, const Signature& sig, Logic logic,
                             TeamProperty which) {
    check_team_logic(f, logic);
    TeamFamily extension = models_of(f, sig, logic);
    const DynBitset& bits = extension.bits;
    std::size_t total = bits.size();

    PropertyCheck result;
    switch (which) {
        case TeamProperty::Flatness: {
            std::size_t singleton_ok = 0;
            for (std::size_t v = 0; v < (std::size_t{1} << sig.size()); ++v)
                if (bits.test(std::size_t{1} << v)) singleton_ok |= std::size_t{1} << v;
            for (std::size_t t = 0; t < total; ++t) {
                bool flat = (t & ~singleton_ok) == 0;
                if (bits.test(t) != flat) {
                    result.witness = Team::from_mask(sig, t);
                    return result;
                }
            }
            result.holds = true;
            return result;
        }
        case TeamProperty::EmptyTeam: {
            if (!bits.test(0)) {
                result.witness = Team::empty();
                return result;
            }
            result.holds = true;
            return result;
        }
        case TeamProperty::DownwardClosure: {
            for (std::size_t t = 0; t < total; ++t) {
                if (!bits.test(t)) continue;
                std::size_t y = 0;
                while (true) {  // proper submasks of t, ascending
                    if (y != t && !bits.test(y)) {
                        result.witness = Team::from_mask(sig, t);
                        result.witness_subteam = Team::from_mask(sig, y);
                        return result;
                    }
                    if (y == t) break;
                    y = (y - t) & t;
                }
            }
            result.holds = true;
            return result;
        }
    }
    throw InvalidArgument("unknown team property");
}

}  // namespace teamsem
