#include "teamsem/team.hpp"

#include <algorithm>

#include "teamsem/error.hpp"

namespace teamsem {

namespace {

bool valid_var_name(const std::string& name) {
    if (name.empty()) return false;
    if (name == "top" || name == "bot") return false;
    if (!(name[0] >= 'a' && name[0] <= 'z')) return false;
    for (char c : name)
        if (!((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_'))
            return false;
    return true;
}

}  // namespace

Signature::Signature(std::vector<std::string> vars) : vars_(std::move(vars)) {
    if (vars_.empty()) throw InvalidArgument("signature must not be empty");
    for (const auto& v : vars_) {
        if (!valid_var_name(v))
            throw InvalidArgument("invalid variable name '" + v + "'");
    }
    auto sorted = vars_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw InvalidArgument("signature variables must be distinct");
}

std::optional<std::size_t> Signature::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return i;
    return std::nullopt;
}

Signature signature_from_csv(const std::string& csv) {
    std::vector<std::string> vars;
    std::string cur;
    for (char c : csv) {
        if (c == ',') {
            vars.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur.push_back(c);
        }
    }
    vars.push_back(cur);
    return Signature(std::move(vars));
}

Team::Team(std::vector<Valuation> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

Team Team::from_mask(const Signature& sig, std::uint64_t mask) {
    if (sig.size() > 6) throw CapacityError("team masks support at most 6 variables");
    std::vector<Valuation> members;
    for (std::uint64_t v = 0; v < (1ull << sig.size()); ++v)
        if ((mask >> v) & 1) members.push_back(Valuation{v});
    return Team(std::move(members));
}

bool Team::contains(const Valuation& v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
}

std::uint64_t Team::to_mask(const Signature& sig) const {
    if (sig.size() > 6) throw CapacityError("team masks support at most 6 variables");
    std::uint64_t mask = 0;
    for (const auto& v : members_) {
        if (v.bits >= (1ull << sig.size()))
            throw InvalidArgument("valuation outside the signature's space");
        mask |= 1ull << v.bits;
    }
    return mask;
}

}  // namespace teamsem
