#ifndef TEAMSEM_SIGNATURE_HPP
#define TEAMSEM_SIGNATURE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "teamsem/error.hpp"

namespace teamsem {

// An ordered, finite, nonempty set of variable names.  The order is
// semantic: variable i contributes bit i to the canonical valuation index,
// which in turn fixes team and family numbering everywhere else.
class Signature {
public:
    // Names must be distinct and match [a-z][a-z0-9_]*.  "top" and "bot" are
    // reserved words of the formula grammar and are rejected.
    explicit Signature(std::vector<std::string> vars);

    std::size_t size() const noexcept { return vars_.size(); }
    const std::string& var(std::size_t i) const { return vars_[i]; }
    const std::vector<std::string>& vars() const noexcept { return vars_; }

    std::optional<std::size_t> index_of(const std::string& name) const;
    bool contains(const std::string& name) const { return index_of(name).has_value(); }

    bool operator==(const Signature& o) const = default;

private:
    std::vector<std::string> vars_;
};

// Parses a comma-separated variable list ("p,q,r").
Signature signature_from_csv(const std::string& csv);

}  // namespace teamsem

#endif  // TEAMSEM_SIGNATURE_HPP
