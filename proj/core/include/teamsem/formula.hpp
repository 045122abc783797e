#ifndef TEAMSEM_FORMULA_HPP
#define TEAMSEM_FORMULA_HPP

#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace teamsem {

// Immutable formula AST in negation normal form: negation occurs on
// propositional atoms only, and the only other connectives are conjunction,
// split disjunction, the constants, and dependence atoms =(a1,..,ak;b)
// (k = 0 is the constancy atom).  Formulas are values; equality is
// structural AST equality, never semantic equivalence.
class Formula {
public:
    enum class Kind : std::uint8_t { Var, NegVar, Bot, Top, And, Or, Dep };

    static Formula var(std::string name);
    static Formula neg_var(std::string name);
    static Formula bot();
    static Formula top();
    static Formula conj(Formula lhs, Formula rhs);
    static Formula disj(Formula lhs, Formula rhs);
    // Argument lists may repeat variables and may include the target; the
    // semantics treats such atoms literally.
    static Formula dep(std::vector<std::string> args, std::string target);

    Kind kind() const noexcept { return n_->kind; }

    // Var/NegVar: the atom's variable.  Dep: the target variable.
    const std::string& name() const { return n_->name; }
    const std::vector<std::string>& dep_args() const { return n_->args; }

    const Formula& lhs() const { return *n_->lhs; }
    const Formula& rhs() const { return *n_->rhs; }

    // True iff no dependence atom occurs (the formula is plain PL).
    bool is_pl() const noexcept { return n_->pl; }

    // Number of AST nodes.
    std::uint32_t node_count() const noexcept { return n_->size; }

    // All variables occurring, including dependence-atom arguments/targets.
    std::set<std::string> variables() const;

    bool operator==(const Formula& o) const;
    bool operator!=(const Formula& o) const { return !(*this == o); }

private:
    struct Node {
        Kind kind;
        std::string name;
        std::vector<std::string> args;
        std::shared_ptr<const Formula> lhs, rhs;  // null except for And/Or
        std::uint32_t size = 1;
        bool pl = true;
    };

    Formula() = default;  // null handle, internal only
    explicit Formula(std::shared_ptr<const Node> n) : n_(std::move(n)) {}

    std::shared_ptr<const Node> n_;
};

// Canonical text form; parse(print(f), sig) == f.
std::string print(const Formula& f);

}  // namespace teamsem

#endif  // TEAMSEM_FORMULA_HPP
