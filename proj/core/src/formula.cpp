#include "teamsem/formula.hpp"

#include <sstream>

namespace teamsem {

Formula Formula::var(std::string name) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Var;
    n->name = std::move(name);
    return Formula(std::move(n));
}

Formula Formula::neg_var(std::string name) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::NegVar;
    n->name = std::move(name);
    return Formula(std::move(n));
}

Formula Formula::bot() {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Bot;
    return Formula(std::move(n));
}

Formula Formula::top() {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Top;
    return Formula(std::move(n));
}

Formula Formula::conj(Formula lhs, Formula rhs) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::And;
    n->size = 1 + lhs.node_count() + rhs.node_count();
    n->pl = lhs.is_pl() && rhs.is_pl();
    n->lhs = std::make_shared<const Formula>(std::move(lhs));
    n->rhs = std::make_shared<const Formula>(std::move(rhs));
    return Formula(std::move(n));
}

Formula Formula::disj(Formula lhs, Formula rhs) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Or;
    n->size = 1 + lhs.node_count() + rhs.node_count();
    n->pl = lhs.is_pl() && rhs.is_pl();
    n->lhs = std::make_shared<const Formula>(std::move(lhs));
    n->rhs = std::make_shared<const Formula>(std::move(rhs));
    return Formula(std::move(n));
}

Formula Formula::dep(std::vector<std::string> args, std::string target) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Dep;
    n->args = std::move(args);
    n->name = std::move(target);
    n->pl = false;
    return Formula(std::move(n));
}

namespace {

void collect_variables(const Formula& f, std::set<std::string>& out) {
    switch (f.kind()) {
        case Formula::Kind::Var:
        case Formula::Kind::NegVar:
            out.insert(f.name());
            break;
        case Formula::Kind::Dep:
            for (const auto& a : f.dep_args()) out.insert(a);
            out.insert(f.name());
            break;
        case Formula::Kind::And:
        case Formula::Kind::Or:
            collect_variables(f.lhs(), out);
            collect_variables(f.rhs(), out);
            break;
        default:
            break;
    }
}

}  // namespace

std::set<std::string> Formula::variables() const {
    std::set<std::string> out;
    collect_variables(*this, out);
    return out;
}

bool Formula::operator==(const Formula& o) const {
    if (n_ == o.n_) return true;
    if (!n_ || !o.n_) return false;
    if (n_->kind != o.n_->kind || n_->size != o.n_->size) return false;
    switch (n_->kind) {
        case Kind::Var:
        case Kind::NegVar:
            return n_->name == o.n_->name;
        case Kind::Dep:
            return n_->name == o.n_->name && n_->args == o.n_->args;
        case Kind::And:
        case Kind::Or:
            return *n_->lhs == *o.n_->lhs && *n_->rhs == *o.n_->rhs;
        default:
            return true;
    }
}

namespace {

// Precedence: disjunction 1, conjunction 2, units 3.  A child is wrapped
// when its precedence is lower, or equal on the right (the grammar is
// left-associative, so And(a, And(b, c)) must print as "a & (b & c)").
int precedence(Formula::Kind k) {
    switch (k) {
        case Formula::Kind::Or: return 1;
        case Formula::Kind::And: return 2;
        default: return 3;
    }
}

void print_into(const Formula& f, std::ostringstream& out) {
    switch (f.kind()) {
        case Formula::Kind::Var:
            out << f.name();
            break;
        case Formula::Kind::NegVar:
            out << '!' << f.name();
            break;
        case Formula::Kind::Bot:
            out << "bot";
            break;
        case Formula::Kind::Top:
            out << "top";
            break;
        case Formula::Kind::Dep: {
            out << "=(";
            bool first = true;
            for (const auto& a : f.dep_args()) {
                if (!first) out << ',';
                out << a;
                first = false;
            }
            out << ';' << f.name() << ')';
            break;
        }
        case Formula::Kind::And:
        case Formula::Kind::Or: {
            int prec = precedence(f.kind());
            bool wrap_l = precedence(f.lhs().kind()) < prec;
            bool wrap_r = precedence(f.rhs().kind()) <= prec;
            if (wrap_l) out << '(';
            print_into(f.lhs(), out);
            if (wrap_l) out << ')';
            out << (f.kind() == Formula::Kind::And ? " & " : " | ");
            if (wrap_r) out << '(';
            print_into(f.rhs(), out);
            if (wrap_r) out << ')';
            break;
        }
    }
}

}  // namespace

std::string print(const Formula& f) {
    std::ostringstream out;
    print_into(f, out);
    return out.str();
}

}  // namespace teamsem
