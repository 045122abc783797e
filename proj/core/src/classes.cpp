#include "teamsem/classes.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

#include "teamsem/error.hpp"

namespace teamsem {

namespace {

void check_class_capacity(const Signature& sig) {
    if (sig.size() > kMaxClassVars)
        throw CapacityError("class enumeration supports at most " +
                            std::to_string(kMaxClassVars) + " variables");
}

}  // namespace

ClassIndex ClassIndex::enumerate(const Signature& sig, Logic logic) {
    check_class_capacity(sig);
    std::size_t valuations = std::size_t{1} << sig.size();
    std::size_t space = interpretation_count(logic, sig.size());

    std::vector<std::uint64_t> masks;
    switch (logic) {
        case Logic::CPL:
            for (std::uint64_t m = 0; m < (1ull << space); ++m) masks.push_back(m);
            break;
        case Logic::TPL:
            // One powerset class per valuation set V: the teams inside V.
            for (std::uint64_t v = 0; v < (1ull << valuations); ++v) {
                std::uint64_t fam = 0;
                for (std::uint64_t t = 0; t < space; ++t)
                    if ((t & ~v) == 0) fam |= 1ull << t;
                masks.push_back(fam);
            }
            break;
        case Logic::PDL: {
            // Every nonempty downward-closed family is a union of principal
            // ideals; generate them all from the ideal masks.  (The test
            // suite cross-checks the count against a direct filter of the
            // whole family space.)
            std::vector<std::uint64_t> ideal(space);
            for (std::uint64_t t = 0; t < space; ++t) {
                std::uint64_t down = 0;
                std::uint64_t y = 0;
                while (true) {
                    down |= 1ull << y;
                    if (y == t) break;
                    y = (y - t) & t;
                }
                ideal[t] = down;
            }
            std::unordered_set<std::uint64_t> seen;
            for (std::uint64_t s = 1; s < (1ull << space); ++s) {
                std::uint64_t fam = 0;
                for (std::uint64_t t = 0; t < space; ++t)
                    if ((s >> t) & 1) fam |= ideal[t];
                seen.insert(fam);
            }
            masks.assign(seen.begin(), seen.end());
            break;
        }
    }
    std::sort(masks.begin(), masks.end());
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());

    ClassIndex idx;
    idx.sig_ = sig;
    idx.logic_ = logic;
    idx.families_.reserve(masks.size());
    for (std::uint64_t m : masks) idx.families_.push_back(DynBitset::from_value(space, m));
    for (std::size_t i = 0; i < idx.families_.size(); ++i)
        idx.position_.emplace(idx.families_[i], i);

    std::size_t c = idx.families_.size();
    idx.meet_.resize(c * c);
    for (std::size_t i = 0; i < c; ++i) {
        for (std::size_t j = 0; j < c; ++j) {
            auto it = idx.position_.find(idx.families_[i] & idx.families_[j]);
            if (it == idx.position_.end())
                throw Error("class index is not intersection-closed");
            idx.meet_[i * c + j] = it->second;
        }
    }
    idx.supersets_.assign(c, DynBitset(c));
    for (std::size_t i = 0; i < c; ++i)
        for (std::size_t j = 0; j < c; ++j)
            if (idx.families_[i].is_subset_of(idx.families_[j])) idx.supersets_[i].set(j);
    return idx;
}

std::optional<std::size_t> ClassIndex::index_of(const DynBitset& family) const {
    auto it = position_.find(family);
    if (it == position_.end()) return std::nullopt;
    return it->second;
}

DynBitset ClassIndex::disjunction_family(const DynBitset& a, const DynBitset& b) const {
    if (logic_ == Logic::CPL) return a | b;
    DynBitset out(a.size());
    for (std::size_t t1 = a.find_first(); t1 < a.size(); t1 = a.find_next(t1 + 1))
        for (std::size_t t2 = b.find_first(); t2 < b.size(); t2 = b.find_next(t2 + 1))
            out.set(t1 | t2);
    return out;
}

std::size_t ClassIndex::disjunction(std::size_t i, std::size_t j) const {
    auto idx = index_of(disjunction_family(families_[i], families_[j]));
    if (!idx) throw Error("disjunction class missing from the index");
    return *idx;
}

std::shared_ptr<const ClassIndex> enumerate_classes(const Signature& sig, Logic logic) {
    return std::make_shared<const ClassIndex>(ClassIndex::enumerate(sig, logic));
}

DynBitset th(const DynBitset& interpretations, const ClassIndex& classes) {
    DynBitset out(classes.size());
    for (std::size_t i = 0; i < classes.size(); ++i)
        if (interpretations.is_subset_of(classes.family(i))) out.set(i);
    return out;
}

DynBitset th(const std::vector<DynBitset>& families, const ClassIndex& classes) {
    DynBitset u(interpretation_count(classes.logic(), classes.sig().size()));
    for (const auto& f : families) u |= f;
    return th(u, classes);
}

DynBitset cn(const DynBitset& class_set, const ClassIndex& classes) {
    DynBitset meet =
        DynBitset::all_set(interpretation_count(classes.logic(), classes.sig().size()));
    for (std::size_t i = class_set.find_first(); i < class_set.size();
         i = class_set.find_next(i + 1))
        meet &= classes.family(i);
    return th(meet, classes);
}

namespace {

// Conjunction of literals pinning one valuation, in signature order.
Formula describing_conjunction(const Signature& sig, const Valuation& v) {
    Formula f = v.value(0) ? Formula::var(sig.var(0)) : Formula::neg_var(sig.var(0));
    for (std::size_t i = 1; i < sig.size(); ++i) {
        Formula lit = v.value(i) ? Formula::var(sig.var(i)) : Formula::neg_var(sig.var(i));
        f = Formula::conj(std::move(f), std::move(lit));
    }
    return f;
}

// Split disjunction of the members' describing conjunctions: over teams this
// defines the principal ideal of `mask`, over valuations its subsets.  The
// empty disjunction is ⊥.
Formula ideal_formula(const Signature& sig, std::uint64_t mask) {
    std::optional<Formula> f;
    for (std::uint64_t v = 0; v < (1ull << sig.size()); ++v) {
        if (!((mask >> v) & 1)) continue;
        Formula d = describing_conjunction(sig, Valuation{v});
        f = f ? Formula::disj(std::move(*f), std::move(d)) : std::move(d);
    }
    return f ? *f : Formula::bot();
}

struct Candidate {
    std::uint32_t size;
    Formula formula;

    Candidate(Formula f) : size(f.node_count()), formula(std::move(f)) {}
    // Strictly smaller replaces; ties keep the earlier candidate, and the
    // seed/combination order is fixed, so the pick is deterministic.
    bool better_than(const Candidate& o) const { return size < o.size; }
};

}  // namespace

SynthesisTable::SynthesisTable(const ClassIndex& classes, std::uint64_t budget)
    : classes_(&classes), formulas_(classes.size()) {
    const Signature& sig = classes.sig();
    Logic logic = classes.logic();

    std::map<std::size_t, Candidate> best;  // class index -> best formula so far
    auto consider = [&](const DynBitset& family, Formula f) {
        ++generated_;
        if (generated_ > budget)
            throw BudgetExhausted("synthesis budget exhausted", generated_);
        auto idx = classes_->index_of(family);
        if (!idx) return;  // not definable in this logic (cannot happen for meets)
        Candidate cand(std::move(f));
        auto it = best.find(*idx);
        if (it == best.end())
            best.emplace(*idx, std::move(cand));
        else if (cand.better_than(it->second))
            it->second = std::move(cand);
    };

    consider(models_of(Formula::bot(), sig, logic).bits, Formula::bot());
    consider(models_of(Formula::top(), sig, logic).bits, Formula::top());
    for (const auto& name : sig.vars()) {
        consider(models_of(Formula::var(name), sig, logic).bits, Formula::var(name));
        consider(models_of(Formula::neg_var(name), sig, logic).bits,
                 Formula::neg_var(name));
    }
    if (logic == Logic::PDL) {
        // All dependence atoms with duplicate-free argument sets.
        std::size_t n = sig.size();
        for (std::uint64_t amask = 0; amask < (1ull << n); ++amask) {
            std::vector<std::string> args;
            for (std::size_t i = 0; i < n; ++i)
                if ((amask >> i) & 1) args.push_back(sig.var(i));
            for (std::size_t b = 0; b < n; ++b) {
                Formula atom = Formula::dep(args, sig.var(b));
                consider(models_of(atom, sig, logic).bits, atom);
            }
        }
    }
    // Principal ideals (team logics) / one DNF per valuation set (CPL).
    for (std::uint64_t mask = 1; mask < (1ull << (1ull << sig.size())); ++mask) {
        Formula f = ideal_formula(sig, mask);
        consider(models_of(f, sig, logic).bits, f);
    }

    // Breadth-first closure under conjunction and split disjunction in
    // class space.
    std::vector<std::size_t> known;
    for (const auto& [idx, cand] : best) {
        known.push_back(idx);
        formulas_[idx] = cand.formula;
    }
    while (true) {
        std::map<std::size_t, Candidate> fresh;
        for (std::size_t a : known) {
            for (std::size_t b : known) {
                if (b < a) continue;
                ++generated_;
                if (generated_ > budget)
                    throw BudgetExhausted("synthesis budget exhausted", generated_);
                std::size_t m = classes_->meet(a, b);
                if (!formulas_[m]) {
                    Candidate cand(Formula::conj(*formulas_[a], *formulas_[b]));
                    auto it = fresh.find(m);
                    if (it == fresh.end())
                        fresh.emplace(m, std::move(cand));
                    else if (cand.better_than(it->second))
                        it->second = std::move(cand);
                }
                std::size_t d = classes_->disjunction(a, b);
                if (!formulas_[d]) {
                    Candidate cand(Formula::disj(*formulas_[a], *formulas_[b]));
                    auto it = fresh.find(d);
                    if (it == fresh.end())
                        fresh.emplace(d, std::move(cand));
                    else if (cand.better_than(it->second))
                        it->second = std::move(cand);
                }
            }
        }
        if (fresh.empty()) break;
        for (const auto& [idx, cand] : fresh) {
            known.push_back(idx);
            formulas_[idx] = cand.formula;
        }
        std::sort(known.begin(), known.end());
    }
}

const Formula& SynthesisTable::formula_for(const DynBitset& family) const {
    auto idx = classes_->index_of(family);
    if (!idx)
        throw InvalidArgument("family is not definable in " +
                              std::string(to_string(classes_->logic())));
    return formula_for_class(*idx);
}

const Formula& SynthesisTable::formula_for_class(std::size_t index) const {
    if (!formulas_[index])
        throw Error("synthesis closure did not reach class " + std::to_string(index));
    return *formulas_[index];
}

Formula synthesize(const TeamFamily& m, std::uint64_t budget) {
    if (m.logic == Logic::PDL && !(m.downward_closed && m.contains_empty_team))
        throw InvalidArgument(
            "PDL synthesis requires a downward-closed family containing the empty team");
    auto classes = enumerate_classes(m.sig, m.logic);
    SynthesisTable table(*classes, budget);
    return table.formula_for(m.bits);
}

}  // namespace teamsem
