#ifndef TEAMSEM_CLASSES_HPP
#define TEAMSEM_CLASSES_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "teamsem/semantics.hpp"

namespace teamsem {

// The complete, canonically ordered list of definable semantic classes over
// one (signature, logic) pair:
//
//   PDL: the nonempty downward-closed team families (they all contain the
//        empty team),
//   TPL: the powersets P(V) for V a set of valuations,
//   CPL: the subsets of the valuation space.
//
// Classes are sorted ascending by family bit-vector value and are closed
// under pairwise intersection.  Immutable after construction.
class ClassIndex {
public:
    static ClassIndex enumerate(const Signature& sig, Logic logic);

    const Signature& sig() const noexcept { return sig_; }
    Logic logic() const noexcept { return logic_; }

    std::size_t size() const noexcept { return families_.size(); }
    const DynBitset& family(std::size_t i) const { return families_[i]; }
    TeamFamily family_of(std::size_t i) const { return TeamFamily(sig_, logic_, families_[i]); }

    std::optional<std::size_t> index_of(const DynBitset& family) const;

    // Index of family(i) ∩ family(j); total by intersection closure.
    std::size_t meet(std::size_t i, std::size_t j) const { return meet_[i * size() + j]; }

    // Class-set of all j with family(i) ⊆ family(j).
    const DynBitset& supersets(std::size_t i) const { return supersets_[i]; }

    // Index of the class a disjunction of representatives would define:
    // the split union {Y ∪ Z | Y ∈ family(i), Z ∈ family(j)} for team
    // logics, the plain union for CPL.  Total for all three logics.
    std::size_t disjunction(std::size_t i, std::size_t j) const;

    // The split-union / union family itself (no index lookup).
    DynBitset disjunction_family(const DynBitset& a, const DynBitset& b) const;

    bool same_shape(const ClassIndex& o) const {
        return sig_ == o.sig_ && logic_ == o.logic_;
    }

private:
    ClassIndex() = default;

    Signature sig_{std::vector<std::string>{"p"}};
    Logic logic_ = Logic::PDL;
    std::vector<DynBitset> families_;
    std::unordered_map<DynBitset, std::size_t, DynBitsetHash> position_;
    std::vector<std::size_t> meet_;
    std::vector<DynBitset> supersets_;
};

// enumerate_classes is the operation name used throughout the docs; the CLI
// dispatches here.
std::shared_ptr<const ClassIndex> enumerate_classes(const Signature& sig, Logic logic);

// Th of a set of interpretations: the classes containing every member,
// returned as a class-set bitset over classes.size() bits.
DynBitset th(const DynBitset& interpretations, const ClassIndex& classes);
// Th of a union of families.
DynBitset th(const std::vector<DynBitset>& families, const ClassIndex& classes);

// Consequence closure of a set of classes: Th of the intersection of their
// families (the intersection over the empty set is the full space).
// Extensive, monotone, idempotent.
DynBitset cn(const DynBitset& class_set, const ClassIndex& classes);

inline constexpr std::uint64_t kDefaultSynthesisBudget = 1000000;

// Defining formulas for every class, found by breadth-first closure in
// semantic space: seeds are the constants, literals, dependence atoms (PDL)
// and the principal-ideal formulas of single teams; combination is by
// conjunction and split disjunction.  Expressive completeness guarantees
// every class is reached at the supported sizes; the round trip through
// models_of is re-checked by the test suites rather than assumed.
class SynthesisTable {
public:
    SynthesisTable(const ClassIndex& classes, std::uint64_t budget = kDefaultSynthesisBudget);

    const ClassIndex& classes() const noexcept { return *classes_; }
    std::uint64_t generated() const noexcept { return generated_; }

    // Fails with InvalidArgument when no class of the index equals M.
    const Formula& formula_for(const DynBitset& family) const;
    const Formula& formula_for_class(std::size_t index) const;

private:
    const ClassIndex* classes_;
    std::vector<std::optional<Formula>> formulas_;
    std::uint64_t generated_ = 0;
};

// One-shot synthesis: returns f with models_of(f, sig, logic) == M.
// Preconditions: M is downward closed and contains the empty team for a PDL
// target; M is a powerset for a TPL target (the output is then a PL
// formula); any valuation set for CPL.
Formula synthesize(const TeamFamily& m, std::uint64_t budget = kDefaultSynthesisBudget);

}  // namespace teamsem

#endif  // TEAMSEM_CLASSES_HPP
