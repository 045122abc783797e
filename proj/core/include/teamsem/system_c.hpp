#ifndef TEAMSEM_SYSTEM_C_HPP
#define TEAMSEM_SYSTEM_C_HPP

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "teamsem/model.hpp"

namespace teamsem {

// An entailment relation tabulated on semantic classes for both arguments.
// Left invariance is what LLE demands of any entailment relation; right
// invariance follows from RW on the System C relations this module accepts,
// so tabulation is lossless exactly there.  Relations that are not System C
// closed are still representable — rejecting them is audit's job, and the
// consequence operators refuse to run on them.
class EntailmentTable {
public:
    EntailmentTable(std::shared_ptr<const ClassIndex> classes,
                    std::vector<DynBitset> rows);

    static EntailmentTable from_pairs(
        std::shared_ptr<const ClassIndex> classes,
        const std::vector<std::pair<std::size_t, std::size_t>>& pairs);

    // The subset relation itself: (A,B) iff family(A) ⊆ family(B).
    static EntailmentTable semantic(std::shared_ptr<const ClassIndex> classes);

    const ClassIndex& classes() const noexcept { return *classes_; }
    std::shared_ptr<const ClassIndex> classes_ptr() const noexcept { return classes_; }

    std::size_t size() const noexcept { return rows_.size(); }
    bool contains(std::size_t antecedent, std::size_t consequent) const {
        return rows_[antecedent].test(consequent);
    }
    const DynBitset& row(std::size_t antecedent) const { return rows_[antecedent]; }

    // Closure under Ref, RW, Cut and CM, decided once at construction.
    bool is_system_c() const noexcept { return system_c_; }

    std::vector<std::pair<std::size_t, std::size_t>> pairs() const;

    bool operator==(const EntailmentTable& o) const { return rows_ == o.rows_; }

private:
    std::shared_ptr<const ClassIndex> classes_;
    std::vector<DynBitset> rows_;
    bool system_c_ = false;
};

// Tabulates the entailment relation a model induces: (A,B) iff the union of
// the labels of the minimal A-states lies inside family(B).
EntailmentTable tabulate(const RelationalModel& m,
                         std::shared_ptr<const ClassIndex> classes);

enum class InferenceRule { Ref, LLE, RW, Cut, CM, Or };

const char* to_string(InferenceRule r) noexcept;

struct RuleViolation {
    // Instantiating classes in the rule's premise order:
    //   Ref (a), RW (c,a,b), Cut (a,b,c), CM (a,b,c), Or (a,b,c).
    std::array<std::size_t, 3> classes{};
    std::size_t arity = 1;
};

struct RuleStatus {
    InferenceRule rule;
    bool structurally_enforced = false;  // LLE under tabulation
    std::size_t violation_count = 0;
    std::optional<RuleViolation> witness;  // canonically least triple

    bool ok() const noexcept { return violation_count == 0; }
};

struct AuditReport {
    std::vector<RuleStatus> rules;
    bool pass() const noexcept;
    const RuleStatus& rule(InferenceRule r) const;
};

// Scans every rule instantiation over the class index.  The Or rule is an
// optional System P extra and is checked only when enabled.
AuditReport audit(const EntailmentTable& t, bool enable_or = false);

// Least relation containing `seeds` that is closed under Ref, RW, Cut and
// CM, by chaotic fixpoint iteration (all rules are Horn, so the least
// fixpoint exists and is independent of rule order; `order` exists so tests
// can assert that).  Output always passes audit.
EntailmentTable close(const std::vector<std::pair<std::size_t, std::size_t>>& seeds,
                      std::shared_ptr<const ClassIndex> classes,
                      const std::vector<InferenceRule>& order = {
                          InferenceRule::RW, InferenceRule::Cut, InferenceRule::CM});

// Interpretations satisfying every consequence of `antecedent`: the
// intersection of the consequence families.  Requires a System C table.
TeamFamily norm(const EntailmentTable& t, std::size_t antecedent);

// The consequence row as a class-set.  Requires a System C table; on such
// tables the result is cn-closed.
DynBitset c_consequences(const EntailmentTable& t, std::size_t antecedent);

// The canonical model of a System C table: states are the equivalence
// classes of mutual entailment, each labeled with the norm of its members,
// with an edge from [A] to [B] when [A] != [B] and B entails some member of
// [A].  The construction asserts that mutual entailment coincides with
// consequence-row equality (which makes the labeling well defined); that
// holds on every audited table.
RelationalModel build_klm_model(const EntailmentTable& t);

struct DefinabilityMismatch {
    std::size_t antecedent = 0;
    std::size_t consequent = 0;
    bool in_table = false;  // direction of the discrepancy
};

struct DefinabilityReport {
    bool pass = false;
    std::size_t pairs_checked = 0;
    std::vector<DefinabilityMismatch> mismatches;
    std::vector<std::string> theta;  // synthesized defining formula per class
    std::vector<std::size_t> theta_roundtrip_failures;
};

// Checks, for every class pair, that table membership coincides with
// norm-inclusion, and synthesizes a defining formula for each norm that is
// re-checked through models_of.  Discrepancies are report content, not
// errors.  Requires a System C table.
DefinabilityReport verify_definability(const EntailmentTable& t);

}  // namespace teamsem

#endif  // TEAMSEM_SYSTEM_C_HPP
