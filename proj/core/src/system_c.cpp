#include "teamsem/system_c.hpp"

#include <algorithm>
#include <unordered_map>

#include "teamsem/error.hpp"

namespace teamsem {

namespace {

bool rows_are_system_c(const ClassIndex& classes, const std::vector<DynBitset>& rows) {
    std::size_t c = classes.size();
    for (std::size_t a = 0; a < c; ++a)
        if (!rows[a].test(a)) return false;
    for (std::size_t a = 0; a < c; ++a) {
        // RW: consequences are closed upward in the subset order.
        DynBitset needed(c);
        for (std::size_t b = rows[a].find_first(); b < c; b = rows[a].find_next(b + 1))
            needed |= classes.supersets(b);
        if (!needed.is_subset_of(rows[a])) return false;
        // Cut and CM: conditioning on a consequence preserves the row.
        for (std::size_t b = rows[a].find_first(); b < c; b = rows[a].find_next(b + 1)) {
            const DynBitset& meet_row = rows[classes.meet(a, b)];
            if (!meet_row.is_subset_of(rows[a])) return false;   // Cut
            if (!rows[a].is_subset_of(meet_row)) return false;   // CM
        }
    }
    return true;
}

}  // namespace

EntailmentTable::EntailmentTable(std::shared_ptr<const ClassIndex> classes,
                                 std::vector<DynBitset> rows)
    : classes_(std::move(classes)), rows_(std::move(rows)) {
    if (rows_.size() != classes_->size())
        throw InvalidArgument("entailment table has wrong row count");
    for (const auto& row : rows_)
        if (row.size() != classes_->size())
            throw InvalidArgument("entailment table has wrong row width");
    system_c_ = rows_are_system_c(*classes_, rows_);
}

EntailmentTable EntailmentTable::from_pairs(
    std::shared_ptr<const ClassIndex> classes,
    const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
    std::vector<DynBitset> rows(classes->size(), DynBitset(classes->size()));
    for (const auto& [a, b] : pairs) {
        if (a >= classes->size() || b >= classes->size())
            throw InvalidArgument("class pair index out of range");
        rows[a].set(b);
    }
    return EntailmentTable(std::move(classes), std::move(rows));
}

EntailmentTable EntailmentTable::semantic(std::shared_ptr<const ClassIndex> classes) {
    std::vector<DynBitset> rows;
    rows.reserve(classes->size());
    for (std::size_t a = 0; a < classes->size(); ++a) rows.push_back(classes->supersets(a));
    return EntailmentTable(std::move(classes), std::move(rows));
}

std::vector<std::pair<std::size_t, std::size_t>> EntailmentTable::pairs() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t a = 0; a < rows_.size(); ++a)
        for (std::size_t b = rows_[a].find_first(); b < rows_[a].size();
             b = rows_[a].find_next(b + 1))
            out.emplace_back(a, b);
    return out;
}

EntailmentTable tabulate(const RelationalModel& m,
                         std::shared_ptr<const ClassIndex> classes) {
    if (!(m.sig == classes->sig()) || m.logic != classes->logic())
        throw InvalidArgument("class index does not match the model");
    auto pred = m.predecessor_sets();
    std::vector<DynBitset> rows;
    rows.reserve(classes->size());
    for (std::size_t a = 0; a < classes->size(); ++a) {
        DynBitset mins = minimal_states(states_of(m, classes->family(a)), pred);
        DynBitset mm(interpretation_count(m.logic, m.sig.size()));
        for (std::size_t s = mins.find_first(); s < mins.size(); s = mins.find_next(s + 1))
            mm |= m.labels[s];
        DynBitset row(classes->size());
        for (std::size_t b = 0; b < classes->size(); ++b)
            if (mm.is_subset_of(classes->family(b))) row.set(b);
        rows.push_back(std::move(row));
    }
    return EntailmentTable(std::move(classes), std::move(rows));
}

const char* to_string(InferenceRule r) noexcept {
    switch (r) {
        case InferenceRule::Ref: return "Ref";
        case InferenceRule::LLE: return "LLE";
        case InferenceRule::RW: return "RW";
        case InferenceRule::Cut: return "Cut";
        case InferenceRule::CM: return "CM";
        default: return "Or";
    }
}

bool AuditReport::pass() const noexcept {
    return std::all_of(rules.begin(), rules.end(),
                       [](const RuleStatus& r) { return r.ok(); });
}

const RuleStatus& AuditReport::rule(InferenceRule r) const {
    for (const auto& s : rules)
        if (s.rule == r) return s;
    throw InvalidArgument("rule not present in report");
}

AuditReport audit(const EntailmentTable& t, bool enable_or) {
    const ClassIndex& classes = t.classes();
    std::size_t c = classes.size();
    AuditReport report;

    RuleStatus ref{InferenceRule::Ref, false, 0, std::nullopt};
    for (std::size_t a = 0; a < c; ++a) {
        if (!t.contains(a, a)) {
            if (!ref.witness) ref.witness = RuleViolation{{a, 0, 0}, 1};
            ++ref.violation_count;
        }
    }
    report.rules.push_back(std::move(ref));

    // Tabulation on classes identifies semantically equivalent formulas, so
    // LLE cannot be violated.
    report.rules.push_back(RuleStatus{InferenceRule::LLE, true, 0, std::nullopt});

    RuleStatus rw{InferenceRule::RW, false, 0, std::nullopt};
    for (std::size_t cc = 0; cc < c; ++cc) {
        for (std::size_t a = t.row(cc).find_first(); a < c; a = t.row(cc).find_next(a + 1)) {
            DynBitset missing = classes.supersets(a);
            missing.subtract(t.row(cc));
            if (missing.any()) {
                if (!rw.witness)
                    rw.witness = RuleViolation{{cc, a, missing.find_first()}, 3};
                rw.violation_count += missing.count();
            }
        }
    }
    report.rules.push_back(std::move(rw));

    RuleStatus cut{InferenceRule::Cut, false, 0, std::nullopt};
    for (std::size_t a = 0; a < c; ++a) {
        for (std::size_t b = t.row(a).find_first(); b < c; b = t.row(a).find_next(b + 1)) {
            DynBitset missing = t.row(classes.meet(a, b));
            missing.subtract(t.row(a));
            if (missing.any()) {
                if (!cut.witness)
                    cut.witness = RuleViolation{{a, b, missing.find_first()}, 3};
                cut.violation_count += missing.count();
            }
        }
    }
    report.rules.push_back(std::move(cut));

    RuleStatus cm{InferenceRule::CM, false, 0, std::nullopt};
    for (std::size_t a = 0; a < c; ++a) {
        for (std::size_t b = t.row(a).find_first(); b < c; b = t.row(a).find_next(b + 1)) {
            DynBitset missing = t.row(a);
            missing.subtract(t.row(classes.meet(a, b)));
            if (missing.any()) {
                if (!cm.witness)
                    cm.witness = RuleViolation{{a, b, missing.find_first()}, 3};
                cm.violation_count += missing.count();
            }
        }
    }
    report.rules.push_back(std::move(cm));

    if (enable_or) {
        RuleStatus orr{InferenceRule::Or, false, 0, std::nullopt};
        for (std::size_t a = 0; a < c; ++a) {
            for (std::size_t b = 0; b < c; ++b) {
                DynBitset common = t.row(a) & t.row(b);
                if (!common.any()) continue;
                DynBitset missing = common;
                missing.subtract(t.row(classes.disjunction(a, b)));
                if (missing.any()) {
                    if (!orr.witness)
                        orr.witness = RuleViolation{{a, b, missing.find_first()}, 3};
                    orr.violation_count += missing.count();
                }
            }
        }
        report.rules.push_back(std::move(orr));
    }
    return report;
}

EntailmentTable close(const std::vector<std::pair<std::size_t, std::size_t>>& seeds,
                      std::shared_ptr<const ClassIndex> classes,
                      const std::vector<InferenceRule>& order) {
    {
        auto sorted = order;
        std::sort(sorted.begin(), sorted.end());
        std::vector<InferenceRule> expected{InferenceRule::RW, InferenceRule::Cut,
                                            InferenceRule::CM};
        std::sort(expected.begin(), expected.end());
        if (sorted != expected)
            throw InvalidArgument("closure order must be a permutation of RW, Cut, CM");
    }
    std::size_t c = classes->size();
    std::vector<DynBitset> rows(c, DynBitset(c));
    for (std::size_t a = 0; a < c; ++a) rows[a].set(a);
    for (const auto& [a, b] : seeds) {
        if (a >= c || b >= c) throw InvalidArgument("seed class index out of range");
        rows[a].set(b);
    }

    bool changed = true;
    while (changed) {
        changed = false;
        for (InferenceRule rule : order) {
            switch (rule) {
                case InferenceRule::RW:
                    for (std::size_t a = 0; a < c; ++a) {
                        DynBitset acc = rows[a];
                        for (std::size_t b = rows[a].find_first(); b < c;
                             b = rows[a].find_next(b + 1))
                            acc |= classes->supersets(b);
                        if (!(acc == rows[a])) {
                            rows[a] = std::move(acc);
                            changed = true;
                        }
                    }
                    break;
                case InferenceRule::Cut:
                    for (std::size_t a = 0; a < c; ++a) {
                        DynBitset snapshot = rows[a];
                        for (std::size_t b = snapshot.find_first(); b < c;
                             b = snapshot.find_next(b + 1)) {
                            const DynBitset& meet_row = rows[classes->meet(a, b)];
                            if (!meet_row.is_subset_of(rows[a])) {
                                rows[a] |= meet_row;
                                changed = true;
                            }
                        }
                    }
                    break;
                case InferenceRule::CM:
                    for (std::size_t a = 0; a < c; ++a) {
                        DynBitset snapshot = rows[a];
                        for (std::size_t b = snapshot.find_first(); b < c;
                             b = snapshot.find_next(b + 1)) {
                            std::size_t m = classes->meet(a, b);
                            if (!rows[a].is_subset_of(rows[m])) {
                                rows[m] |= rows[a];
                                changed = true;
                            }
                        }
                    }
                    break;
                default:
                    break;
            }
        }
    }
    return EntailmentTable(std::move(classes), std::move(rows));
}

namespace {

void require_system_c(const EntailmentTable& t, const char* op) {
    if (!t.is_system_c())
        throw InvalidArgument(std::string(op) +
                              " requires a table closed under System C; run audit");
}

}  // namespace

TeamFamily norm(const EntailmentTable& t, std::size_t antecedent) {
    require_system_c(t, "norm");
    const ClassIndex& classes = t.classes();
    if (antecedent >= classes.size()) throw InvalidArgument("class index out of range");
    DynBitset bits =
        DynBitset::all_set(interpretation_count(classes.logic(), classes.sig().size()));
    const DynBitset& row = t.row(antecedent);
    for (std::size_t b = row.find_first(); b < row.size(); b = row.find_next(b + 1))
        bits &= classes.family(b);
    return TeamFamily(classes.sig(), classes.logic(), std::move(bits));
}

DynBitset c_consequences(const EntailmentTable& t, std::size_t antecedent) {
    require_system_c(t, "c_consequences");
    if (antecedent >= t.size()) throw InvalidArgument("class index out of range");
    return t.row(antecedent);
}

RelationalModel build_klm_model(const EntailmentTable& t) {
    require_system_c(t, "build_klm_model");
    const ClassIndex& classes = t.classes();
    std::size_t c = classes.size();

    // Mutual entailment must coincide with consequence-row equality; on a
    // System C table it does (Cut and CM transfer rows across mutual
    // pairs), and the equality is what makes the state labeling well
    // defined.
    for (std::size_t a = 0; a < c; ++a) {
        for (std::size_t b = 0; b < c; ++b) {
            bool mutual = t.contains(a, b) && t.contains(b, a);
            if (mutual != (t.row(a) == t.row(b)))
                throw Error("canonical model construction is ill-defined for this table");
        }
    }

    std::vector<std::size_t> block_of(c, c);
    std::vector<std::vector<std::size_t>> blocks;
    std::unordered_map<DynBitset, std::size_t, DynBitsetHash> row_block;
    for (std::size_t a = 0; a < c; ++a) {
        auto [it, fresh] = row_block.emplace(t.row(a), blocks.size());
        if (fresh) blocks.push_back({});
        block_of[a] = it->second;
        blocks[it->second].push_back(a);
    }

    RelationalModel m(classes.sig(), classes.logic());
    for (const auto& members : blocks)
        m.add_state("c" + std::to_string(members.front()),
                    norm(t, members.front()).bits);

    for (std::size_t i = 0; i < blocks.size(); ++i) {
        for (std::size_t j = 0; j < blocks.size(); ++j) {
            if (i == j) continue;
            // Edge when the j-block entails some member of the i-block.
            std::size_t rep_j = blocks[j].front();
            bool edge = false;
            for (std::size_t gamma : blocks[i])
                if (t.contains(rep_j, gamma)) {
                    edge = true;
                    break;
                }
            if (edge)
                m.add_edge(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j));
        }
    }
    return m;
}

DefinabilityReport verify_definability(const EntailmentTable& t) {
    require_system_c(t, "verify_definability");
    const ClassIndex& classes = t.classes();
    std::size_t c = classes.size();
    DefinabilityReport report;
    report.pairs_checked = c * c;

    SynthesisTable synth(classes);
    for (std::size_t a = 0; a < c; ++a) {
        TeamFamily nrm = norm(t, a);
        for (std::size_t b = 0; b < c; ++b) {
            bool in_table = t.contains(a, b);
            bool semantic = nrm.bits.is_subset_of(classes.family(b));
            if (in_table != semantic)
                report.mismatches.push_back({a, b, in_table});
        }
        const Formula& theta = synth.formula_for(nrm.bits);
        report.theta.push_back(print(theta));
        if (!(models_of(theta, classes.sig(), classes.logic()).bits == nrm.bits))
            report.theta_roundtrip_failures.push_back(a);
    }
    report.pass = report.mismatches.empty() && report.theta_roundtrip_failures.empty();
    return report;
}

}  // namespace teamsem
