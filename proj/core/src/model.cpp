#include "teamsem/model.hpp"

#include <algorithm>
#include <bit>

#include "teamsem/error.hpp"

namespace teamsem {

std::uint32_t RelationalModel::add_state(std::string id, DynBitset label) {
    if (label.size() != interpretation_count(logic, sig.size()))
        throw InvalidArgument("state label width does not match the signature");
    for (const auto& existing : state_ids)
        if (existing == id) throw InvalidArgument("duplicate state id '" + id + "'");
    state_ids.push_back(std::move(id));
    labels.push_back(std::move(label));
    return static_cast<std::uint32_t>(state_ids.size() - 1);
}

bool RelationalModel::has_edge(std::uint32_t from, std::uint32_t to) const {
    return std::find(edges.begin(), edges.end(), std::make_pair(from, to)) != edges.end();
}

std::vector<DynBitset> RelationalModel::predecessor_sets() const {
    std::vector<DynBitset> pred(state_count(), DynBitset(state_count()));
    for (const auto& [from, to] : edges) pred[to].set(from);
    return pred;
}

std::vector<DynBitset> RelationalModel::successor_sets() const {
    std::vector<DynBitset> succ(state_count(), DynBitset(state_count()));
    for (const auto& [from, to] : edges) succ[from].set(to);
    return succ;
}

DynBitset states_of(const RelationalModel& m, const DynBitset& family) {
    DynBitset out(m.state_count());
    for (std::size_t s = 0; s < m.state_count(); ++s)
        if (m.labels[s].is_subset_of(family)) out.set(s);
    return out;
}

DynBitset minimal_states(const DynBitset& states, const std::vector<DynBitset>& pred) {
    DynBitset out(states.size());
    for (std::size_t s = states.find_first(); s < states.size();
         s = states.find_next(s + 1))
        if (!(pred[s] & states).any()) out.set(s);
    return out;
}

DynBitset minimal_states(const RelationalModel& m, const DynBitset& states) {
    return minimal_states(states, m.predecessor_sets());
}

SmoothnessCheck is_smooth(const RelationalModel& m, const DynBitset& states) {
    auto pred = m.predecessor_sets();
    DynBitset mins(m.state_count());
    for (std::size_t s = states.find_first(); s < states.size();
         s = states.find_next(s + 1))
        if (!(pred[s] & states).any()) mins.set(s);

    SmoothnessCheck result;
    for (std::size_t s = states.find_first(); s < states.size();
         s = states.find_next(s + 1)) {
        if (!mins.test(s) && !(pred[s] & mins).any()) {
            result.witness = static_cast<std::uint32_t>(s);
            return result;
        }
    }
    result.smooth = true;
    return result;
}

TeamFamily min_models(const RelationalModel& m, const DynBitset& family) {
    DynBitset mins = minimal_states(m, states_of(m, family));
    DynBitset bits(interpretation_count(m.logic, m.sig.size()));
    for (std::size_t s = mins.find_first(); s < mins.size(); s = mins.find_next(s + 1))
        bits |= m.labels[s];
    return TeamFamily(m.sig, m.logic, std::move(bits));
}

bool entails(const RelationalModel& m, const DynBitset& antecedent,
             const DynBitset& consequent) {
    return min_models(m, antecedent).bits.is_subset_of(consequent);
}

ModelClassification classify(const RelationalModel& m, const ClassIndex& classes,
                             const ClassifyOptions& options) {
    if (!(m.sig == classes.sig()) || m.logic != classes.logic())
        throw InvalidArgument("class index does not match the model's signature/logic");

    ModelClassification r;
    std::size_t n = m.state_count();
    auto pred = m.predecessor_sets();

    bool all_smooth = true;
    bool all_min_unique = true;
    std::vector<DynBitset> per_class_min_models;
    if (options.check_star)
        per_class_min_models.reserve(classes.size());

    for (std::size_t i = 0; i < classes.size(); ++i) {
        DynBitset s = states_of(m, classes.family(i));
        DynBitset mins = minimal_states(s, pred);
        if (all_smooth) {
            for (std::size_t st = s.find_first(); st < s.size(); st = s.find_next(st + 1)) {
                if (!mins.test(st) && !(pred[st] & mins).any()) {
                    all_smooth = false;
                    r.cumulative_witness =
                        ClassWitness{i, std::nullopt, static_cast<std::uint32_t>(st)};
                    break;
                }
            }
        }
        if (mins.count() != 1 && all_min_unique) {
            all_min_unique = false;
            r.strong_witness = ClassWitness{i, std::nullopt, std::nullopt};
        }
        if (options.check_star) {
            DynBitset mm(interpretation_count(m.logic, m.sig.size()));
            for (std::size_t st = mins.find_first(); st < mins.size();
                 st = mins.find_next(st + 1))
                mm |= m.labels[st];
            per_class_min_models.push_back(std::move(mm));
        }
    }

    auto succ = m.successor_sets();
    bool asymmetric_relation = true;
    for (std::size_t i = 0; i < n && asymmetric_relation; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            if (succ[i].test(j) && succ[j].test(i)) {
                asymmetric_relation = false;
                r.relation_witness = {static_cast<std::uint32_t>(i),
                                      static_cast<std::uint32_t>(j)};
                break;
            }
        }
    }

    bool irreflexive = true;
    for (std::size_t i = 0; i < n; ++i)
        if (succ[i].test(i)) irreflexive = false;

    bool transitive = true;
    for (std::size_t a = 0; a < n && transitive; ++a)
        for (std::size_t b = succ[a].find_first(); b < n; b = succ[a].find_next(b + 1))
            if (!succ[b].is_subset_of(succ[a])) {
                transitive = false;
                break;
            }

    bool labels_singleton = true;
    for (std::size_t s = 0; s < n; ++s) {
        if (m.labels[s].count() != 1) {
            labels_singleton = false;
            r.label_shape_witness = static_cast<std::uint32_t>(s);
            break;
        }
    }

    r.cumulative = all_smooth;
    r.strong_cumulative = all_smooth && asymmetric_relation && all_min_unique;
    r.asymmetric_model = all_smooth && asymmetric_relation && labels_singleton;
    r.preferential = all_smooth && labels_singleton && irreflexive && transitive;

    if (r.preferential) {
        // Minimal states of the whole model must carry only singleton
        // teams; over CPL the condition is vacuous.
        bool triangle = true;
        if (is_team_logic(m.logic)) {
            DynBitset mins = minimal_states(m, DynBitset::all_set(n));
            for (std::size_t s = mins.find_first(); s < mins.size() && triangle;
                 s = mins.find_next(s + 1)) {
                const DynBitset& label = m.labels[s];
                for (std::size_t t = label.find_first(); t < label.size();
                     t = label.find_next(t + 1)) {
                    if (std::popcount(static_cast<std::uint64_t>(t)) != 1) {
                        triangle = false;
                        break;
                    }
                }
            }
        }
        r.pref_triangle = triangle;
    }

    if (options.check_star) {
        bool star = true;
        for (std::size_t i = 0; i < classes.size() && star; ++i) {
            for (std::size_t j = i; j < classes.size(); ++j) {
                DynBitset disj =
                    classes.disjunction_family(classes.family(i), classes.family(j));
                if (!classes.index_of(disj)) {
                    // Cannot arise from a disjunction of formulas; skip.
                    ++r.star_pairs_skipped;
                    continue;
                }
                DynBitset left = min_models(m, disj).bits;
                if (!left.is_subset_of(per_class_min_models[i] | per_class_min_models[j])) {
                    star = false;
                    r.star_witness = ClassWitness{i, j, std::nullopt};
                    break;
                }
            }
        }
        r.star_property = star;
    }
    return r;
}

}  // namespace teamsem
