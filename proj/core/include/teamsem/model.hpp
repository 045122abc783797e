#ifndef TEAMSEM_MODEL_HPP
#define TEAMSEM_MODEL_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "teamsem/classes.hpp"

namespace teamsem {

// A relational model: states, a labeling of states with sets of
// interpretations, and a binary relation used for minimization.  Labels may
// be empty; an empty-labeled state satisfies every formula vacuously and so
// shows up in every states_of result.  The relation is stored exactly as
// given — no closure of any kind is taken implicitly.
struct RelationalModel {
    Signature sig;
    Logic logic;
    std::vector<std::string> state_ids;  // unique, in load order
    std::vector<DynBitset> labels;       // labels[s] over the interpretation space
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;  // (from, to)

    RelationalModel(Signature s, Logic l)
        : sig(std::move(s)), logic(l) {}

    std::size_t state_count() const noexcept { return state_ids.size(); }
    std::uint32_t add_state(std::string id, DynBitset label);
    void add_edge(std::uint32_t from, std::uint32_t to) { edges.emplace_back(from, to); }
    bool has_edge(std::uint32_t from, std::uint32_t to) const;

    // Predecessor/successor state-sets, one per state (rebuilt on demand).
    std::vector<DynBitset> predecessor_sets() const;
    std::vector<DynBitset> successor_sets() const;
};

// States whose label satisfies the class: every interpretation in the label
// lies in `family`.
DynBitset states_of(const RelationalModel& m, const DynBitset& family);

// The members of `states` with no predecessor inside `states`.  The
// quantifier ranges over `states` itself, so a reflexive edge disqualifies
// its state.
DynBitset minimal_states(const RelationalModel& m, const DynBitset& states);
// As above with predecessor sets precomputed by the caller (class scans).
DynBitset minimal_states(const DynBitset& states, const std::vector<DynBitset>& pred);

struct SmoothnessCheck {
    bool smooth = false;
    std::optional<std::uint32_t> witness;  // least state neither minimal nor dominated
};

// `states` is smooth when each member is minimal in it or has a minimal
// member of it as predecessor.
SmoothnessCheck is_smooth(const RelationalModel& m, const DynBitset& states);

// Union of the labels of the minimal `family`-states.
TeamFamily min_models(const RelationalModel& m, const DynBitset& family);

// min_models(m, antecedent) ⊆ consequent.
bool entails(const RelationalModel& m, const DynBitset& antecedent,
             const DynBitset& consequent);

struct ClassWitness {
    std::size_t class_index = 0;
    std::optional<std::size_t> second_class;
    std::optional<std::uint32_t> state;
};

// Model-zoo flags.  Every "for all formulas" quantifier is discharged over
// the class index, which is sound and complete because satisfaction of a
// state depends on a formula only through its semantic class.
struct ModelClassification {
    bool cumulative = false;
    bool strong_cumulative = false;
    bool asymmetric_model = false;
    bool preferential = false;
    bool pref_triangle = false;
    std::optional<bool> star_property;  // engaged only when requested

    std::optional<ClassWitness> cumulative_witness;       // non-smooth class
    std::optional<ClassWitness> strong_witness;           // |min| != 1 class
    std::optional<ClassWitness> star_witness;             // failing class pair
    std::optional<std::uint32_t> label_shape_witness;     // non-singleton label
    std::optional<std::pair<std::uint32_t, std::uint32_t>> relation_witness;
    std::size_t star_pairs_skipped = 0;
};

struct ClassifyOptions {
    bool check_star = false;
};

ModelClassification classify(const RelationalModel& m, const ClassIndex& classes,
                             const ClassifyOptions& options = {});

}  // namespace teamsem

#endif  // TEAMSEM_MODEL_HPP
