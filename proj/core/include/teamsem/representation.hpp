#ifndef TEAMSEM_REPRESENTATION_HPP
#define TEAMSEM_REPRESENTATION_HPP

#include <cstdint>
#include <string>

#include <json.hpp>

#include "teamsem/system_c.hpp"

namespace teamsem {

enum class LiftMode : unsigned char { Singleton, Flatten };

// Reinterprets a CPL model as a TPL model, keeping states and relation.
// Singleton mode requires every label to hold exactly one valuation v and
// maps it to {{v}}.  Flatten mode maps the whole valuation set of a label
// to the one team containing it.
RelationalModel lift_cpl_to_tpl(const RelationalModel& m, LiftMode mode);

// Inverse of flatten on single-team labels: each label {T} becomes the
// valuation set of T.  Requires a TPL model whose labels are singletons.
RelationalModel lower_tpl_to_cpl(const RelationalModel& m);

struct ModelRequirements {
    bool cumulative = false;
    bool strong_cumulative = false;
    bool asymmetric_model = false;
    bool preferential = false;

    bool wants_singleton_labels() const noexcept {
        return asymmetric_model || preferential;
    }
    bool any() const noexcept {
        return cumulative || strong_cumulative || asymmetric_model || preferential;
    }
};

struct RandomModelParams {
    std::size_t max_states = 5;
    double edge_density = 0.3;
    double label_density = 0.5;
    ModelRequirements require;
    std::uint64_t max_attempts = 200000;
};

struct GeneratedModel {
    RelationalModel model;
    std::uint64_t rejections = 0;
};

// Rejection-samples models until the required classification flags hold.
// Deterministic under `seed`.  When singleton labels are required the
// proposal draws one interpretation per state instead of Bernoulli labels
// (plain rejection would almost never terminate).  Gives up with
// InvalidArgument after max_attempts.
GeneratedModel generate_random_model(const Signature& sig, Logic logic,
                                     const RandomModelParams& params,
                                     std::uint64_t seed);

struct VerifyOptions {
    bool exhaustive = false;
    std::size_t table_samples = 500;
    std::size_t model_samples = 1000;
    std::uint64_t seed = 0;
    unsigned threads = 0;  // 0 = hardware concurrency
};

// Verification outcome.  scope/counts carry the run parameters and tallies;
// the counterexample (when status is fail) serializes the offending table
// or model together with the witness pair.  elapsed_ms is wall-clock and is
// reported by the human-readable renderer only, never in JSON, so reports
// are byte-identical across reruns.
struct VerificationReport {
    std::string theorem;
    bool pass = false;
    nlohmann::ordered_json scope;
    nlohmann::ordered_json counts;
    nlohmann::ordered_json counterexample;  // null when passing
    std::uint64_t seed = 0;
    double elapsed_ms = 0.0;
};

// Both directions of the PDL representation theorem at desk scale:
// tabulations of sampled cumulative models pass the System C audit, and
// every System C table (all 2^20 diagonal-containing candidates for
// exhaustive |N| = 1, sampled closures otherwise) round-trips through its
// canonical model, which must classify strong cumulative; consequence
// definability is checked pairwise on the way.
VerificationReport verify_pdl_representation(const Signature& sig,
                                             const VerifyOptions& options);

// The TPL side: exhaustive |N| = 1 System C enumeration coincides with the
// CPL one under the powerset bijection (sampled closures at |N| = 2),
// asymmetric TPL models tabulate identically to their CPL lowerings,
// canonical strong cumulative CPL models lift preserving tabulations, and
// sampled cumulative TPL models pass the audit.
VerificationReport verify_tpl_representation(const Signature& sig,
                                             const VerifyOptions& options);

}  // namespace teamsem

#endif  // TEAMSEM_REPRESENTATION_HPP
