#include "teamsem/representation.hpp"

#include <algorithm>
#include <bit>
#include <chrono>

#include "teamsem/error.hpp"
#include "teamsem/json_io.hpp"
#include "teamsem/parallel.hpp"
#include "teamsem/rng.hpp"

namespace teamsem {

RelationalModel lift_cpl_to_tpl(const RelationalModel& m, LiftMode mode) {
    if (m.logic != Logic::CPL)
        throw InvalidArgument("lift_cpl_to_tpl expects a CPL model");
    RelationalModel out(m.sig, Logic::TPL);
    std::size_t teams = interpretation_count(Logic::TPL, m.sig.size());
    for (std::size_t s = 0; s < m.state_count(); ++s) {
        const DynBitset& label = m.labels[s];
        DynBitset lifted(teams);
        if (mode == LiftMode::Singleton) {
            if (label.count() != 1)
                throw InvalidArgument("singleton lift requires one valuation per label");
            lifted.set(std::size_t{1} << label.find_first());
        } else {
            // The whole valuation set becomes one team.
            std::size_t team_mask = 0;
            for (std::size_t v = label.find_first(); v < label.size();
                 v = label.find_next(v + 1))
                team_mask |= std::size_t{1} << v;
            lifted.set(team_mask);
        }
        out.add_state(m.state_ids[s], std::move(lifted));
    }
    out.edges = m.edges;
    return out;
}

RelationalModel lower_tpl_to_cpl(const RelationalModel& m) {
    if (m.logic != Logic::TPL)
        throw InvalidArgument("lower_tpl_to_cpl expects a TPL model");
    RelationalModel out(m.sig, Logic::CPL);
    std::size_t valuations = std::size_t{1} << m.sig.size();
    for (std::size_t s = 0; s < m.state_count(); ++s) {
        if (m.labels[s].count() != 1)
            throw InvalidArgument("lowering requires a single team per label");
        std::uint64_t team_mask = m.labels[s].find_first();
        out.add_state(m.state_ids[s], DynBitset::from_value(valuations, team_mask));
    }
    out.edges = m.edges;
    return out;
}

namespace {

bool requirements_hold(const ModelClassification& c, const ModelRequirements& req) {
    if (req.cumulative && !c.cumulative) return false;
    if (req.strong_cumulative && !c.strong_cumulative) return false;
    if (req.asymmetric_model && !c.asymmetric_model) return false;
    if (req.preferential && !c.preferential) return false;
    return true;
}

bool needs_asymmetric_relation(const ModelRequirements& req) {
    return req.strong_cumulative || req.asymmetric_model || req.preferential;
}

}  // namespace

GeneratedModel generate_random_model(const Signature& sig, Logic logic,
                                     const RandomModelParams& params,
                                     std::uint64_t seed) {
    if (params.max_states == 0) throw InvalidArgument("max_states must be positive");
    std::size_t space = interpretation_count(logic, sig.size());
    std::shared_ptr<const ClassIndex> classes;
    if (params.require.any()) classes = enumerate_classes(sig, logic);

    Rng rng(seed);
    for (std::uint64_t attempt = 0; attempt < params.max_attempts; ++attempt) {
        std::size_t n = 1 + rng.below(params.max_states);
        RelationalModel m(sig, logic);
        for (std::size_t s = 0; s < n; ++s) {
            DynBitset label(space);
            if (params.require.wants_singleton_labels()) {
                label.set(rng.below(space));
            } else {
                for (std::size_t i = 0; i < space; ++i)
                    if (rng.bernoulli(params.label_density)) label.set(i);
            }
            m.add_state("s" + std::to_string(s), std::move(label));
        }
        if (needs_asymmetric_relation(params.require)) {
            // Orient each unordered pair at most one way; plain proposals
            // would be rejected for asymmetry almost always.
            for (std::uint32_t i = 0; i < n; ++i) {
                for (std::uint32_t j = i + 1; j < n; ++j) {
                    double r = rng.unit();
                    if (r < params.edge_density / 2)
                        m.add_edge(i, j);
                    else if (r < params.edge_density)
                        m.add_edge(j, i);
                }
            }
        } else {
            for (std::uint32_t i = 0; i < n; ++i)
                for (std::uint32_t j = 0; j < n; ++j)
                    if (rng.bernoulli(params.edge_density)) m.add_edge(i, j);
        }
        if (!params.require.any() ||
            requirements_hold(classify(m, *classes), params.require))
            return {std::move(m), attempt};
    }
    throw InvalidArgument("random model generator gave up after " +
                          std::to_string(params.max_attempts) + " attempts");
}

namespace {

// Relation masks over a small class index (bit a*C+b == pair (a,b)).  Used
// by the exhaustive enumerations, where constructing EntailmentTable
// objects per candidate would dominate the runtime.
struct SmallIndex {
    std::size_t c = 0;
    std::uint32_t sup[8] = {};      // supersets of each class, as row bits
    std::uint8_t meet[8][8] = {};   // meet-class index

    explicit SmallIndex(const ClassIndex& classes) : c(classes.size()) {
        if (c > 8) throw CapacityError("exhaustive enumeration supports few classes");
        for (std::size_t i = 0; i < c; ++i) {
            for (std::size_t j = 0; j < c; ++j) {
                if (classes.family(i).is_subset_of(classes.family(j)))
                    sup[i] |= std::uint32_t{1} << j;
                meet[i][j] = static_cast<std::uint8_t>(classes.meet(i, j));
            }
        }
    }

    std::uint32_t row(std::uint64_t rel, std::size_t a) const {
        return static_cast<std::uint32_t>(rel >> (a * c)) & ((1u << c) - 1);
    }

    bool system_c(std::uint64_t rel) const {
        for (std::size_t a = 0; a < c; ++a) {
            std::uint32_t ra = row(rel, a);
            std::uint32_t needed = 0;
            for (std::uint32_t bs = ra; bs;) {
                std::size_t b = static_cast<std::size_t>(std::countr_zero(bs));
                bs &= bs - 1;
                needed |= sup[b];
            }
            if (needed & ~ra) return false;  // RW
            for (std::uint32_t bs = ra; bs;) {
                std::size_t b = static_cast<std::size_t>(std::countr_zero(bs));
                bs &= bs - 1;
                std::uint32_t rm = row(rel, meet[a][b]);
                if (rm != ra) return false;  // Cut (⊆) and CM (⊇)
            }
        }
        return true;
    }
};

std::vector<DynBitset> rows_from_mask(std::size_t c, std::uint64_t rel) {
    std::vector<DynBitset> rows(c, DynBitset(c));
    for (std::size_t a = 0; a < c; ++a)
        for (std::size_t b = 0; b < c; ++b)
            if ((rel >> (a * c + b)) & 1) rows[a].set(b);
    return rows;
}

// The three checks every System C table must survive: its canonical model
// classifies strong cumulative, re-tabulating that model reproduces the
// table, and membership coincides with norm-inclusion on every pair.
// Returns the name of the first failing check.
const char* roundtrip_failure(const EntailmentTable& t,
                              std::shared_ptr<const ClassIndex> classes) {
    RelationalModel model = build_klm_model(t);
    ModelClassification cls = classify(model, *classes);
    if (!cls.strong_cumulative) return "canonical model is not strong cumulative";
    EntailmentTable back = tabulate(model, classes);
    if (!(back == t)) return "re-tabulation differs from the table";
    for (std::size_t a = 0; a < t.size(); ++a) {
        DynBitset nrm = norm(t, a).bits;
        for (std::size_t b = 0; b < t.size(); ++b)
            if (t.contains(a, b) != nrm.is_subset_of(classes->family(b)))
                return "membership differs from norm-inclusion";
    }
    return nullptr;
}

std::vector<std::pair<std::size_t, std::size_t>> random_seed_pairs(Rng& rng,
                                                                   std::size_t c,
                                                                   std::size_t max_seeds) {
    std::size_t count = rng.below(max_seeds + 1);
    std::vector<std::pair<std::size_t, std::size_t>> seeds;
    seeds.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
        seeds.emplace_back(rng.below(c), rng.below(c));
    return seeds;
}

// Deterministic failure merge: the least sample index wins.
struct FirstFailure {
    std::uint64_t index = UINT64_MAX;
    nlohmann::ordered_json detail;

    void offer(std::uint64_t i, nlohmann::ordered_json d) {
        if (i < index) {
            index = i;
            detail = std::move(d);
        }
    }
    void merge(const FirstFailure& o) {
        if (o.index < index) *this = o;
    }
    bool failed() const { return index != UINT64_MAX; }
};

constexpr std::uint64_t kStreamModels = 1;
constexpr std::uint64_t kStreamTables = 2;
constexpr std::uint64_t kStreamAsymmetric = 3;
constexpr std::uint64_t kStreamStrongCpl = 4;
constexpr std::uint64_t kStreamCumulativeTpl = 5;

std::uint64_t stream_seed(std::uint64_t base, std::uint64_t stream, std::uint64_t i) {
    return mix_seed(base, (stream << 48) ^ i);
}

}  // namespace

VerificationReport verify_pdl_representation(const Signature& sig,
                                             const VerifyOptions& options) {
    auto started = std::chrono::steady_clock::now();
    if (options.exhaustive && sig.size() != 1)
        throw CapacityError("exhaustive verification is supported for one variable");
    auto classes = enumerate_classes(sig, Logic::PDL);
    std::size_t c = classes->size();
    unsigned threads = effective_threads(options.threads);

    VerificationReport report;
    report.theorem = "pdl-rep";
    report.seed = options.seed;
    report.scope = {{"n", sig.size()},
                    {"mode", options.exhaustive ? "exhaustive" : "sampled"},
                    {"classes", c},
                    {"table_samples", options.table_samples},
                    {"model_samples", options.model_samples}};

    // Direction "cumulative models satisfy the rules": tabulations of
    // sampled cumulative models must be System C closed.
    std::uint64_t model_rejections = 0;
    FirstFailure model_failure;
    {
        std::vector<FirstFailure> fails(threads);
        std::vector<std::uint64_t> rejections(threads, 0);
        parallel_chunks(options.model_samples, threads,
                        [&](unsigned w, std::uint64_t lo, std::uint64_t hi) {
            RandomModelParams params;
            params.require.cumulative = true;
            for (std::uint64_t i = lo; i < hi; ++i) {
                GeneratedModel gen = generate_random_model(
                    sig, Logic::PDL, params, stream_seed(options.seed, kStreamModels, i));
                rejections[w] += gen.rejections;
                EntailmentTable t = tabulate(gen.model, classes);
                if (!t.is_system_c())
                    fails[w].offer(i, {{"kind", "model"},
                                       {"check", "tabulation fails the System C audit"},
                                       {"sample", i},
                                       {"model", model_to_json(gen.model)}});
            }
        });
        for (unsigned w = 0; w < threads; ++w) {
            model_rejections += rejections[w];
            model_failure.merge(fails[w]);
        }
    }

    // Direction "System C tables are strongly cumulative": every table
    // round-trips through its canonical model.
    std::uint64_t candidates = 0, survivors = 0;
    FirstFailure table_failure;
    if (options.exhaustive) {
        SmallIndex small(*classes);
        std::vector<std::pair<std::size_t, std::size_t>> offdiag;
        for (std::size_t a = 0; a < c; ++a)
            for (std::size_t b = 0; b < c; ++b)
                if (a != b) offdiag.emplace_back(a, b);
        std::uint64_t diagonal = 0;
        for (std::size_t a = 0; a < c; ++a) diagonal |= std::uint64_t{1} << (a * c + a);
        std::uint64_t total = std::uint64_t{1} << offdiag.size();

        std::vector<std::uint64_t> counted(threads, 0), kept(threads, 0);
        std::vector<FirstFailure> fails(threads);
        parallel_chunks(total, threads,
                        [&](unsigned w, std::uint64_t lo, std::uint64_t hi) {
            for (std::uint64_t x = lo; x < hi; ++x) {
                ++counted[w];
                std::uint64_t rel = diagonal;
                for (std::size_t k = 0; k < offdiag.size(); ++k)
                    if ((x >> k) & 1)
                        rel |= std::uint64_t{1}
                               << (offdiag[k].first * c + offdiag[k].second);
                if (!small.system_c(rel)) continue;
                ++kept[w];
                EntailmentTable t(classes, rows_from_mask(c, rel));
                if (const char* why = roundtrip_failure(t, classes))
                    fails[w].offer(x, {{"kind", "table"},
                                       {"check", why},
                                       {"candidate", x},
                                       {"relation_mask", rel}});
            }
        });
        for (unsigned w = 0; w < threads; ++w) {
            candidates += counted[w];
            survivors += kept[w];
            table_failure.merge(fails[w]);
        }
    } else {
        std::vector<std::uint64_t> kept(threads, 0);
        std::vector<FirstFailure> fails(threads);
        parallel_chunks(options.table_samples, threads,
                        [&](unsigned w, std::uint64_t lo, std::uint64_t hi) {
            for (std::uint64_t i = lo; i < hi; ++i) {
                Rng rng(stream_seed(options.seed, kStreamTables, i));
                auto seeds = random_seed_pairs(rng, c, 3);
                EntailmentTable t = close(seeds, classes);
                if (!t.is_system_c()) {
                    fails[w].offer(i, {{"kind", "table"},
                                       {"check", "closure failed its own audit"},
                                       {"sample", i}});
                    continue;
                }
                ++kept[w];
                if (const char* why = roundtrip_failure(t, classes)) {
                    json pairs = json::array();
                    for (auto [a, b] : t.pairs()) pairs.push_back({a, b});
                    fails[w].offer(i, {{"kind", "table"},
                                       {"check", why},
                                       {"sample", i},
                                       {"class_pairs", pairs}});
                }
            }
        });
        candidates = options.table_samples;
        for (unsigned w = 0; w < threads; ++w) {
            survivors += kept[w];
            table_failure.merge(fails[w]);
        }
    }

    report.counts = {{"models_checked", options.model_samples},
                     {"model_rejections", model_rejections},
                     {"candidates", candidates},
                     {"system_c_tables", survivors}};
    report.pass = !model_failure.failed() && !table_failure.failed();
    if (model_failure.failed())
        report.counterexample = model_failure.detail;
    else if (table_failure.failed())
        report.counterexample = table_failure.detail;
    else
        report.counterexample = nullptr;
    report.elapsed_ms = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - started)
                            .count();
    return report;
}

VerificationReport verify_tpl_representation(const Signature& sig,
                                             const VerifyOptions& options) {
    auto started = std::chrono::steady_clock::now();
    auto classes_tpl = enumerate_classes(sig, Logic::TPL);
    auto classes_cpl = enumerate_classes(sig, Logic::CPL);
    std::size_t c = classes_tpl->size();
    unsigned threads = effective_threads(options.threads);

    VerificationReport report;
    report.theorem = "tpl-rep";
    report.seed = options.seed;
    bool exhaustive_enum = sig.size() == 1;
    report.scope = {{"n", sig.size()},
                    {"mode", exhaustive_enum ? "exhaustive" : "sampled"},
                    {"classes", c},
                    {"table_samples", options.table_samples},
                    {"model_samples", options.model_samples}};
    FirstFailure failure;

    // The index bijection P(V) <-> V must be index-preserving; everything
    // below compares relations positionally.
    if (classes_cpl->size() != c)
        throw Error("TPL and CPL class indexes have different sizes");
    for (std::size_t i = 0; i < c; ++i) {
        const DynBitset& v = classes_cpl->family(i);
        std::uint64_t vmask = 0;
        for (std::size_t b = v.find_first(); b < v.size(); b = v.find_next(b + 1))
            vmask |= std::uint64_t{1} << b;
        const DynBitset& fam = classes_tpl->family(i);
        for (std::size_t t = 0; t < fam.size(); ++t)
            if (fam.test(t) != ((t & ~vmask) == 0))
                throw Error("TPL class order does not align with the CPL order");
    }

    // (i) System C relations coincide on both sides of the bijection.
    std::uint64_t system_c_tables = 0;
    if (exhaustive_enum) {
        SmallIndex small_tpl(*classes_tpl);
        SmallIndex small_cpl(*classes_cpl);
        std::uint64_t diagonal = 0;
        for (std::size_t a = 0; a < c; ++a) diagonal |= std::uint64_t{1} << (a * c + a);
        std::vector<std::pair<std::size_t, std::size_t>> offdiag;
        for (std::size_t a = 0; a < c; ++a)
            for (std::size_t b = 0; b < c; ++b)
                if (a != b) offdiag.emplace_back(a, b);
        std::uint64_t total = std::uint64_t{1} << offdiag.size();
        for (std::uint64_t x = 0; x < total; ++x) {
            std::uint64_t rel = diagonal;
            for (std::size_t k = 0; k < offdiag.size(); ++k)
                if ((x >> k) & 1)
                    rel |= std::uint64_t{1} << (offdiag[k].first * c + offdiag[k].second);
            bool tpl = small_tpl.system_c(rel);
            bool cpl = small_cpl.system_c(rel);
            if (tpl != cpl) {
                failure.offer(x, {{"kind", "table"},
                                  {"check", "TPL/CPL System C enumerations disagree"},
                                  {"relation_mask", rel}});
                break;
            }
            if (tpl) ++system_c_tables;
        }
    } else {
        for (std::uint64_t i = 0; i < options.table_samples; ++i) {
            Rng rng(stream_seed(options.seed, kStreamTables, i));
            auto seeds = random_seed_pairs(rng, c, 3);
            EntailmentTable t_tpl = close(seeds, classes_tpl);
            EntailmentTable t_cpl = close(seeds, classes_cpl);
            ++system_c_tables;
            // Row equality is the index bijection at work: positions agree.
            if (!(t_tpl == t_cpl)) {
                failure.offer(i, {{"kind", "table"},
                                  {"check", "TPL/CPL closures disagree"},
                                  {"sample", i}});
                break;
            }
        }
    }

    // (ii) Asymmetric TPL models tabulate exactly as their CPL lowerings;
    // the flatten/lower round trip is the identity.
    std::uint64_t asym_rejections = 0;
    {
        std::vector<FirstFailure> fails(threads);
        std::vector<std::uint64_t> rejections(threads, 0);
        parallel_chunks(options.model_samples, threads,
                        [&](unsigned w, std::uint64_t lo, std::uint64_t hi) {
            RandomModelParams params;
            params.require.asymmetric_model = true;
            for (std::uint64_t i = lo; i < hi; ++i) {
                GeneratedModel gen = generate_random_model(
                    sig, Logic::TPL, params,
                    stream_seed(options.seed, kStreamAsymmetric, i));
                rejections[w] += gen.rejections;
                RelationalModel lowered = lower_tpl_to_cpl(gen.model);
                if (!(tabulate(gen.model, classes_tpl) ==
                      tabulate(lowered, classes_cpl))) {
                    fails[w].offer(i, {{"kind", "model"},
                                       {"check", "lowering changed the tabulation"},
                                       {"sample", i},
                                       {"model", model_to_json(gen.model)}});
                    continue;
                }
                RelationalModel back = lift_cpl_to_tpl(lowered, LiftMode::Flatten);
                if (!(back.labels == gen.model.labels && back.edges == gen.model.edges &&
                      back.state_ids == gen.model.state_ids))
                    fails[w].offer(i, {{"kind", "model"},
                                       {"check", "flatten∘lower is not the identity"},
                                       {"sample", i},
                                       {"model", model_to_json(gen.model)}});
            }
        });
        for (unsigned w = 0; w < threads; ++w) {
            asym_rejections += rejections[w];
            failure.merge(fails[w]);
        }
    }

    // (iii) Strong cumulative CPL models (canonical models of random
    // System C tables) lift to TPL preserving the tabulation; singleton
    // mode is exercised whenever the labels allow it.
    std::uint64_t strong_lifts = 0, singleton_lifts = 0;
    {
        std::uint64_t samples = options.table_samples;
        for (std::uint64_t i = 0; i < samples; ++i) {
            Rng rng(stream_seed(options.seed, kStreamStrongCpl, i));
            auto seeds = random_seed_pairs(rng, c, 3);
            EntailmentTable t = close(seeds, classes_cpl);
            RelationalModel strong_cpl = build_klm_model(t);
            if (!classify(strong_cpl, *classes_cpl).strong_cumulative) {
                failure.offer(i, {{"kind", "model"},
                                  {"check", "canonical CPL model is not strong cumulative"},
                                  {"sample", i},
                                  {"model", model_to_json(strong_cpl)}});
                break;
            }
            ++strong_lifts;
            EntailmentTable cpl_tab = tabulate(strong_cpl, classes_cpl);
            RelationalModel flat = lift_cpl_to_tpl(strong_cpl, LiftMode::Flatten);
            if (!(tabulate(flat, classes_tpl) == cpl_tab) ||
                !classify(flat, *classes_tpl).strong_cumulative) {
                failure.offer(i, {{"kind", "model"},
                                  {"check", "flatten lift broke the tabulation"},
                                  {"sample", i},
                                  {"model", model_to_json(strong_cpl)}});
                break;
            }
            RelationalModel lowered = lower_tpl_to_cpl(flat);
            if (!(lowered.labels == strong_cpl.labels &&
                  lowered.edges == strong_cpl.edges &&
                  lowered.state_ids == strong_cpl.state_ids)) {
                failure.offer(i, {{"kind", "model"},
                                  {"check", "lower∘flatten is not the identity"},
                                  {"sample", i},
                                  {"model", model_to_json(strong_cpl)}});
                break;
            }
            bool all_singleton = true;
            for (const auto& label : strong_cpl.labels)
                if (label.count() != 1) all_singleton = false;
            if (all_singleton) {
                ++singleton_lifts;
                RelationalModel single = lift_cpl_to_tpl(strong_cpl, LiftMode::Singleton);
                if (!(tabulate(single, classes_tpl) == cpl_tab)) {
                    failure.offer(i, {{"kind", "model"},
                                      {"check", "singleton lift broke the tabulation"},
                                      {"sample", i},
                                      {"model", model_to_json(strong_cpl)}});
                    break;
                }
            }
        }
    }

    // Canonical models label their bottom state with the empty set, so the
    // singleton lift never applies to them; exercise it on sampled
    // preferential-style CPL models (one valuation per label) instead.
    std::uint64_t singleton_mode_models = 0;
    {
        for (std::uint64_t i = 0; i < options.table_samples; ++i) {
            RandomModelParams params;
            params.require.asymmetric_model = true;
            GeneratedModel gen = generate_random_model(
                sig, Logic::CPL, params, stream_seed(options.seed, kStreamStrongCpl + 16, i));
            RelationalModel lifted = lift_cpl_to_tpl(gen.model, LiftMode::Singleton);
            ++singleton_mode_models;
            if (!(tabulate(lifted, classes_tpl) ==
                  tabulate(gen.model, classes_cpl))) {
                failure.offer(i, {{"kind", "model"},
                                  {"check", "singleton lift broke the tabulation"},
                                  {"sample", i},
                                  {"model", model_to_json(gen.model)}});
                break;
            }
        }
    }

    // (iv) Cumulative TPL models satisfy the rules.
    std::uint64_t tpl_rejections = 0;
    {
        std::vector<FirstFailure> fails(threads);
        std::vector<std::uint64_t> rejections(threads, 0);
        parallel_chunks(options.model_samples, threads,
                        [&](unsigned w, std::uint64_t lo, std::uint64_t hi) {
            RandomModelParams params;
            params.require.cumulative = true;
            for (std::uint64_t i = lo; i < hi; ++i) {
                GeneratedModel gen = generate_random_model(
                    sig, Logic::TPL, params,
                    stream_seed(options.seed, kStreamCumulativeTpl, i));
                rejections[w] += gen.rejections;
                if (!tabulate(gen.model, classes_tpl).is_system_c())
                    fails[w].offer(i, {{"kind", "model"},
                                       {"check", "tabulation fails the System C audit"},
                                       {"sample", i},
                                       {"model", model_to_json(gen.model)}});
            }
        });
        for (unsigned w = 0; w < threads; ++w) {
            tpl_rejections += rejections[w];
            failure.merge(fails[w]);
        }
    }

    report.counts = {{"system_c_tables", system_c_tables},
                     {"asymmetric_models", options.model_samples},
                     {"asymmetric_rejections", asym_rejections},
                     {"strong_lifts", strong_lifts},
                     {"singleton_lifts", singleton_lifts},
                     {"singleton_mode_models", singleton_mode_models},
                     {"cumulative_tpl_models", options.model_samples},
                     {"cumulative_tpl_rejections", tpl_rejections}};
    report.pass = !failure.failed();
    report.counterexample = failure.failed() ? failure.detail : json(nullptr);
    report.elapsed_ms = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - started)
                            .count();
    return report;
}

}  // namespace teamsem
