// teamsem — command-line front end for the team-semantics reasoning kernel.
//
// Exit codes: 0 success / property holds, 1 property fails or a
// counterexample was found, 2 usage or input error.

#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "teamsem/json_io.hpp"
#include "teamsem/parallel.hpp"
#include "teamsem/parse.hpp"

namespace ts = teamsem;
using ts::json;

namespace {

struct CommonArgs {
    std::string logic = "pdl";
    std::string sig;
    bool as_json = false;
};

ts::Logic parsed_logic(const CommonArgs& a) { return ts::logic_from_string(a.logic); }

ts::Signature parsed_sig(const CommonArgs& a) {
    if (a.sig.empty()) throw ts::InvalidArgument("--sig is required");
    return ts::signature_from_csv(a.sig);
}

json parse_inline_json(const std::string& text) {
    if (!text.empty() && text[0] == '@') return ts::load_json_file(text.substr(1));
    try {
        return json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ts::InvalidArgument(std::string("invalid JSON argument: ") + e.what());
    }
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int run_eval(const CommonArgs& common, const std::string& team_text,
             const std::string& formula_text) {
    ts::Logic logic = parsed_logic(common);
    ts::Signature sig = parsed_sig(common);
    ts::Formula f = ts::parse(formula_text, sig);
    ts::Team team = ts::team_from_json(sig, parse_inline_json(team_text));

    bool holds;
    if (logic == ts::Logic::CPL) {
        // A set of valuations satisfies classically when every member does.
        holds = true;
        for (const auto& v : team.members())
            holds = holds && ts::eval_classical(sig, v, f);
    } else {
        holds = ts::eval_team(sig, team, f, logic);
    }
    if (common.as_json)
        emit({{"formula", ts::print(f)}, {"result", holds}});
    else
        std::cout << (holds ? "true" : "false") << "\n";
    return holds ? 0 : 1;
}

int run_models(const CommonArgs& common, const std::string& formula_text) {
    ts::Logic logic = parsed_logic(common);
    ts::Signature sig = parsed_sig(common);
    ts::Formula f = ts::parse(formula_text, sig);
    ts::TeamFamily fam = ts::models_of(f, sig, logic);
    if (common.as_json) {
        json j = ts::family_to_json(fam);
        j["count"] = fam.bits.count();
        j["bits"] = fam.bits.to_bit_string();
        emit(j);
    } else {
        std::cout << ts::print(f) << ": " << fam.bits.count() << " of "
                  << fam.bits.size() << " interpretations\n";
        std::cout << "bits " << fam.bits.to_bit_string() << "\n";
    }
    return 0;
}

int run_families(const CommonArgs& common) {
    ts::Logic logic = parsed_logic(common);
    ts::Signature sig = parsed_sig(common);
    auto classes = ts::enumerate_classes(sig, logic);
    if (common.as_json) {
        json list = json::array();
        for (std::size_t i = 0; i < classes->size(); ++i)
            list.push_back(classes->family(i).to_bit_string());
        emit({{"signature", json(sig.vars())},
              {"logic", ts::to_string(logic)},
              {"count", classes->size()},
              {"classes", list}});
    } else {
        std::cout << ts::to_string(logic) << " classes over " << common.sig << ": "
                  << classes->size() << "\n";
    }
    return 0;
}

int run_synth(const CommonArgs& common, const std::string& family_text) {
    ts::Logic logic = parsed_logic(common);
    ts::TeamFamily fam = ts::family_from_json(parse_inline_json(family_text), logic);
    ts::Formula f = ts::synthesize(fam);
    // The synthesized formula is re-checked against the family before it is
    // reported.
    if (!(ts::models_of(f, fam.sig, logic).bits == fam.bits))
        throw ts::Error("synthesized formula failed its extension check");
    if (common.as_json)
        emit({{"formula", ts::print(f)}});
    else
        std::cout << ts::print(f) << "\n";
    return 0;
}

int run_classify(const CommonArgs& common, const std::string& model_path,
                 bool check_star) {
    ts::RelationalModel m = ts::model_from_json(ts::load_json_file(model_path));
    auto classes = ts::enumerate_classes(m.sig, m.logic);
    ts::ModelClassification c = ts::classify(m, *classes, {check_star});
    if (common.as_json) {
        emit(ts::classification_to_json(m, c));
    } else {
        auto flag = [](bool b) { return b ? "yes" : "no"; };
        std::cout << "cumulative:        " << flag(c.cumulative) << "\n"
                  << "strong cumulative: " << flag(c.strong_cumulative) << "\n"
                  << "asymmetric model:  " << flag(c.asymmetric_model) << "\n"
                  << "preferential:      " << flag(c.preferential) << "\n"
                  << "pref[triangle]:    " << flag(c.pref_triangle) << "\n";
        if (c.star_property)
            std::cout << "star property:     " << flag(*c.star_property) << "\n";
    }
    return c.cumulative ? 0 : 1;
}

int run_entail(const CommonArgs& common, const std::string& model_path,
               const std::string& antecedent, const std::string& consequent) {
    ts::RelationalModel m = ts::model_from_json(ts::load_json_file(model_path));
    ts::Formula fa = ts::parse(antecedent, m.sig);
    ts::Formula fb = ts::parse(consequent, m.sig);
    bool holds = ts::entails(m, ts::models_of(fa, m.sig, m.logic).bits,
                             ts::models_of(fb, m.sig, m.logic).bits);
    if (common.as_json)
        emit({{"antecedent", ts::print(fa)},
              {"consequent", ts::print(fb)},
              {"entails", holds}});
    else
        std::cout << (holds ? "true" : "false") << "\n";
    return holds ? 0 : 1;
}

int run_audit(const CommonArgs& common, const std::string& relation_path,
              bool enable_or) {
    ts::EntailmentTable t = ts::table_from_json(ts::load_json_file(relation_path));
    ts::AuditReport report = ts::audit(t, enable_or);
    if (common.as_json) {
        emit(ts::audit_report_to_json(report, t));
    } else {
        for (const auto& r : report.rules) {
            std::cout << ts::to_string(r.rule) << ": "
                      << (r.structurally_enforced ? "enforced"
                                                  : (r.ok() ? "pass" : "fail"));
            if (!r.ok()) {
                std::cout << " (" << r.violation_count << " violations; witness";
                for (std::size_t k = 0; k < r.witness->arity; ++k)
                    std::cout << " " << r.witness->classes[k];
                std::cout << ")";
            }
            std::cout << "\n";
        }
    }
    return report.pass() ? 0 : 1;
}

int run_close(const CommonArgs& common, const std::string& relation_path) {
    ts::EntailmentTable seeds = ts::table_from_json(ts::load_json_file(relation_path));
    ts::EntailmentTable closed = ts::close(seeds.pairs(), seeds.classes_ptr());
    json j = ts::table_to_json(closed);
    j["system_c"] = closed.is_system_c();
    if (common.as_json) {
        emit(j);
    } else {
        std::cout << "closed relation: " << closed.pairs().size() << " pairs over "
                  << closed.size() << " classes\n";
    }
    return 0;
}

int run_klm_build(const CommonArgs& common, const std::string& relation_path) {
    ts::EntailmentTable t = ts::table_from_json(ts::load_json_file(relation_path));
    if (!t.is_system_c()) {
        std::cerr << "relation is not closed under System C; run audit\n";
        return 1;
    }
    ts::RelationalModel m = ts::build_klm_model(t);
    if (common.as_json) {
        emit(ts::model_to_json(m));
    } else {
        std::cout << "canonical model: " << m.state_count() << " states, "
                  << m.edges.size() << " edges\n";
    }
    return 0;
}

void print_report_human(const ts::VerificationReport& r) {
    std::cout << "theorem " << r.theorem << ": " << (r.pass ? "PASS" : "FAIL") << "\n";
    std::cout << "scope: " << r.scope.dump() << "\n";
    std::cout << "counts: " << r.counts.dump() << "\n";
    if (!r.counterexample.is_null())
        std::cout << "counterexample: " << r.counterexample.dump(2) << "\n";
    std::printf("elapsed: %.1f ms\n", r.elapsed_ms);
}

int run_verify(const CommonArgs& common, const std::string& what, int n,
               bool exhaustive, std::size_t samples, std::uint64_t seed,
               unsigned threads, const std::string& relation_path) {
    if (what == "definability") {
        if (relation_path.empty())
            throw ts::InvalidArgument("verify definability requires --relation");
        ts::EntailmentTable t = ts::table_from_json(ts::load_json_file(relation_path));
        if (!t.is_system_c()) {
            std::cerr << "relation is not closed under System C; run audit\n";
            return 1;
        }
        ts::DefinabilityReport r = ts::verify_definability(t);
        if (common.as_json) {
            json j;
            j["theorem"] = "definability";
            j["scope"] = {{"classes", t.size()}, {"pairs", r.pairs_checked}};
            j["status"] = r.pass ? "pass" : "fail";
            j["report"] = ts::definability_report_to_json(r);
            j["ms"] = nullptr;
            emit(j);
        } else {
            std::cout << "definability: " << (r.pass ? "PASS" : "FAIL") << " ("
                      << r.pairs_checked << " pairs)\n";
        }
        return r.pass ? 0 : 1;
    }

    std::vector<std::string> vars{"p", "q"};
    if (n < 1 || n > 2) throw ts::InvalidArgument("--n must be 1 or 2");
    vars.resize(static_cast<std::size_t>(n));
    ts::Signature sig(vars);

    ts::VerifyOptions options;
    options.exhaustive = exhaustive;
    options.seed = seed;
    options.threads = threads;
    if (samples != 0) {
        options.table_samples = samples;
        options.model_samples = 2 * samples;
    }

    ts::VerificationReport report;
    if (what == "rep-pdl")
        report = ts::verify_pdl_representation(sig, options);
    else if (what == "rep-tpl")
        report = ts::verify_tpl_representation(sig, options);
    else
        throw ts::InvalidArgument("unknown verification: " + what);

    if (common.as_json)
        emit(ts::verification_report_to_json(report));
    else
        print_report_human(report);
    return report.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"team-semantics reasoning kernel"};
    app.require_subcommand(1);

    CommonArgs common;
    std::string team_text, formula_text, second_formula, family_text;
    std::string model_path, relation_path;
    bool enable_or = false, check_star = false, exhaustive = false;
    int n = 1;
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    unsigned threads = 0;
    std::string verify_what;

    auto add_common = [&](CLI::App* cmd, bool with_logic_sig) {
        if (with_logic_sig) {
            cmd->add_option("--logic", common.logic, "cpl|tpl|pdl");
            cmd->add_option("--sig", common.sig, "ordered comma-separated variables");
        }
        cmd->add_flag("--json", common.as_json, "machine-readable output");
    };

    auto* eval = app.add_subcommand("eval", "evaluate a formula on a team");
    add_common(eval, true);
    eval->add_option("--team", team_text, "team JSON (array or bit string)")->required();
    eval->add_option("formula", formula_text, "formula text")->required();

    auto* models = app.add_subcommand("models", "enumerate the extension of a formula");
    add_common(models, true);
    models->add_option("formula", formula_text, "formula text")->required();

    auto* families = app.add_subcommand("families", "enumerate definable classes");
    add_common(families, true);

    auto* synth = app.add_subcommand("synth", "synthesize a defining formula");
    add_common(synth, true);
    synth->add_option("family", family_text, "family JSON (inline or @file)")->required();

    auto* classify = app.add_subcommand("classify-model", "classify a relational model");
    add_common(classify, false);
    classify->add_option("--model", model_path, "model JSON file")->required();
    classify->add_flag("--star", check_star, "also check the star property");

    auto* entail = app.add_subcommand("entail", "model-induced entailment");
    add_common(entail, false);
    entail->add_option("--model", model_path, "model JSON file")->required();
    entail->add_option("antecedent", formula_text, "antecedent formula")->required();
    entail->add_option("consequent", second_formula, "consequent formula")->required();

    auto* auditc = app.add_subcommand("audit", "audit a relation against System C");
    add_common(auditc, false);
    auditc->add_option("--relation", relation_path, "relation JSON file")->required();
    auditc->add_flag("--or", enable_or, "also check the Or rule (System P)");

    auto* closec = app.add_subcommand("close", "close seed pairs under System C");
    add_common(closec, false);
    closec->add_option("--relation", relation_path, "seed relation JSON file")->required();

    auto* klm = app.add_subcommand("klm-build", "build the canonical model of a relation");
    add_common(klm, false);
    klm->add_option("--relation", relation_path, "relation JSON file")->required();

    auto* verify = app.add_subcommand("verify", "run a theorem verification");
    add_common(verify, false);
    verify->add_option("what", verify_what, "rep-pdl | rep-tpl | definability")
        ->required();
    verify->add_option("--n", n, "signature size (1 or 2)");
    verify->add_flag("--exhaustive", exhaustive, "exhaustive candidate enumeration");
    verify->add_option("--samples", samples, "sampled tables (models default to 2x)");
    verify->add_option("--seed", seed, "RNG seed");
    verify->add_option("--threads", threads, "worker threads (0 = all)");
    verify->add_option("--relation", relation_path, "relation JSON (definability)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (eval->parsed()) return run_eval(common, team_text, formula_text);
        if (models->parsed()) return run_models(common, formula_text);
        if (families->parsed()) return run_families(common);
        if (synth->parsed()) return run_synth(common, family_text);
        if (classify->parsed()) return run_classify(common, model_path, check_star);
        if (entail->parsed())
            return run_entail(common, model_path, formula_text, second_formula);
        if (auditc->parsed()) return run_audit(common, relation_path, enable_or);
        if (closec->parsed()) return run_close(common, relation_path);
        if (klm->parsed()) return run_klm_build(common, relation_path);
        if (verify->parsed())
            return run_verify(common, verify_what, n, exhaustive, samples, seed,
                              threads, relation_path);
    } catch (const ts::ParseError& e) {
        std::cerr << "parse error at offset " << e.position() << ": " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
