#include "teamsem/json_io.hpp"

#include <fstream>

#include "teamsem/error.hpp"
#include "teamsem/parse.hpp"

namespace teamsem {

namespace {

Signature signature_from_json(const json& j) {
    if (!j.is_array()) throw InvalidArgument("signature must be an array of names");
    std::vector<std::string> vars;
    for (const auto& v : j) vars.push_back(v.get<std::string>());
    return Signature(std::move(vars));
}

json signature_to_json(const Signature& sig) {
    json j = json::array();
    for (const auto& v : sig.vars()) j.push_back(v);
    return j;
}

}  // namespace

json valuation_to_json(const Signature& sig, const Valuation& v) {
    json j = json::object();
    for (std::size_t i = 0; i < sig.size(); ++i) j[sig.var(i)] = v.value(i) ? 1 : 0;
    return j;
}

Valuation valuation_from_json(const Signature& sig, const json& j) {
    if (!j.is_object()) throw InvalidArgument("valuation must be a JSON object");
    if (j.size() != sig.size())
        throw InvalidArgument("valuation must cover exactly the signature");
    Valuation v;
    for (const auto& [key, value] : j.items()) {
        auto idx = sig.index_of(key);
        if (!idx) throw InvalidArgument("valuation variable '" + key + "' not in signature");
        if (!value.is_number_integer() || (value != 0 && value != 1))
            throw InvalidArgument("valuation values must be 0 or 1");
        if (value == 1) v.bits |= 1ull << *idx;
    }
    return v;
}

json team_to_json(const Signature& sig, const Team& t) {
    json j = json::array();
    for (const auto& v : t.members()) j.push_back(valuation_to_json(sig, v));
    return j;
}

Team team_from_json(const Signature& sig, const json& j) {
    if (j.is_string()) {
        // Bit-string form over the canonical valuation order.
        const std::string s = j.get<std::string>();
        if (s.size() != (std::size_t{1} << sig.size()))
            throw InvalidArgument("team bit string must have length 2^|signature|");
        std::vector<Valuation> members;
        for (std::size_t v = 0; v < s.size(); ++v) {
            if (s[v] == '1')
                members.push_back(Valuation{v});
            else if (s[v] != '0')
                throw InvalidArgument("team bit string must contain only 0 and 1");
        }
        return Team(std::move(members));
    }
    if (!j.is_array()) throw InvalidArgument("team must be an array or a bit string");
    std::vector<Valuation> members;
    for (const auto& vj : j) members.push_back(valuation_from_json(sig, vj));
    return Team(std::move(members));
}

json family_to_json(const TeamFamily& f) {
    json j;
    j["signature"] = signature_to_json(f.sig);
    if (is_team_logic(f.logic)) {
        json teams = json::array();
        for (const auto& t : f.teams()) teams.push_back(team_to_json(f.sig, t));
        j["teams"] = teams;
    } else {
        json vals = json::array();
        for (std::size_t v = f.bits.find_first(); v < f.bits.size();
             v = f.bits.find_next(v + 1))
            vals.push_back(valuation_to_json(f.sig, Valuation{v}));
        j["valuations"] = vals;
    }
    return j;
}

TeamFamily family_from_json(const json& j, Logic logic) {
    if (!j.is_object() || !j.contains("signature"))
        throw InvalidArgument("family requires a signature");
    Signature sig = signature_from_json(j.at("signature"));
    std::size_t space = interpretation_count(logic, sig.size());
    DynBitset bits(space);
    if (j.contains("bits")) {
        const std::string s = j.at("bits").get<std::string>();
        if (s.size() != space)
            throw InvalidArgument("family bit string has the wrong length");
        bits = DynBitset::from_bit_string(s);
    } else if (is_team_logic(logic)) {
        if (!j.contains("teams"))
            throw InvalidArgument("family requires 'teams' or 'bits'");
        for (const auto& tj : j.at("teams"))
            bits.set(team_from_json(sig, tj).to_mask(sig));
    } else {
        if (!j.contains("valuations"))
            throw InvalidArgument("family requires 'valuations' or 'bits'");
        for (const auto& vj : j.at("valuations"))
            bits.set(valuation_from_json(sig, vj).bits);
    }
    return TeamFamily(std::move(sig), logic, std::move(bits));
}

json model_to_json(const RelationalModel& m) {
    json j;
    j["signature"] = signature_to_json(m.sig);
    j["logic"] = to_string(m.logic);
    json states = json::array();
    for (std::size_t s = 0; s < m.state_count(); ++s) {
        json label = json::array();
        if (is_team_logic(m.logic)) {
            for (std::size_t t = m.labels[s].find_first(); t < m.labels[s].size();
                 t = m.labels[s].find_next(t + 1))
                label.push_back(team_to_json(m.sig, Team::from_mask(m.sig, t)));
        } else {
            for (std::size_t v = m.labels[s].find_first(); v < m.labels[s].size();
                 v = m.labels[s].find_next(v + 1))
                label.push_back(valuation_to_json(m.sig, Valuation{v}));
        }
        states.push_back({{"id", m.state_ids[s]}, {"label", label}});
    }
    j["states"] = states;
    json rel = json::array();
    for (const auto& [a, b] : m.edges)
        rel.push_back({m.state_ids[a], m.state_ids[b]});
    j["relation"] = rel;
    return j;
}

RelationalModel model_from_json(const json& j) {
    Signature sig = signature_from_json(j.at("signature"));
    Logic logic = logic_from_string(j.at("logic").get<std::string>());
    RelationalModel m(std::move(sig), logic);
    std::size_t space = interpretation_count(logic, m.sig.size());
    for (const auto& sj : j.at("states")) {
        DynBitset label(space);
        for (const auto& lj : sj.at("label")) {
            if (is_team_logic(logic))
                label.set(team_from_json(m.sig, lj).to_mask(m.sig));
            else
                label.set(valuation_from_json(m.sig, lj).bits);
        }
        m.add_state(sj.at("id").get<std::string>(), std::move(label));
    }
    for (const auto& ej : j.at("relation")) {
        if (!ej.is_array() || ej.size() != 2)
            throw InvalidArgument("relation entries must be [from, to] pairs");
        std::optional<std::uint32_t> from, to;
        for (std::size_t s = 0; s < m.state_count(); ++s) {
            if (m.state_ids[s] == ej[0].get<std::string>())
                from = static_cast<std::uint32_t>(s);
            if (m.state_ids[s] == ej[1].get<std::string>())
                to = static_cast<std::uint32_t>(s);
        }
        if (!from || !to) throw InvalidArgument("relation references an unknown state id");
        m.add_edge(*from, *to);
    }
    return m;
}

json table_to_json(const EntailmentTable& t) {
    json j;
    j["signature"] = signature_to_json(t.classes().sig());
    j["logic"] = to_string(t.classes().logic());
    j["classes"] = t.classes().size();
    json pairs = json::array();
    for (const auto& [a, b] : t.pairs()) pairs.push_back({a, b});
    j["class_pairs"] = pairs;
    return j;
}

EntailmentTable table_from_json(const json& j) {
    Signature sig = signature_from_json(j.at("signature"));
    Logic logic = logic_from_string(j.at("logic").get<std::string>());
    return table_from_json(j, enumerate_classes(sig, logic));
}

EntailmentTable table_from_json(const json& j,
                                std::shared_ptr<const ClassIndex> classes) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    if (j.contains("class_pairs")) {
        for (const auto& pj : j.at("class_pairs")) {
            if (!pj.is_array() || pj.size() != 2)
                throw InvalidArgument("class_pairs entries must be [i, j]");
            pairs.emplace_back(pj[0].get<std::size_t>(), pj[1].get<std::size_t>());
        }
    } else if (j.contains("pairs")) {
        // Formula pairs; each side is mapped to its semantic class.
        for (const auto& pj : j.at("pairs")) {
            if (!pj.is_array() || pj.size() != 2)
                throw InvalidArgument("pairs entries must be [formula, formula]");
            auto class_of = [&](const std::string& text) {
                Formula f = parse(text, classes->sig());
                auto idx = classes->index_of(
                    models_of(f, classes->sig(), classes->logic()).bits);
                if (!idx) throw Error("formula class missing from the index");
                return *idx;
            };
            pairs.emplace_back(class_of(pj[0].get<std::string>()),
                               class_of(pj[1].get<std::string>()));
        }
    } else {
        throw InvalidArgument("relation requires 'pairs' or 'class_pairs'");
    }
    return EntailmentTable::from_pairs(std::move(classes), pairs);
}

json classification_to_json(const RelationalModel& m, const ModelClassification& c) {
    json j;
    j["cumulative"] = c.cumulative;
    j["strong_cumulative"] = c.strong_cumulative;
    j["asymmetric_model"] = c.asymmetric_model;
    j["preferential"] = c.preferential;
    j["pref_triangle"] = c.pref_triangle;
    j["star_property"] = c.star_property ? json(*c.star_property) : json(nullptr);
    json w = json::object();
    auto class_witness = [&](const ClassWitness& cw) {
        json x;
        x["class"] = cw.class_index;
        if (cw.second_class) x["second_class"] = *cw.second_class;
        if (cw.state) x["state"] = m.state_ids[*cw.state];
        return x;
    };
    if (c.cumulative_witness) w["not_smooth"] = class_witness(*c.cumulative_witness);
    if (c.strong_witness) w["min_not_unique"] = class_witness(*c.strong_witness);
    if (c.star_witness) w["star"] = class_witness(*c.star_witness);
    if (c.label_shape_witness)
        w["non_singleton_label"] = m.state_ids[*c.label_shape_witness];
    if (c.relation_witness)
        w["relation"] = {m.state_ids[c.relation_witness->first],
                         m.state_ids[c.relation_witness->second]};
    j["witnesses"] = w;
    if (c.star_property) j["star_pairs_skipped"] = c.star_pairs_skipped;
    return j;
}

json audit_report_to_json(const AuditReport& r, const EntailmentTable& t) {
    (void)t;
    json j;
    j["pass"] = r.pass();
    json rules = json::array();
    for (const auto& s : r.rules) {
        json rj;
        rj["rule"] = to_string(s.rule);
        rj["status"] =
            s.structurally_enforced ? "enforced" : (s.ok() ? "pass" : "fail");
        rj["violations"] = s.violation_count;
        if (s.witness) {
            json cls = json::array();
            for (std::size_t k = 0; k < s.witness->arity; ++k)
                cls.push_back(s.witness->classes[k]);
            rj["witness"] = cls;
        } else {
            rj["witness"] = nullptr;
        }
        rules.push_back(rj);
    }
    j["rules"] = rules;
    return j;
}

json definability_report_to_json(const DefinabilityReport& r) {
    json j;
    j["pass"] = r.pass;
    j["pairs_checked"] = r.pairs_checked;
    json mm = json::array();
    for (const auto& m : r.mismatches)
        mm.push_back({{"antecedent", m.antecedent},
                      {"consequent", m.consequent},
                      {"in_table", m.in_table}});
    j["mismatches"] = mm;
    j["theta"] = r.theta;
    j["theta_roundtrip_failures"] = r.theta_roundtrip_failures;
    return j;
}

json verification_report_to_json(const VerificationReport& r) {
    json j;
    j["theorem"] = r.theorem;
    j["scope"] = r.scope;
    j["status"] = r.pass ? "pass" : "fail";
    j["counterexample"] = r.counterexample.is_null() ? json(nullptr) : r.counterexample;
    j["counts"] = r.counts;
    j["seed"] = r.seed;
    // Wall-clock time is intentionally absent: reports must be byte-stable
    // across reruns.  Human-readable output prints it instead.
    j["ms"] = nullptr;
    return j;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArgument("invalid JSON in " + path + ": " + e.what());
    }
    return j;
}

}  // namespace teamsem
