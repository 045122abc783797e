#include <doctest.h>

#include "teamsem/json_io.hpp"

#include "support.hpp"

using namespace teamsem;
using support::sig1;
using support::sig2;
using support::sig3;

TEST_CASE("valuation and team wire forms") {
    Signature sig = sig3();

    SUBCASE("object form") {
        json j = json::parse(R"({"p":1,"q":0,"r":0})");
        Valuation v = valuation_from_json(sig, j);
        CHECK(v.bits == 0b001);
        CHECK(valuation_to_json(sig, v) == j);
    }
    SUBCASE("duplicate rows collapse") {
        json j = json::parse(
            R"([{"p":1,"q":0,"r":0},{"p":0,"q":1,"r":0},{"p":0,"q":1,"r":0}])");
        Team t = team_from_json(sig, j);
        CHECK(t.size() == 2);
    }
    SUBCASE("bit-string form over the canonical valuation order") {
        Signature s = sig2();
        Team t = team_from_json(s, json("0110"));
        CHECK(t.to_mask(s) == 0b0110);
        CHECK(team_from_json(s, team_to_json(s, t)) == t);
    }
    SUBCASE("malformed inputs") {
        CHECK_THROWS_AS(valuation_from_json(sig, json::parse(R"({"p":1})")),
                        InvalidArgument);
        CHECK_THROWS_AS(valuation_from_json(sig, json::parse(R"({"p":2,"q":0,"r":0})")),
                        InvalidArgument);
        CHECK_THROWS_AS(team_from_json(sig2(), json("01x0")), InvalidArgument);
        CHECK_THROWS_AS(team_from_json(sig2(), json("011")), InvalidArgument);
    }
}

TEST_CASE("family wire forms") {
    Signature sig = sig1();
    TeamFamily fam(sig, Logic::PDL, DynBitset::from_value(4, 0b0111));

    json j = family_to_json(fam);
    CHECK(j.at("teams").size() == 3);
    TeamFamily back = family_from_json(j, Logic::PDL);
    CHECK(back.bits == fam.bits);

    json bits_form = {{"signature", {"p"}}, {"bits", "1110"}};
    CHECK(family_from_json(bits_form, Logic::PDL).bits == fam.bits);

    SUBCASE("CPL families serialize valuations") {
        TeamFamily cpl(sig, Logic::CPL, DynBitset::from_value(2, 0b10));
        json cj = family_to_json(cpl);
        CHECK(cj.contains("valuations"));
        CHECK(family_from_json(cj, Logic::CPL).bits == cpl.bits);
    }
}

TEST_CASE("model wire form matches the documented shape") {
    const char* text = R"({
      "signature": ["p", "q"],
      "logic": "PDL",
      "states": [
        {"id": "s1", "label": [[{"p":1,"q":0}]]},
        {"id": "s2", "label": [[{"p":0,"q":0}], [{"p":0,"q":0},{"p":1,"q":1}]]},
        {"id": "void", "label": []}
      ],
      "relation": [["s1","s2"], ["s1","void"]]
    })";
    RelationalModel m = model_from_json(json::parse(text));
    CHECK(m.logic == Logic::PDL);
    REQUIRE(m.state_count() == 3);
    CHECK(m.labels[0].count() == 1);
    CHECK(m.labels[1].count() == 2);
    CHECK(m.labels[2].none());
    CHECK(m.has_edge(0, 1));
    CHECK(m.has_edge(0, 2));

    RelationalModel back = model_from_json(model_to_json(m));
    CHECK(back.labels == m.labels);
    CHECK(back.edges == m.edges);
    CHECK(back.state_ids == m.state_ids);

    SUBCASE("unknown state ids in the relation are rejected") {
        json broken = json::parse(text);
        broken["relation"].push_back({"s1", "nope"});
        CHECK_THROWS_AS(model_from_json(broken), InvalidArgument);
    }
}

TEST_CASE("CPL model labels are valuation arrays") {
    const char* text = R"({
      "signature": ["p"],
      "logic": "CPL",
      "states": [{"id": "s1", "label": [{"p":1},{"p":0}]}],
      "relation": []
    })";
    RelationalModel m = model_from_json(json::parse(text));
    CHECK(m.labels[0].count() == 2);
    CHECK(model_from_json(model_to_json(m)).labels == m.labels);
}

TEST_CASE("relation wire forms") {
    auto classes = enumerate_classes(sig1(), Logic::PDL);

    SUBCASE("formula pairs map to classes") {
        json j = {{"signature", {"p"}}, {"logic", "pdl"}};
        j["pairs"] = json::array({json::array({"top", "!p"}),
                                  json::array({"p | !p", "=(;p) | =(;p)"})});
        EntailmentTable t = table_from_json(j, classes);
        CHECK(t.contains(4, 1));  // ⊤ ⊢ ¬p
        // p|!p and =(;p)|=(;p) both define the full team lattice.
        CHECK(t.contains(4, 4));
        CHECK(t.pairs().size() == 2);
    }
    SUBCASE("class pairs against the canonical order") {
        json j = {{"signature", {"p"}}, {"logic", "pdl"}, {"class_pairs", {{4, 1}}}};
        EntailmentTable t = table_from_json(j);
        CHECK(t.contains(4, 1));
        CHECK(t.pairs().size() == 1);
    }
    SUBCASE("round trip through table_to_json") {
        EntailmentTable closed = close({{4, 1}}, classes);
        EntailmentTable back = table_from_json(table_to_json(closed), classes);
        CHECK(back == closed);
        CHECK(back.is_system_c());
    }
    SUBCASE("missing keys are rejected") {
        json j = {{"signature", {"p"}}, {"logic", "pdl"}};
        CHECK_THROWS_AS(table_from_json(j), InvalidArgument);
    }
}

TEST_CASE("report serializations are stable shapes") {
    auto classes = enumerate_classes(sig1(), Logic::PDL);
    EntailmentTable sem = EntailmentTable::semantic(classes);
    json a = audit_report_to_json(audit(sem), sem);
    CHECK(a.at("pass") == true);
    CHECK(a.at("rules").size() == 5);

    DefinabilityReport d = verify_definability(sem);
    json dj = definability_report_to_json(d);
    CHECK(dj.at("pass") == true);
    CHECK(dj.at("theta").size() == 5);
}
