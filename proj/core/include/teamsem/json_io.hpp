#ifndef TEAMSEM_JSON_IO_HPP
#define TEAMSEM_JSON_IO_HPP

#include <json.hpp>

#include "teamsem/representation.hpp"

namespace teamsem {

using json = nlohmann::ordered_json;

// Wire formats (see README for the full grammar):
//   valuation  {"p":0,"q":1}                      covers the signature
//   team       [valuation, ...] or "0110"         bit i = valuation i member
//   family     {"signature":[...],"teams":[...]}  or {"signature":.., "bits":".."}
//   model      {"signature":[...],"logic":"PDL","states":[{"id":..,"label":[..]}],
//               "relation":[["s1","s2"],...]}
//   relation   {"signature":[...],"logic":"pdl","pairs":[["f","g"],...]}
//              or {..., "class_pairs":[[i,j],...]} against the canonical
//              class order of enumerate_classes.

json valuation_to_json(const Signature& sig, const Valuation& v);
Valuation valuation_from_json(const Signature& sig, const json& j);

json team_to_json(const Signature& sig, const Team& t);
Team team_from_json(const Signature& sig, const json& j);

json family_to_json(const TeamFamily& f);
TeamFamily family_from_json(const json& j, Logic logic);

json model_to_json(const RelationalModel& m);
RelationalModel model_from_json(const json& j);

json table_to_json(const EntailmentTable& t);
EntailmentTable table_from_json(const json& j);
// As above but reuses an already enumerated index of the same shape.
EntailmentTable table_from_json(const json& j, std::shared_ptr<const ClassIndex> classes);

json classification_to_json(const RelationalModel& m, const ModelClassification& c);
json audit_report_to_json(const AuditReport& r, const EntailmentTable& t);
json definability_report_to_json(const DefinabilityReport& r);
json verification_report_to_json(const VerificationReport& r);

json load_json_file(const std::string& path);

}  // namespace teamsem

#endif  // TEAMSEM_JSON_IO_HPP
