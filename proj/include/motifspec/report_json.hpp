#pragma once

// JSON report schema, version 1.
//
//   {
//     "schema_version": 1,
//     "graph":        {"order": n, "edges": [[u, v], ...]},
//     "operation":    {"name": "...", "params": {...}},
//     "vertex_map":   {"image": [...], "created": [[...], ...]},
//     "claims":       [{"lambda": 1.5, "exact": "3/2", "multiplicity_at_least": 1,
//                       "provenance": "ATTACH_COR2", "eigenfunctions": [[...]]}],
//     "warnings":     ["..."],
//     "verification": [{"kind": "claim", ...} | {"kind": "check", ...}]
//   }
//
// Doubles are written in shortest round-trip form; a non-finite residual is
// written as null and read back as +inf.

#include <string>
#include <vector>

#include <json.hpp>

#include "motifspec/evolution.hpp"
#include "motifspec/families.hpp"
#include "motifspec/spectral.hpp"
#include "motifspec/verify.hpp"

namespace motifspec {

inline constexpr int kSchemaVersion = 1;

struct Report {
  Graph graph;
  std::string operation;
  nlohmann::json params = nlohmann::json::object();
  VertexMap map;
  std::vector<EigenClaim> claims;
  std::vector<std::string> warnings;
  VerificationReport verification;

  friend bool operator==(const Report&, const Report&) = default;
};

Report make_report(const OperationResult& result, std::string operation,
                   nlohmann::json params = nlohmann::json::object());

nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

nlohmann::json claim_to_json(const EigenClaim& c);
EigenClaim claim_from_json(const nlohmann::json& j);

nlohmann::json verification_to_json(const VerificationReport& r);
VerificationReport verification_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const Report& r);
// Throws InvalidArgument on a missing section, a wrong type, or a
// schema_version other than 1.
Report report_from_json(const nlohmann::json& j);

nlohmann::json spectrum_to_json(const Spectrum& s);
nlohmann::json expected_spectrum_to_json(const ExpectedSpectrum& e);
ExpectedSpectrum expected_spectrum_from_json(const nlohmann::json& j);

}  // namespace motifspec
