#include "motifspec/report_json.hpp"

#include <cmath>
#include <limits>

#include "motifspec/errors.hpp"

namespace motifspec {

using nlohmann::json;

namespace {

const json& section(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw InvalidArgument(std::string("report: missing \"") + key + "\"");
  }
  return j.at(key);
}

json finite_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

double number_or_inf(const json& j) {
  return j.is_null() ? std::numeric_limits<double>::infinity() : j.get<double>();
}

// Runs a decoder, turning library type errors into InvalidArgument.
template <typename F>
auto decode(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("report: bad ") + what + ": " + e.what());
  }
}

Provenance provenance_from(const json& j) {
  const auto tag = j.get<std::string>();
  const auto p = parse_provenance(tag);
  if (!p) throw InvalidArgument("report: unknown provenance \"" + tag + "\"");
  return *p;
}

std::optional<Rational> exact_from(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  const auto text = j.at(key).get<std::string>();
  auto r = Rational::parse(text);
  if (!r) throw InvalidArgument("report: malformed rational \"" + text + "\"");
  return r;
}

}  // namespace

json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  return {{"order", g.order()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const json& j) {
  return decode("graph", [&] {
    const auto n = section(j, "order").get<std::size_t>();
    std::vector<Edge> edges;
    for (const auto& e : section(j, "edges")) {
      if (!e.is_array() || e.size() != 2) throw InvalidArgument("report: edge must be a pair");
      edges.emplace_back(e[0].get<Vertex>(), e[1].get<Vertex>());
    }
    return Graph::from_edges(n, edges);
  });
}

json claim_to_json(const EigenClaim& c) {
  json j = {{"lambda", c.lambda},
            {"exact", c.exact ? json(c.exact->to_string()) : json(nullptr)},
            {"multiplicity_at_least", c.multiplicity_at_least},
            {"provenance", provenance_tag(c.provenance)},
            {"eigenfunctions", c.eigenfunctions}};
  return j;
}

EigenClaim claim_from_json(const json& j) {
  return decode("claim", [&] {
    EigenClaim c;
    c.lambda = section(j, "lambda").get<double>();
    c.exact = exact_from(j, "exact");
    c.multiplicity_at_least = section(j, "multiplicity_at_least").get<std::size_t>();
    c.provenance = provenance_from(section(j, "provenance"));
    c.eigenfunctions = section(j, "eigenfunctions").get<std::vector<std::vector<double>>>();
    return c;
  });
}

json verification_to_json(const VerificationReport& r) {
  json out = json::array();
  for (const auto& c : r.claims) {
    out.push_back({{"kind", "claim"},
                   {"provenance", provenance_tag(c.provenance)},
                   {"lambda", c.lambda},
                   {"multiplicity_at_least", c.multiplicity_at_least},
                   {"residual_max", finite_or_null(c.residual_max)},
                   {"rank", c.rank},
                   {"numeric_multiplicity", c.numeric_multiplicity},
                   {"oracle_multiplicity", c.oracle_multiplicity},
                   {"passed", c.passed}});
  }
  for (const auto& c : r.checks) {
    out.push_back({{"kind", "check"}, {"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  }
  return out;
}

VerificationReport verification_from_json(const json& j) {
  return decode("verification", [&] {
    if (!j.is_array()) throw InvalidArgument("report: verification must be an array");
    VerificationReport r;
    for (const auto& rec : j) {
      const auto kind = section(rec, "kind").get<std::string>();
      if (kind == "claim") {
        ClaimRecord c;
        c.provenance = provenance_from(section(rec, "provenance"));
        c.lambda = section(rec, "lambda").get<double>();
        c.multiplicity_at_least = section(rec, "multiplicity_at_least").get<std::size_t>();
        c.residual_max = number_or_inf(section(rec, "residual_max"));
        c.rank = section(rec, "rank").get<std::size_t>();
        c.numeric_multiplicity = section(rec, "numeric_multiplicity").get<std::size_t>();
        c.oracle_multiplicity = section(rec, "oracle_multiplicity").get<std::size_t>();
        c.passed = section(rec, "passed").get<bool>();
        r.claims.push_back(c);
      } else if (kind == "check") {
        r.checks.push_back({section(rec, "name").get<std::string>(), section(rec, "passed").get<bool>(),
                            section(rec, "detail").get<std::string>()});
      } else {
        throw InvalidArgument("report: unknown verification kind \"" + kind + "\"");
      }
    }
    return r;
  });
}

Report make_report(const OperationResult& result, std::string operation, json params) {
  Report r;
  r.graph = result.graph;
  r.operation = std::move(operation);
  r.params = std::move(params);
  r.map = result.map;
  r.claims = result.claims;
  r.warnings = result.warnings;
  return r;
}

json report_to_json(const Report& r) {
  json claims = json::array();
  for (const auto& c : r.claims) claims.push_back(claim_to_json(c));
  return {{"schema_version", kSchemaVersion},
          {"graph", graph_to_json(r.graph)},
          {"operation", {{"name", r.operation}, {"params", r.params}}},
          {"vertex_map", {{"image", r.map.image}, {"created", r.map.created}}},
          {"claims", std::move(claims)},
          {"warnings", r.warnings},
          {"verification", verification_to_json(r.verification)}};
}

Report report_from_json(const json& j) {
  return decode("report", [&] {
    const auto version = section(j, "schema_version").get<int>();
    if (version != kSchemaVersion) {
      throw InvalidArgument("report: unsupported schema_version " + std::to_string(version));
    }
    Report r;
    r.graph = graph_from_json(section(j, "graph"));
    const auto& op = section(j, "operation");
    r.operation = section(op, "name").get<std::string>();
    r.params = op.value("params", json::object());
    const auto& map = section(j, "vertex_map");
    r.map.image = section(map, "image").get<std::vector<Vertex>>();
    r.map.created = section(map, "created").get<std::vector<std::vector<Vertex>>>();
    for (const auto& c : section(j, "claims")) r.claims.push_back(claim_from_json(c));
    r.warnings = j.value("warnings", std::vector<std::string>{});
    if (j.contains("verification")) r.verification = verification_from_json(j.at("verification"));
    return r;
  });
}

json spectrum_to_json(const Spectrum& s) {
  json groups = json::array();
  for (const auto& g : s.groups()) {
    json entry = {{"value", g.value}, {"multiplicity", g.multiplicity}};
    if (auto r = recognize_rational(g.value, 1000, s.group_tol)) entry["exact"] = r->to_string();
    groups.push_back(std::move(entry));
  }
  return {{"schema_version", kSchemaVersion},
          {"eigenvalues", s.eigenvalues},
          {"groups", std::move(groups)},
          {"group_tol", s.group_tol},
          {"max_residual", s.max_residual}};
}

json expected_spectrum_to_json(const ExpectedSpectrum& e) {
  json entries = json::array();
  for (const auto& x : e.entries) {
    entries.push_back({{"value", x.value},
                       {"exact", x.exact ? json(x.exact->to_string()) : json(nullptr)},
                       {"multiplicity", x.multiplicity}});
  }
  json j = {{"schema_version", kSchemaVersion}, {"entries", std::move(entries)}, {"full", e.full}};
  j["residual_pair_sum"] = e.residual_pair_sum ? json(*e.residual_pair_sum) : json(nullptr);
  return j;
}

ExpectedSpectrum expected_spectrum_from_json(const json& j) {
  return decode("expected spectrum", [&] {
    ExpectedSpectrum e;
    for (const auto& x : section(j, "entries")) {
      e.entries.push_back({section(x, "value").get<double>(), exact_from(x, "exact"),
                           section(x, "multiplicity").get<std::size_t>()});
    }
    e.full = section(j, "full").get<bool>();
    if (j.contains("residual_pair_sum") && !j.at("residual_pair_sum").is_null()) {
      e.residual_pair_sum = j.at("residual_pair_sum").get<double>();
    }
    return e;
  });
}

}  // namespace motifspec
