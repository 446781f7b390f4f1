#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "tempered/criteria.hpp"

namespace tempered {

using Json = nlohmann::ordered_json;

/// Parses a PairSpec document. Unknown fields, non-integer numbers and malformed
/// rationals are rejected with InputError.
PairSpec parse_pair_spec(const Json& doc);
PairSpec parse_pair_spec_text(const std::string& text);
PairSpec load_pair_spec(const std::string& path);

/// Rationals are strings "p/q" (or "p" when integral).
Json to_json(const Scalar& x);
Json to_json(const Vector& v);
Json to_json(const Matrix& m);
Json basis_json(const Subspace& w);
Scalar scalar_from_json(const Json& j);
Vector vector_from_json(const Json& j);

struct OutputOptions {
  bool timings = false;  // timings break byte-identical output, so they are opt-in
};

Json config_json(const CriteriaConfig& config);
Json verdict_json(const CriterionVerdict& v, const OutputOptions& out = {});
Json limit_json(const LimitWitness& w);
Json rho_json(const RhoReport& r);
Json report_json(const TemperednessReport& r, const OutputOptions& out = {});
Json catalog_json(const std::vector<TemperednessReport>& reports, const CriteriaConfig& config,
                  const OutputOptions& out = {});

/// One line per criterion with verdict, trials and timing.
std::string report_text(const TemperednessReport& r);
/// Summary table: label, five verdicts, consistency.
std::string catalog_text(const std::vector<TemperednessReport>& reports);
std::string rho_text(const RhoReport& r);
std::string limit_text(const LieAlgebra& g, const LimitWitness& w);

}  // namespace tempered
