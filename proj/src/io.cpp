#include "tempered/io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include "tempered/errors.hpp"

namespace tempered {

namespace {

void require_object(const Json& j, const std::string& where, const std::set<std::string>& allowed) {
  if (!j.is_object()) throw InputError(where + " must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (!allowed.count(key)) throw InputError("unknown field '" + key + "' in " + where);
  }
}

int int_field(const Json& j, const std::string& key, const std::string& where) {
  const auto& v = j.at(key);
  if (!v.is_number_integer()) throw InputError("'" + key + "' in " + where + " must be an integer");
  return v.get<int>();
}

std::vector<Vector> rows_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) throw InputError(where + " must be an array of rows");
  std::vector<Vector> rows;
  for (const auto& r : j) rows.push_back(vector_from_json(r));
  return rows;
}

AlgebraPreset parse_preset(const Json& j) {
  require_object(j, "algebra", {"type", "n", "summands"});
  if (!j.contains("type") || !j["type"].is_string()) throw InputError("algebra needs a string 'type'");
  AlgebraPreset p;
  p.type = j["type"].get<std::string>();
  if (p.type == "sum") {
    if (!j.contains("summands") || !j["summands"].is_array()) throw InputError("sum algebra needs 'summands'");
    for (const auto& s : j["summands"]) p.summands.push_back(parse_preset(s));
  } else {
    if (!j.contains("n")) throw InputError("algebra '" + p.type + "' needs 'n'");
    p.n = int_field(j, "n", "algebra");
  }
  return p;
}

ExplicitAlgebra parse_explicit(const Json& j) {
  require_object(j, "algebra", {"dim", "structure_constants", "labels"});
  if (!j.contains("dim")) throw InputError("explicit algebra needs 'dim'");
  const int dim = int_field(j, "dim", "algebra");
  if (dim < 0) throw InputError("algebra dim must be nonnegative");
  const auto n = static_cast<std::size_t>(dim);
  ExplicitAlgebra ex;
  ex.constants.assign(n, std::vector<std::vector<Scalar>>(n, std::vector<Scalar>(n, Scalar(0))));
  std::vector<std::vector<std::vector<char>>> given(n, std::vector<std::vector<char>>(n, std::vector<char>(n, 0)));
  const auto& sc = j.at("structure_constants");
  if (!sc.is_array()) throw InputError("'structure_constants' must be an array of [i, j, k, value]");
  for (const auto& entry : sc) {
    if (!entry.is_array() || entry.size() != 4) throw InputError("structure constant entries are [i, j, k, value]");
    std::size_t idx[3];
    for (int a = 0; a < 3; ++a) {
      if (!entry[a].is_number_unsigned() && !(entry[a].is_number_integer() && entry[a].get<long long>() >= 0)) {
        throw InputError("structure constant index must be a nonnegative integer");
      }
      idx[a] = entry[a].get<std::size_t>();
      if (idx[a] >= n) throw InputError("structure constant index out of range");
    }
    const auto [i, jj, k] = std::tuple(idx[0], idx[1], idx[2]);
    ex.constants[i][jj][k] = scalar_from_json(entry[3]);
    given[i][jj][k] = 1;
  }
  // Entries listed for (i, j) only are completed antisymmetrically.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t jj = 0; jj < n; ++jj)
      for (std::size_t k = 0; k < n; ++k)
        if (given[i][jj][k] && !given[jj][i][k]) ex.constants[jj][i][k] = -ex.constants[i][jj][k];
  if (j.contains("labels")) {
    if (!j["labels"].is_array()) throw InputError("'labels' must be an array of strings");
    for (const auto& l : j["labels"]) {
      if (!l.is_string()) throw InputError("'labels' must be an array of strings");
      ex.labels.push_back(l.get<std::string>());
    }
    if (ex.labels.size() != n) throw InputError("'labels' must have one entry per basis element");
  }
  return ex;
}

const char* sign_name(int sign) { return sign < 0 ? "exp(-tX)" : "exp(+tX)"; }

std::string verdict_cell(const CriterionVerdict& v) {
  std::string s = to_string(v.verdict);
  if (v.probabilistic) s += "*";
  return s;
}

}  // namespace

Scalar scalar_from_json(const Json& j) {
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(mpz_class(j.dump()));
  throw InputError("rational must be an integer or a string \"p/q\", got " + j.dump());
}

Vector vector_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("vector must be an array, got " + j.dump());
  Vector v;
  for (const auto& x : j) v.push_back(scalar_from_json(x));
  return v;
}

PairSpec parse_pair_spec(const Json& doc) {
  require_object(doc, "pair spec", {"algebra", "subalgebra", "toral_hint", "label", "expected"});
  if (!doc.contains("algebra")) throw InputError("pair spec needs 'algebra'");
  if (!doc.contains("subalgebra")) throw InputError("pair spec needs 'subalgebra'");
  PairSpec spec;
  const auto& alg = doc["algebra"];
  if (alg.is_object() && alg.contains("structure_constants")) {
    spec.algebra = parse_explicit(alg);
  } else {
    spec.algebra = parse_preset(alg);
  }
  const auto& sub = doc["subalgebra"];
  if (sub.is_object() && sub.contains("basis")) {
    require_object(sub, "subalgebra", {"basis"});
    spec.subalgebra = rows_from_json(sub["basis"], "subalgebra basis");
  } else {
    require_object(sub, "subalgebra", {"preset", "simple_roots", "index"});
    if (!sub.contains("preset") || !sub["preset"].is_string()) throw InputError("subalgebra needs 'preset' or 'basis'");
    SubalgebraPreset p;
    p.preset = sub["preset"].get<std::string>();
    if (sub.contains("simple_roots")) {
      if (!sub["simple_roots"].is_array()) throw InputError("'simple_roots' must be an array of integers");
      for (const auto& r : sub["simple_roots"]) {
        if (!r.is_number_integer()) throw InputError("'simple_roots' must be an array of integers");
        p.simple_roots.insert(r.get<int>());
      }
    }
    if (sub.contains("index")) p.index = int_field(sub, "index", "subalgebra");
    spec.subalgebra = p;
  }
  if (doc.contains("toral_hint")) spec.toral_hint = rows_from_json(doc["toral_hint"], "toral_hint");
  if (doc.contains("label")) {
    if (!doc["label"].is_string()) throw InputError("'label' must be a string");
    spec.label = doc["label"].get<std::string>();
  }
  if (doc.contains("expected")) {
    if (!doc["expected"].is_boolean()) throw InputError("'expected' must be a boolean");
    spec.expected_verdict = doc["expected"].get<bool>();
  }
  return spec;
}

PairSpec parse_pair_spec_text(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  return parse_pair_spec(doc);
}

PairSpec load_pair_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_pair_spec_text(ss.str());
}

Json to_json(const Scalar& x) { return to_string(x); }

Json to_json(const Vector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

Json to_json(const Matrix& m) {
  Json a = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) a.push_back(to_json(m.row_vector(r)));
  return a;
}

Json basis_json(const Subspace& w) { return to_json(w.basis()); }

Json config_json(const CriteriaConfig& config) {
  Json j;
  j["seed"] = config.seed;
  j["trials"] = config.trials;
  j["chamber_budget"] = config.chamber_budget;
  j["coordinate_bound"] = config.coordinate_bound;
  j["word_length"] = config.word_length;
  return j;
}

Json limit_json(const LimitWitness& w) {
  Json j;
  j["direction"] = to_json(w.direction);
  j["direction_sign"] = w.direction_sign;
  j["source_basis"] = basis_json(w.source);
  j["limit_basis"] = basis_json(w.limit);
  j["solvable"] = w.solvable;
  j["derived_dims"] = w.derived_dims;
  return j;
}

Json rho_json(const RhoReport& r) {
  auto weights = [](const WeightSystem& ws) {
    Json a = Json::array();
    for (std::size_t i = 0; i < ws.weights.size(); ++i) {
      a.push_back(Json{{"weight", to_json(ws.weights[i])}, {"multiplicity", ws.multiplicities[i]}});
    }
    return a;
  };
  Json j;
  j["holds"] = r.verdict;
  j["vacuous"] = r.vacuous;
  j["chamber_count"] = r.chamber_count;
  j["rays_checked"] = r.rays_checked;
  j["hyperplanes"] = r.hyperplanes;
  j["failing_ray"] = r.failing_ray ? to_json(*r.failing_ray) : Json(nullptr);
  j["subalgebra_weights"] = weights(r.subalgebra_weights);
  j["quotient_weights"] = weights(r.quotient_weights);
  Json rays = Json::array();
  for (const auto& rv : r.ray_values) {
    rays.push_back(Json{{"ray", to_json(rv.ray)}, {"rho_h", to_json(rv.rho_h)}, {"rho_quotient", to_json(rv.rho_quotient)}});
  }
  j["rays"] = rays;
  return j;
}

Json verdict_json(const CriterionVerdict& v, const OutputOptions& out) {
  Json j;
  j["criterion"] = to_string(v.criterion);
  j["verdict"] = to_string(v.verdict);
  j["probabilistic"] = v.probabilistic;
  j["note"] = v.note;
  j["trials_used"] = v.trials_used;
  j["seed"] = v.seed;
  if (out.timings) j["elapsed_ms"] = v.elapsed_ms;
  Json w = Json::object();
  if (v.regular_witness) w["regular_element"] = to_json(*v.regular_witness);
  if (v.automorphism) {
    Json factors = Json::array();
    for (const auto& [gen, t] : v.automorphism->provenance) {
      factors.push_back(Json{{"generator", to_json(gen)}, {"t", to_json(t)}});
    }
    w["automorphism"] = Json{{"factors", factors}, {"matrix", to_json(v.automorphism->matrix)}};
  }
  if (v.transported) w["transported_basis"] = basis_json(*v.transported);
  if (v.limit) w["limit"] = limit_json(*v.limit);
  if (v.rho) w["rho"] = rho_json(*v.rho);
  j["witness"] = w.empty() ? Json(nullptr) : w;
  return j;
}

Json report_json(const TemperednessReport& r, const OutputOptions& out) {
  Json j;
  j["label"] = r.label;
  j["tem"] = to_string(r.tem);
  j["consistent"] = r.consistent;
  j["discrepancy"] = r.discrepancy.empty() ? Json(nullptr) : Json(r.discrepancy);
  if (r.expected_verdict) {
    j["expected"] = *r.expected_verdict;
  } else {
    j["expected"] = nullptr;
  }
  Json vs = Json::array();
  for (const auto& v : r.verdicts) vs.push_back(verdict_json(v, out));
  j["verdicts"] = vs;
  return j;
}

Json catalog_json(const std::vector<TemperednessReport>& reports, const CriteriaConfig& config, const OutputOptions& out) {
  Json j;
  j["config"] = config_json(config);
  Json pairs = Json::array();
  std::size_t consistent = 0;
  for (const auto& r : reports) {
    pairs.push_back(report_json(r, out));
    if (r.consistent) ++consistent;
  }
  j["pairs"] = pairs;
  j["summary"] = Json{{"pairs", reports.size()}, {"consistent", consistent}, {"inconsistent", reports.size() - consistent}};
  return j;
}

std::string report_text(const TemperednessReport& r) {
  std::ostringstream os;
  os << r.label << ": Tem = " << to_string(r.tem) << (r.consistent ? " (consistent)" : " (INCONSISTENT: " + r.discrepancy + ")")
     << "\n";
  for (const auto& v : r.verdicts) {
    os << "  " << std::left << std::setw(4) << to_string(v.criterion) << std::setw(14) << verdict_cell(v)
       << "trials " << std::setw(4) << v.trials_used << std::fixed << std::setprecision(2) << std::right << std::setw(10)
       << v.elapsed_ms << " ms";
    if (!v.note.empty()) os << "  " << v.note;
    os << "\n";
  }
  return os.str();
}

std::string catalog_text(const std::vector<TemperednessReport>& reports) {
  std::ostringstream os;
  std::size_t width = 5;
  for (const auto& r : reports) width = std::max(width, r.label.size());
  os << std::left << std::setw(static_cast<int>(width + 2)) << "pair";
  for (const char* c : {"Rho", "Orb", "Tmu", "Sla", "Ags"}) os << std::setw(14) << c;
  os << "consistency\n";
  std::size_t ok = 0;
  for (const auto& r : reports) {
    os << std::setw(static_cast<int>(width + 2)) << r.label;
    for (const auto& v : r.verdicts) os << std::setw(14) << verdict_cell(v);
    os << (r.consistent ? "CONSISTENT" : "INCONSISTENT") << "\n";
    if (r.consistent) ++ok;
  }
  os << reports.size() << " pairs, " << ok << " consistent, " << reports.size() - ok << " inconsistent"
     << " (* = probabilistic false)\n";
  return os.str();
}

std::string rho_text(const RhoReport& r) {
  std::ostringstream os;
  auto list = [&](const char* name, const WeightSystem& ws) {
    os << name << " weights:";
    for (std::size_t i = 0; i < ws.weights.size(); ++i) {
      os << " (";
      for (std::size_t k = 0; k < ws.weights[i].size(); ++k) os << (k ? "," : "") << to_string(ws.weights[i][k]);
      os << ")x" << ws.multiplicities[i];
    }
    os << "\n";
  };
  list("h", r.subalgebra_weights);
  list("g/h", r.quotient_weights);
  os << "chambers " << r.chamber_count << ", hyperplanes " << r.hyperplanes << ", rays " << r.rays_checked << "\n";
  if (r.vacuous) os << "zero toral part: inequality holds vacuously\n";
  for (const auto& rv : r.ray_values) {
    os << "  ray (";
    for (std::size_t k = 0; k < rv.ray.size(); ++k) os << (k ? "," : "") << to_string(rv.ray[k]);
    os << ")  rho_h = " << to_string(rv.rho_h) << "  rho_g/h = " << to_string(rv.rho_quotient) << "\n";
  }
  os << "verdict: " << (r.verdict ? "rho_h <= rho_g/h holds" : "fails") << "\n";
  return os.str();
}

std::string limit_text(const LieAlgebra& g, const LimitWitness& w) {
  std::ostringstream os;
  os << "direction X = " << g.format(w.direction) << ", flow " << sign_name(w.direction_sign) << "\n";
  os << "limit basis:\n";
  for (const auto& b : w.limit.basis_vectors()) os << "  " << g.format(b) << "\n";
  os << "derived series dims:";
  for (auto d : w.derived_dims) os << " " << d;
  os << (w.solvable ? "  (solvable)" : "  (not solvable)") << "\n";
  return os.str();
}

}  // namespace tempered
