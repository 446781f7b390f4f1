#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tempered/constructors.hpp"
#include "tempered/degeneration.hpp"
#include "tempered/kernels.hpp"
#include "tempered/rho.hpp"

namespace tempered {

enum class Criterion { Rho, Orb, Tmu, Sla, Ags, Tem };
enum class Verdict { True, False, Undetermined };

const char* to_string(Criterion c);
const char* to_string(Verdict v);

struct CriteriaConfig {
  std::uint64_t seed = 42;
  int trials = 32;
  std::size_t chamber_budget = 100000;
  int coordinate_bound = 50;  // random coordinates in [-N, N]
  int word_length = 0;        // factors per random automorphism; 0 = number of roots
  Parallelism parallelism{};
};

struct CriterionVerdict {
  Criterion criterion = Criterion::Tem;
  Verdict verdict = Verdict::Undetermined;
  /// A false verdict reached by exhausting the trial budget rather than by proof.
  bool probabilistic = false;
  std::string note;
  int trials_used = 0;
  std::uint64_t seed = 0;
  double elapsed_ms = 0.0;

  std::optional<Element> regular_witness;           // Orb
  std::optional<AutomorphismMatrix> automorphism;   // Tmu / Sla
  std::optional<Subspace> transported;              // phi(h), meets n trivially
  std::optional<LimitWitness> limit;                // Sla
  std::optional<RhoReport> rho;                     // Rho
};

CriterionVerdict check_orb(const LieAlgebra& g, const Subalgebra& h, const CriteriaConfig& config);
CriterionVerdict check_tmu(const LieAlgebra& g, const RootDatum* rd, const Subalgebra& h, const CriteriaConfig& config);
CriterionVerdict check_sla(const LieAlgebra& g, const RootDatum* rd, const Subalgebra& h, const CriteriaConfig& config);
CriterionVerdict check_rho(const LieAlgebra& g, const Subalgebra& h, const std::optional<std::vector<Element>>& toral_hint,
                           const CriteriaConfig& config);
CriterionVerdict check_ags(const LieAlgebra& g, const Subalgebra& h, const CriteriaConfig& config);

struct TemperednessReport {
  std::string label;
  std::vector<CriterionVerdict> verdicts;  // Rho, Orb, Tmu, Sla, Ags
  Verdict tem = Verdict::Undetermined;     // equals Orb
  bool consistent = true;
  std::string discrepancy;
  std::optional<bool> expected_verdict;

  const CriterionVerdict& get(Criterion c) const;
};

TemperednessReport check_tem(const Pair& pair, const CriteriaConfig& config);

struct PropertyReport {
  std::string name;
  int samples = 0;
  int passes = 0;
  int failures = 0;
  std::string detail;
  bool ok() const { return failures == 0; }
};

/// For X in h⊥ attaining the sampled minimum of dim z_g(X), checks
/// [z_g(X), z_g(X)] ⊆ h ∩ z_g(X) exactly.
PropertyReport property_minimal_centralizer(const LieAlgebra& g, const Subalgebra& h, int samples, std::uint64_t seed);
/// For regular X in q = l ⊕ u, checks that the Levi component X_l is regular in l.
PropertyReport property_levi_projection(const LieAlgebra& g, const RootDatum& rd, const std::set<int>& simple_subset,
                                        int samples, std::uint64_t seed);
/// Counts random elements of w that are regular in g (passes = regular).
PropertyReport property_regular_density(const LieAlgebra& g, const Subspace& w, int samples, std::uint64_t seed);
/// Counts random X in h⊥ with ad X semisimple (squarefree minimal polynomial).
PropertyReport property_semisimple_density(const LieAlgebra& g, const Subalgebra& h, int samples, std::uint64_t seed);

}  // namespace tempered
