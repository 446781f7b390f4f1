#include "tempered/criteria.hpp"

#include <chrono>
#include <sstream>

#include "tempered/errors.hpp"
#include "tempered/random.hpp"
#include "tempered/spectral.hpp"

namespace tempered {

namespace {

// Seed streams: each criterion draws from its own offset of the pair seed.
constexpr std::uint64_t kOrbStream = 1;
constexpr std::uint64_t kTmuStream = 2;
constexpr std::uint64_t kAgsStream = 3;
constexpr std::uint64_t kCentralizerStream = 11;
constexpr std::uint64_t kLeviStream = 12;
constexpr std::uint64_t kRegularStream = 13;
constexpr std::uint64_t kSemisimpleStream = 14;

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

std::string budget_note(int trials, std::uint64_t seed) {
  std::ostringstream os;
  os << "probabilistic (budget " << trials << ", seed " << seed << ")";
  return os.str();
}

int word_length(const LieAlgebra& g, const CriteriaConfig& config) {
  if (config.word_length > 0) return config.word_length;
  return static_cast<int>(g.nilpotent_generators().size());
}

CriterionVerdict make(Criterion c, const CriteriaConfig& config) {
  CriterionVerdict v;
  v.criterion = c;
  v.seed = config.seed;
  return v;
}

}  // namespace

const char* to_string(Criterion c) {
  switch (c) {
    case Criterion::Rho: return "Rho";
    case Criterion::Orb: return "Orb";
    case Criterion::Tmu: return "Tmu";
    case Criterion::Sla: return "Sla";
    case Criterion::Ags: return "Ags";
    case Criterion::Tem: return "Tem";
  }
  return "?";
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::True: return "true";
    case Verdict::False: return "false";
    case Verdict::Undetermined: return "undetermined";
  }
  return "?";
}

CriterionVerdict check_orb(const LieAlgebra& g, const Subalgebra& h, const CriteriaConfig& config) {
  Stopwatch clock;
  auto v = make(Criterion::Orb, config);
  if (!g.is_semisimple() || !g.rank()) {
    v.note = "requires a semisimple algebra of known rank";
    v.elapsed_ms = clock.ms();
    return v;
  }
  const Subspace perp = orthogonal_complement(g, h.space());
  if (perp.dim() == 0) {
    v.verdict = *g.rank() == 0 ? Verdict::True : Verdict::False;
    v.note = "h⊥ = 0";
    if (v.verdict == Verdict::True) v.regular_witness = g.zero();
    v.elapsed_ms = clock.ms();
    return v;
  }
  const auto n = static_cast<std::size_t>(std::max(config.trials, 0));
  std::vector<Element> samples(n);
  for (std::size_t i = 0; i < n; ++i) {
    Rng rng(derive_seed(config.seed, kOrbStream, i));
    samples[i] = rng.element_of(perp, config.coordinate_bound);
  }
  const auto hit = first_success(n, config.parallelism, [&](std::size_t i) { return is_regular(g, samples[i]); });
  if (hit) {
    v.verdict = Verdict::True;
    v.regular_witness = samples[*hit];
    v.trials_used = static_cast<int>(*hit) + 1;
  } else {
    v.verdict = Verdict::False;
    v.probabilistic = true;
    v.trials_used = config.trials;
    v.note = budget_note(config.trials, config.seed);
  }
  v.elapsed_ms = clock.ms();
  return v;
}

CriterionVerdict check_tmu(const LieAlgebra& g, const RootDatum* rd, const Subalgebra& h, const CriteriaConfig& config) {
  Stopwatch clock;
  auto v = make(Criterion::Tmu, config);
  if (rd == nullptr) {
    v.note = "requires a root datum";
    v.elapsed_ms = clock.ms();
    return v;
  }
  const Subspace n_plus = maximal_unipotent(g, *rd).space();
  if (h.dim() + n_plus.dim() > g.dim()) {
    v.verdict = Verdict::False;
    v.note = "dim h + dim n > dim g";
    v.elapsed_ms = clock.ms();
    return v;
  }
  if (h.dim() == 0) {
    v.verdict = Verdict::True;
    v.automorphism = identity_automorphism(g);
    v.transported = h.space();
    v.note = "h = 0";
    v.elapsed_ms = clock.ms();
    return v;
  }
  // Trial 0 is the identity, later trials are seeded random automorphisms.
  const auto n = static_cast<std::size_t>(std::max(config.trials, 0));
  const int len = word_length(g, config);
  std::vector<std::optional<AutomorphismMatrix>> phis(n);
  std::vector<std::optional<Subspace>> images(n);
  const auto hit = first_success(n, config.parallelism, [&](std::size_t i) {
    AutomorphismMatrix phi =
        i == 0 ? identity_automorphism(g) : random_automorphism(g, len, derive_seed(config.seed, kTmuStream, i));
    Subspace moved = phi.apply(h.space());
    const bool ok = intersection(moved, n_plus).dim() == 0;
    if (ok) {
      phis[i] = std::move(phi);
      images[i] = std::move(moved);
    }
    return ok;
  });
  if (hit) {
    v.verdict = Verdict::True;
    v.automorphism = std::move(phis[*hit]);
    v.transported = std::move(images[*hit]);
    v.trials_used = static_cast<int>(*hit) + 1;
  } else {
    v.verdict = Verdict::False;
    v.probabilistic = true;
    v.trials_used = config.trials;
    v.note = budget_note(config.trials, config.seed);
  }
  v.elapsed_ms = clock.ms();
  return v;
}

CriterionVerdict check_sla(const LieAlgebra& g, const RootDatum* rd, const Subalgebra& h, const CriteriaConfig& config) {
  Stopwatch clock;
  auto v = make(Criterion::Sla, config);
  if (is_solvable(g, h)) {
    v.verdict = Verdict::True;
    LimitWitness w;
    w.direction = g.zero();
    w.source = h.space();
    w.limit = h.space();
    w.solvable = true;
    for (const auto& s : derived_series(g, h)) w.derived_dims.push_back(s.dim());
    v.limit = std::move(w);
    v.note = "h is solvable";
    v.elapsed_ms = clock.ms();
    return v;
  }
  auto tmu = check_tmu(g, rd, h, config);
  v.trials_used = tmu.trials_used;
  v.probabilistic = tmu.probabilistic;
  v.note = tmu.note;
  if (tmu.verdict == Verdict::True) {
    const Subspace n_plus = maximal_unipotent(g, *rd).space();
    v.limit = contract_to_solvable(g, *rd, *tmu.transported, n_plus);
    v.automorphism = std::move(tmu.automorphism);
    v.transported = std::move(tmu.transported);
    v.verdict = Verdict::True;
    v.note.clear();
  } else {
    v.verdict = tmu.verdict;
  }
  v.elapsed_ms = clock.ms();
  return v;
}

CriterionVerdict check_rho(const LieAlgebra& g, const Subalgebra& h, const std::optional<std::vector<Element>>& toral_hint,
                           const CriteriaConfig& config) {
  Stopwatch clock;
  auto v = make(Criterion::Rho, config);
  const ToralSubalgebra a = find_toral(g, h, toral_hint);
  if (a.undetermined) {
    v.note = "toral subalgebra undetermined; supply a toral hint";
    v.elapsed_ms = clock.ms();
    return v;
  }
  RhoOptions options;
  options.chamber_budget = config.chamber_budget;
  options.parallelism = config.parallelism;
  auto report = rho_inequality(g, h, a, options);
  v.verdict = report.verdict ? Verdict::True : Verdict::False;
  if (report.vacuous) v.note = "zero toral part: vacuous";
  v.rho = std::move(report);
  v.elapsed_ms = clock.ms();
  return v;
}

CriterionVerdict check_ags(const LieAlgebra& g, const Subalgebra& h, const CriteriaConfig& config) {
  Stopwatch clock;
  auto v = make(Criterion::Ags, config);
  if (!g.is_semisimple() || !is_reductive_testable(g, h.space())) {
    v.note = "Killing form degenerate on h";
    v.elapsed_ms = clock.ms();
    return v;
  }
  const Subspace perp = orthogonal_complement(g, h.space());
  const auto n = static_cast<std::size_t>(std::max(config.trials, 1));
  std::vector<char> abelian(n, 0);
  parallel_for(n, config.parallelism, [&](std::size_t i) {
    Rng rng(derive_seed(config.seed, kAgsStream, i));
    const Element x = rng.element_of(perp, config.coordinate_bound);
    abelian[i] = is_abelian(g, centralizer_in(g, h.space(), x)) ? 1 : 0;
  });
  std::size_t passes = 0;
  for (char a : abelian) passes += a ? 1 : 0;
  v.trials_used = static_cast<int>(n);
  if (passes == n) {
    v.verdict = Verdict::True;
  } else if (2 * (n - passes) > n) {
    v.verdict = Verdict::False;
    v.note = std::to_string(n - passes) + " of " + std::to_string(n) + " samples have non-abelian z_h(X)";
  } else {
    v.note = "mixed samples: " + std::to_string(passes) + " of " + std::to_string(n) + " abelian";
  }
  v.elapsed_ms = clock.ms();
  return v;
}

const CriterionVerdict& TemperednessReport::get(Criterion c) const {
  for (const auto& v : verdicts)
    if (v.criterion == c) return v;
  throw InputError(std::string("report has no verdict for ") + to_string(c));
}

TemperednessReport check_tem(const Pair& pair, const CriteriaConfig& config) {
  const LieAlgebra& g = *pair.algebra;
  if (!g.is_semisimple()) throw UnsupportedError("temperedness criteria require a semisimple algebra");
  TemperednessReport report;
  report.label = pair.label;
  report.expected_verdict = pair.expected_verdict;
  const RootDatum* rd = pair.roots ? &*pair.roots : nullptr;

  // The five criteria are independent; each draws from its own seed stream.
  std::vector<CriterionVerdict> out(5);
  const CriteriaConfig inner = [&] {
    CriteriaConfig c = config;
    if (config.parallelism.parallel()) c.parallelism.jobs = 1;
    return c;
  }();
  parallel_for(5, config.parallelism, [&](std::size_t i) {
    switch (i) {
      case 0: out[i] = check_rho(g, pair.subalgebra, pair.toral, inner); break;
      case 1: out[i] = check_orb(g, pair.subalgebra, inner); break;
      case 2: out[i] = check_tmu(g, rd, pair.subalgebra, inner); break;
      case 3: out[i] = check_sla(g, rd, pair.subalgebra, inner); break;
      default: out[i] = check_ags(g, pair.subalgebra, inner); break;
    }
  });
  report.verdicts = std::move(out);
  report.tem = report.get(Criterion::Orb).verdict;

  std::optional<Verdict> seen;
  for (const auto& v : report.verdicts) {
    if (v.verdict == Verdict::Undetermined) continue;
    if (!seen) {
      seen = v.verdict;
    } else if (*seen != v.verdict) {
      report.consistent = false;
    }
  }
  if (!report.consistent) {
    std::ostringstream os;
    bool first = true;
    for (const auto& v : report.verdicts) {
      if (v.verdict == Verdict::Undetermined) continue;
      os << (first ? "" : ", ") << to_string(v.criterion) << "=" << to_string(v.verdict) << (v.probabilistic ? "*" : "");
      first = false;
    }
    report.discrepancy = os.str();
  }
  return report;
}

PropertyReport property_minimal_centralizer(const LieAlgebra& g, const Subalgebra& h, int samples, std::uint64_t seed) {
  PropertyReport r;
  r.name = "minimal-centralizer";
  const Subspace perp = orthogonal_complement(g, h.space());
  std::vector<Element> xs;
  std::vector<Subspace> zs;
  std::size_t min_dim = g.dim() + 1;
  for (int i = 0; i < samples; ++i) {
    Rng rng(derive_seed(seed, kCentralizerStream, static_cast<std::uint64_t>(i)));
    xs.push_back(rng.element_of(perp));
    zs.push_back(centralizer(g, xs.back()));
    min_dim = std::min(min_dim, zs.back().dim());
  }
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (zs[i].dim() != min_dim) continue;
    ++r.samples;
    const Subspace brackets = bracket_span(g, zs[i], zs[i]);
    if (intersection(h.space(), zs[i]).contains(brackets)) {
      ++r.passes;
    } else {
      ++r.failures;
      if (r.detail.empty()) r.detail = "[z(X), z(X)] not inside z_h(X) for X = " + g.format(xs[i]);
    }
  }
  if (r.detail.empty()) r.detail = "r = " + std::to_string(min_dim);
  return r;
}

PropertyReport property_levi_projection(const LieAlgebra& g, const RootDatum& rd, const std::set<int>& simple_subset,
                                        int samples, std::uint64_t seed) {
  PropertyReport r;
  r.name = "levi-projection";
  const Parabolic p = parabolic(g, rd, simple_subset);
  const auto levi = p.levi.basis();
  const auto nil = p.nilradical.basis();
  std::vector<Vector> qbasis = levi;
  qbasis.insert(qbasis.end(), nil.begin(), nil.end());
  const Matrix q_rows = Matrix::from_rows(qbasis, g.dim());
  const std::size_t rank_g = *g.rank();
  const int budget = 100 * std::max(samples, 1);
  int attempt = 0;
  while (r.samples < samples) {
    if (attempt >= budget) throw ResourceError("no regular element found in the parabolic within budget");
    Rng rng(derive_seed(seed, kLeviStream, static_cast<std::uint64_t>(attempt++)));
    const Element x = rng.element_of(p.q.space());
    if (!is_regular(g, x)) continue;
    ++r.samples;
    const auto c = solve(q_rows.transpose(), x);
    if (!c) throw InternalInconsistency("element of q not in span of levi and nilradical");
    Element xl = g.zero();
    for (std::size_t i = 0; i < levi.size(); ++i) xl = add(xl, scale((*c)[i], levi[i]));
    if (centralizer_in(g, p.levi.space(), xl).dim() == rank_g) {
      ++r.passes;
    } else {
      ++r.failures;
      if (r.detail.empty()) r.detail = "Levi component of " + g.format(x) + " is not regular in l";
    }
  }
  return r;
}

PropertyReport property_regular_density(const LieAlgebra& g, const Subspace& w, int samples, std::uint64_t seed) {
  PropertyReport r;
  r.name = "regular-density";
  for (int i = 0; i < samples; ++i) {
    Rng rng(derive_seed(seed, kRegularStream, static_cast<std::uint64_t>(i)));
    ++r.samples;
    if (is_regular(g, rng.element_of(w))) {
      ++r.passes;
    } else {
      ++r.failures;
    }
  }
  return r;
}

PropertyReport property_semisimple_density(const LieAlgebra& g, const Subalgebra& h, int samples, std::uint64_t seed) {
  PropertyReport r;
  r.name = "semisimple-density";
  const Subspace perp = orthogonal_complement(g, h.space());
  for (int i = 0; i < samples; ++i) {
    Rng rng(derive_seed(seed, kSemisimpleStream, static_cast<std::uint64_t>(i)));
    ++r.samples;
    if (is_semisimple_matrix(g.ad_matrix(rng.element_of(perp)))) {
      ++r.passes;
    } else {
      ++r.failures;
    }
  }
  return r;
}

}  // namespace tempered
