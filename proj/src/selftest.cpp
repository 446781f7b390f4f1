#include "tempered/selftest.hpp"

#include <algorithm>
#include <functional>

#include "tempered/catalog.hpp"
#include "tempered/errors.hpp"
#include "tempered/io.hpp"
#include "tempered/numeric.hpp"
#include "tempered/random.hpp"

namespace tempered {

namespace {

constexpr std::uint64_t kSelftestStream = 101;

class Tally {
 public:
  explicit Tally(std::string suite) : suite_(std::move(suite)) {}

  void record(const std::string& name, bool ok, const std::string& failure = {}) {
    CheckResult& c = find(name);
    ++c.samples;
    if (!ok) {
      ++c.failures;
      if (c.detail.empty()) c.detail = failure;
    }
  }
  /// Runs `body`; an exception counts as a failure of `name`.
  void guarded(const std::string& name, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      record(name, false, e.what());
    }
  }
  void summary(const std::string& name, const std::string& text) {
    CheckResult& c = find(name);
    if (c.ok()) c.detail = text;
  }
  std::vector<CheckResult> results() && { return std::move(out_); }

 private:
  CheckResult& find(const std::string& name) {
    for (auto& c : out_)
      if (c.name == name) return c;
    out_.push_back({suite_, name, 0, 0, {}});
    return out_.back();
  }
  std::string suite_;
  std::vector<CheckResult> out_;
};

std::uint64_t sub_seed(const SelftestOptions& o, std::uint64_t a, std::uint64_t b = 0) {
  return derive_seed(o.seed, kSelftestStream + a, b);
}

/// A few short words with unit coefficients: keeps random subspaces small enough
/// for double-precision comparisons.
AutomorphismMatrix gentle_automorphism(const LieAlgebra& g, std::uint64_t seed) {
  return random_automorphism(g, 3, seed, 1);
}

std::vector<Pair> rooted_catalog_pairs() {
  std::vector<Pair> out;
  for (const auto& s : builtin_catalog()) {
    Pair p = resolve_pair(s);
    if (p.roots) out.push_back(std::move(p));
  }
  return out;
}

Pair transported(const Pair& p, const AutomorphismMatrix& phi) {
  Pair q = p;
  q.subalgebra = Subalgebra::certify(*p.algebra, phi.apply(p.subalgebra.space()));
  if (p.toral) {
    std::vector<Element> t;
    for (const auto& x : *p.toral) t.push_back(phi.apply(x));
    q.toral = t;
  }
  return q;
}

// ---------------------------------------------------------------- algebra-core

std::vector<CheckResult> suite_algebra_core(const SelftestOptions& o) {
  Tally t("algebra-core");
  const auto algebras = catalog_algebras();
  for (std::size_t a = 0; a < algebras.size(); ++a) {
    RootedAlgebra ra;
    t.guarded("jacobi-antisymmetry", [&] {
      ra = build_preset(algebras[a]);
      t.record("jacobi-antisymmetry", true);
    });
    if (!ra.algebra) continue;
    const LieAlgebra& g = *ra.algebra;
    for (int s = 0; s < o.samples; ++s) {
      Rng rng(sub_seed(o, 1, a * 1000 + static_cast<std::uint64_t>(s)));
      const Element x = rng.vector(g.dim(), 5), y = rng.vector(g.dim(), 5), z = rng.vector(g.dim(), 5);
      t.record("killing-invariance", killing_form(g, bracket(g, x, y), z) + killing_form(g, y, bracket(g, x, z)) == 0,
               "K([x,y],z) + K(y,[x,z]) != 0 in " + g.name());
      const auto phi = random_automorphism(g, 4, rng.uniform(0, 1 << 30));
      t.record("automorphism-bracket", phi.apply(bracket(g, x, y)) == bracket(g, phi.apply(x), phi.apply(y)),
               "phi[x,y] != [phi x, phi y] in " + g.name());
      t.record("centralizer-closed", check_subalgebra(g, centralizer(g, x)), "z(x) not closed in " + g.name());
      // Regular and non-regular inputs: a generic x, a root vector, and the regular nilpotent.
      for (const Element& w : {x, ra.roots.root_vectors.front(), regular_nilpotent(ra.roots)}) {
        t.record("regular-ad-invariance", is_regular(g, w) == is_regular(g, phi.apply(w)),
                 "is_regular changes under an automorphism in " + g.name());
      }
    }
  }
  for (const auto& p : rooted_catalog_pairs()) {
    const LieAlgebra& g = *p.algebra;
    t.record("orthogonal-dimension", orthogonal_complement(g, p.subalgebra.space()).dim() + p.subalgebra.dim() == g.dim(),
             "dim h⊥ + dim h != dim g for " + p.label);
  }
  t.guarded("rank-additivity", [&] {
    const auto sl2 = make_sl(2), sl3 = make_sl(3);
    const auto sum = direct_sum(sl2, sl3);
    const std::size_t r = rank(*sum.algebra, 8, sub_seed(o, 2));
    t.record("rank-additivity", r == rank(*sl2.algebra) + rank(*sl3.algebra), "rank(sl2+sl3) != 3");
    const auto twice = direct_sum(sl2, sl2);
    t.record("rank-additivity", rank(*twice.algebra, 8, sub_seed(o, 3)) == 2, "rank(sl2+sl2) != 2");
  });
  if (o.fixture) {
    t.guarded("jacobi-antisymmetry", [&] {
      resolve_pair(load_pair_spec(*o.fixture));
      t.record("jacobi-antisymmetry", true);
    });
  }
  return std::move(t).results();
}

// ---------------------------------------------------------------- constructors

std::vector<CheckResult> suite_constructors(const SelftestOptions&) {
  Tally t("constructors");
  for (const auto& preset : catalog_algebras()) {
    const RootedAlgebra ra = build_preset(preset);
    const LieAlgebra& g = *ra.algebra;
    const RootDatum& rd = ra.roots;
    t.record("semisimple", g.is_semisimple(), g.name() + " is not semisimple");
    t.guarded("root-datum", [&] {
      verify_root_datum(g, rd);
      t.record("root-datum", rd.roots.size() == g.dim() - rd.rank(), "#roots != dim - rank in " + g.name());
    });
    t.record("borel-orthogonal", orthogonal_complement(g, borel(g, rd).space()) == maximal_unipotent(g, rd).space(),
             "b⊥ != n in " + g.name());
    t.record("dynkin-regular-nilpotent", is_regular(g, regular_nilpotent(rd)), "sum of simple root vectors not regular in " + g.name());
    const int r = static_cast<int>(rd.rank());
    for (int mask = 0; mask < (1 << r); ++mask) {
      std::set<int> subset;
      for (int i = 0; i < r; ++i)
        if (mask & (1 << i)) subset.insert(i + 1);
      const Parabolic p = parabolic(g, rd, subset);
      const std::string where = g.name() + " subset mask " + std::to_string(mask);
      t.record("parabolic-decomposition",
               p.q.dim() == p.levi.dim() + p.nilradical.dim() && span_sum(p.levi.space(), p.nilradical.space()) == p.q.space(),
               "q != l + u for " + where);
      t.record("parabolic-unipotent-radical", is_unipotent_subalgebra(g, p.nilradical), "u not unipotent for " + where);
      t.record("parabolic-reductive-levi", is_reductive_testable(g, p.levi.space()), "K degenerate on l for " + where);
    }
  }
  return std::move(t).results();
}

// ------------------------------------------------------------------------- rho

std::vector<CheckResult> suite_rho(const SelftestOptions& o) {
  Tally t("rho");
  RhoOptions ropt;
  ropt.chamber_budget = o.criteria.chamber_budget;
  const auto pairs = rooted_catalog_pairs();
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const Pair& p = pairs[i];
    const LieAlgebra& g = *p.algebra;
    const ToralSubalgebra a = find_toral(g, p.subalgebra, p.toral);
    if (a.undetermined || a.dim() == 0) continue;
    const WeightSystem wh = weight_system(g, p.subalgebra.space(), a, "h");
    const WeightSystem wq = quotient_weight_system(g, p.subalgebra.space(), a);
    const WeightSystem wg = weight_system(g, Subspace::whole(g.dim()), a, "g");
    for (int s = 0; s < o.samples; ++s) {
      Rng rng(sub_seed(o, 10, i * 1000 + static_cast<std::uint64_t>(s)));
      const Vector y = rng.vector(a.dim(), 9);
      const Scalar lambda = rational(static_cast<long>(rng.uniform(0, 20)), 7);
      t.record("homogeneity", rho_value(wq, scale(lambda, y)) == lambda * rho_value(wq, y), "rho(l y) != l rho(y) for " + p.label);
      t.record("evenness", rho_value(wh, scale(Scalar(-1), y)) == rho_value(wh, y), "rho(-y) != rho(y) for " + p.label);
      t.record("additivity", rho_value(wg, y) == rho_value(wh, y) + rho_value(wq, y), "rho_g != rho_h + rho_g/h for " + p.label);
    }
  }
  t.guarded("diagonal-equality", [&] {
    for (const auto& g : {make_sl(2), make_sl(3)}) {
      const DiagonalPair d = diagonal_embedding(g);
      const auto& sum = *d.sum.algebra;
      std::vector<Element> toral;
      for (std::size_t c = 0; c < g.roots.rank(); ++c) toral.push_back(add(d.sum.roots.cartan_basis[c], d.sum.roots.cartan_basis[c + g.roots.rank()]));
      const RhoReport r = rho_inequality(sum, d.diagonal, find_toral(sum, d.diagonal, toral), ropt);
      bool equal = r.verdict && !r.ray_values.empty();
      for (const auto& rv : r.ray_values) equal = equal && rv.rho_h == rv.rho_quotient;
      t.record("diagonal-equality", equal, "rho_h != rho_g/h at a ray for the diagonal in " + sum.name());
    }
  });
  t.guarded("borel-equality", [&] {
    for (const auto& preset : catalog_algebras()) {
      const RootedAlgebra ra = build_preset(preset);
      const LieAlgebra& g = *ra.algebra;
      const Subalgebra b = borel(g, ra.roots);
      const RhoReport r = rho_inequality(g, b, find_toral(g, b, ra.roots.cartan_basis), ropt);
      bool equal = r.verdict;
      for (const auto& rv : r.ray_values) equal = equal && rv.rho_h == rv.rho_quotient;
      t.record("borel-equality", equal, "rho_b != rho_g/b at a ray in " + g.name());
    }
  });
  t.guarded("parabolic-identity", [&] {
    for (std::size_t a_idx = 0; a_idx < catalog_algebras().size(); ++a_idx) {
      const RootedAlgebra ra = build_preset(catalog_algebras()[a_idx]);
      const LieAlgebra& g = *ra.algebra;
      const ToralSubalgebra cartan{ra.roots.cartan_basis, false};
      const WeightSystem wg = weight_system(g, Subspace::whole(g.dim()), cartan, "g");
      const int r = static_cast<int>(ra.roots.rank());
      for (int mask = 0; mask < (1 << r); ++mask) {
        std::set<int> subset;
        for (int i = 0; i < r; ++i)
          if (mask & (1 << i)) subset.insert(i + 1);
        const Parabolic p = parabolic(g, ra.roots, subset);
        const WeightSystem wl = weight_system(g, p.levi.space(), cartan, "l");
        const WeightSystem wu = weight_system(g, p.nilradical.space(), cartan, "u");
        for (int s = 0; s < o.samples; ++s) {
          Rng rng(sub_seed(o, 11, a_idx * 1000 + static_cast<std::uint64_t>(mask * 50 + s)));
          const Vector y = rng.vector(cartan.dim(), 9);
          t.record("parabolic-identity", rho_value(wg, y) == rho_value(wl, y) + 2 * rho_value(wu, y),
                   "rho_g != rho_l + 2 rho_u in " + g.name());
        }
      }
    }
  });
  // Closedness surrogate: contraction limits of Rho-pairs satisfy Rho on limit ∩ t.
  for (const auto& p : pairs) {
    const LieAlgebra& g = *p.algebra;
    t.guarded("limit-rho", [&] {
      const auto rho = check_rho(g, p.subalgebra, p.toral, o.criteria);
      if (rho.verdict != Verdict::True) return;
      const auto sla = check_sla(g, &*p.roots, p.subalgebra, o.criteria);
      if (!sla.limit || is_zero(sla.limit->direction)) return;
      const Subalgebra limit = Subalgebra::certify(g, sla.limit->limit);
      const Subspace torus = intersection(limit.space(), cartan_subalgebra(g, *p.roots).space());
      std::optional<std::vector<Element>> hint = torus.basis_vectors();
      if (torus.dim() == 0 && !is_unipotent_subalgebra(g, limit)) return;
      const RhoReport r = rho_inequality(g, limit, find_toral(g, limit, hint), ropt);
      t.record("limit-rho", r.verdict, "Rho fails on the contraction limit of " + p.label);
    });
  }
  return std::move(t).results();
}

// ---------------------------------------------------------------- degeneration

std::vector<CheckResult> suite_degeneration(const SelftestOptions& o) {
  Tally t("degeneration");
  const auto pairs = rooted_catalog_pairs();
  double worst = 0.0;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const Pair& p = pairs[i];
    const LieAlgebra& g = *p.algebra;
    const Element x = strictly_dominant(g, *p.roots);
    const Grading grading = weight_grading(g, x);
    for (int s = 0; s < std::max(1, o.samples / 3); ++s) {
      t.guarded("limit-dimension", [&] {
        const auto phi = gentle_automorphism(g, sub_seed(o, 20, i * 1000 + static_cast<std::uint64_t>(s)));
        const Subspace w = phi.apply(p.subalgebra.space());
        const Subspace lim = subspace_limit(grading, w, -1);
        t.record("limit-dimension", lim.dim() == w.dim(), "dimension changed for " + p.label);
        t.record("limit-idempotent", subspace_limit(grading, lim, -1) == lim, "limit not idempotent for " + p.label);
        t.record("limit-closed", check_subalgebra(g, lim), "limit not bracket-closed for " + p.label);
        const Subspace derived = bracket_span(g, w, w);
        t.record("limit-derived", subspace_limit(grading, derived, -1).contains(bracket_span(g, lim, lim)),
                 "[lim h, lim h] not in lim [h,h] for " + p.label);
        if (g.name() == "sl(3)") {
          const double d = flow_distance(grading, w, -1, 16.0, lim);
          worst = std::max(worst, d);
          t.record("numeric-flow", d < 1e-6, "flow at t=16 is " + std::to_string(d) + " from the limit for " + p.label);
        }
      });
    }
  }
  t.summary("numeric-flow", "max distance " + std::to_string(worst));
  return std::move(t).results();
}

// -------------------------------------------------------------------- criteria

/// Small random rational perturbations of h's basis, kept only when bracket-closed.
std::vector<Subalgebra> closed_perturbations(const Pair& p, int attempts, std::uint64_t seed) {
  const LieAlgebra& g = *p.algebra;
  std::vector<Subalgebra> out;
  const auto basis = p.subalgebra.basis();
  if (basis.empty()) return out;
  for (int a = 0; a < attempts; ++a) {
    Rng rng(derive_seed(seed, 0, static_cast<std::uint64_t>(a)));
    std::vector<Element> rows;
    for (const auto& b : basis) rows.push_back(add(b, scale(rational(1, 1000), rng.vector(g.dim(), 1))));
    Subspace w(g.dim(), rows);
    if (w.dim() == basis.size() && check_subalgebra(g, w)) out.push_back(Subalgebra::certify(g, w));
  }
  return out;
}

std::vector<CheckResult> suite_criteria(const SelftestOptions& o) {
  Tally t("criteria");
  const auto specs = builtin_catalog();
  const auto reports = run_catalog(specs, o.criteria);
  for (std::size_t i = 0; i < specs.size(); ++i) {
    const auto& r = reports[i];
    t.record("five-way-agreement", r.consistent, r.label + ": " + r.discrepancy);
    if (r.expected_verdict) {
      const Verdict want = *r.expected_verdict ? Verdict::True : Verdict::False;
      t.record("expected-verdict", r.tem == want, r.label + ": Tem = " + to_string(r.tem));
    }
  }
  const auto pairs = rooted_catalog_pairs();
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const Pair& p = pairs[i];
    const LieAlgebra& g = *p.algebra;
    const RootDatum* rd = &*p.roots;
    t.guarded("derived-stability", [&] {
      const Subalgebra derived = Subalgebra::certify(g, bracket_span(g, p.subalgebra.space(), p.subalgebra.space()));
      const auto a = check_sla(g, rd, p.subalgebra, o.criteria).verdict;
      const auto b = check_sla(g, rd, derived, o.criteria).verdict;
      t.record("derived-stability", a == b, p.label + ": Sla(h) = " + to_string(a) + " but Sla([h,h]) = " + to_string(b));
    });
    const TemperednessReport base = check_tem(p, o.criteria);
    for (int k = 0; k < o.automorphisms_per_pair; ++k) {
      t.guarded("ad-invariance", [&] {
        const auto phi = random_automorphism(g, static_cast<int>(g.nilpotent_generators().size()),
                                             sub_seed(o, 30, i * 100 + static_cast<std::uint64_t>(k)));
        const TemperednessReport moved = check_tem(transported(p, phi), o.criteria);
        bool same = true;
        for (std::size_t c = 0; c < base.verdicts.size(); ++c) same = same && base.verdicts[c].verdict == moved.verdicts[c].verdict;
        t.record("ad-invariance", same, p.label + ": verdicts change under an automorphism");
      });
    }
    if (is_reductive_testable(g, p.subalgebra.space())) {
      t.record("ags-orb", base.get(Criterion::Ags).verdict == base.get(Criterion::Orb).verdict,
               p.label + ": Ags = " + std::string(to_string(base.get(Criterion::Ags).verdict)));
      const auto dens = property_semisimple_density(g, p.subalgebra, std::max(10, o.samples), sub_seed(o, 31, i));
      t.record("semisimple-density", 10 * dens.passes >= 9 * dens.samples,
               p.label + ": " + std::to_string(dens.passes) + "/" + std::to_string(dens.samples) + " semisimple");
      const auto mc = property_minimal_centralizer(g, p.subalgebra, o.samples, sub_seed(o, 32, i));
      t.record("minimal-centralizer", mc.ok(), p.label + ": " + mc.detail);
    }
    for (const auto& q : closed_perturbations(p, 4, sub_seed(o, 33, i))) {
      const auto v = check_orb(g, q, o.criteria).verdict;
      t.record("openness-coherence", v == base.tem, p.label + ": perturbation changes Orb");
    }
  }
  for (const auto& [n, subset] : std::vector<std::pair<int, std::set<int>>>{{3, {}}, {3, {1}}, {3, {2}}, {4, {1}}, {4, {2}}, {4, {1, 3}}}) {
    t.guarded("levi-projection", [&] {
      const auto ra = make_sl(n);
      const auto rep = property_levi_projection(*ra.algebra, ra.roots, subset, o.samples, sub_seed(o, 40, static_cast<std::uint64_t>(n)));
      t.record("levi-projection", rep.ok(), rep.detail);
    });
  }
  {
    const auto sl3 = make_sl(3);
    const auto rep = property_regular_density(*sl3.algebra, Subspace::whole(sl3.algebra->dim()), 100, sub_seed(o, 41));
    t.record("regular-density", rep.passes >= 99, std::to_string(rep.passes) + "/100 regular in sl(3)");
  }
  return std::move(t).results();
}

// ----------------------------------------------------------------- cli-harness

std::vector<CheckResult> suite_cli(const SelftestOptions& o) {
  Tally t("cli-harness");
  const auto specs = builtin_catalog();
  CriteriaConfig serial = o.criteria;
  serial.parallelism.jobs = 1;
  const std::string first = catalog_json(run_catalog(specs, serial), serial).dump();
  const std::string second = catalog_json(run_catalog(specs, serial), serial).dump();
  t.record("determinism", first == second, "two catalog runs differ");
  CriteriaConfig parallel = serial;
  parallel.parallelism.jobs = 4;
  t.record("determinism", catalog_json(run_catalog(specs, parallel), serial).dump() == first,
           "parallel catalog run differs from the serial one");

  auto rejects = [&](const std::string& name, const std::string& text, const std::string& needle) {
    try {
      resolve_pair(parse_pair_spec_text(text));
      t.record(name, false, "accepted: " + text);
    } catch (const InputError& e) {
      t.record(name, std::string(e.what()).find(needle) != std::string::npos, std::string("unexpected message: ") + e.what());
    }
  };
  rejects("spec-strictness", R"({"algebra":{"type":"sl","n":2},"subalgebra":{"preset":"borel"},"colour":1})", "colour");
  rejects("spec-strictness", R"({"algebra":{"type":"sl","n":2},"subalgebra":{"preset":"borel"})", "malformed JSON");
  rejects("spec-strictness", R"({"algebra":{"type":"sl","n":2},"subalgebra":{"basis":[["1/2",0,0]]},"label":1})", "label");
  rejects("closure-diagnostic", R"({"algebra":{"type":"sl","n":2},"subalgebra":{"basis":[[1,0,0],[0,0,1]]}})", "[e, f]");
  t.guarded("spec-roundtrip", [&] {
    const Pair p = resolve_pair(parse_pair_spec_text(
        R"({"algebra":{"type":"sl","n":3},"subalgebra":{"preset":"levi","simple_roots":[1]},"label":"x","expected":true})"));
    t.record("spec-roundtrip", p.subalgebra.dim() == 4 && p.label == "x" && p.expected_verdict == true, "levi spec resolved wrongly");
  });
  return std::move(t).results();
}

}  // namespace

const std::vector<std::string>& selftest_suites() {
  static const std::vector<std::string> names{"algebra-core", "constructors", "rho", "degeneration", "criteria", "cli-harness"};
  return names;
}

std::vector<CheckResult> run_selftest(const SelftestOptions& options) {
  const auto& names = selftest_suites();
  if (!options.suite.empty() && std::find(names.begin(), names.end(), options.suite) == names.end()) {
    throw InputError("unknown suite '" + options.suite + "'");
  }
  using SuiteFn = std::vector<CheckResult> (*)(const SelftestOptions&);
  const std::vector<std::pair<std::string, SuiteFn>> suites{
      {"algebra-core", suite_algebra_core}, {"constructors", suite_constructors}, {"rho", suite_rho},
      {"degeneration", suite_degeneration}, {"criteria", suite_criteria},       {"cli-harness", suite_cli}};
  std::vector<CheckResult> out;
  for (const auto& [name, fn] : suites) {
    if (!options.suite.empty() && options.suite != name) continue;
    auto part = fn(options);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace tempered
