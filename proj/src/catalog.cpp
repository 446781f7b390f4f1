#include "tempered/catalog.hpp"

#include <algorithm>

#include "tempered/errors.hpp"

namespace tempered {

namespace {

AlgebraPreset simple(const std::string& type, int n) { return AlgebraPreset{type, n, {}}; }

AlgebraPreset sl2_sum() { return AlgebraPreset{"sum", 0, {simple("sl", 2), simple("sl", 2)}}; }

PairSpec preset_pair(const std::string& label, AlgebraPreset algebra, SubalgebraPreset sub,
                     std::optional<bool> expected) {
  PairSpec s;
  s.label = label;
  s.algebra = std::move(algebra);
  s.subalgebra = std::move(sub);
  s.expected_verdict = expected;
  return s;
}

SubalgebraPreset named(const std::string& preset) { return SubalgebraPreset{preset, {}, 0}; }
SubalgebraPreset with_roots(const std::string& preset, std::set<int> roots) {
  return SubalgebraPreset{preset, std::move(roots), 0};
}

/// Subalgebra given by basis labels, with an explicit toral hint.
PairSpec labelled_pair(const std::string& label, const AlgebraPreset& algebra, const std::vector<std::string>& basis,
                       const std::vector<std::string>& toral, std::optional<bool> expected) {
  const RootedAlgebra ra = build_preset(algebra);
  PairSpec s;
  s.label = label;
  s.algebra = algebra;
  std::vector<Vector> rows;
  for (const auto& b : basis) rows.push_back(ra.algebra->basis_element(basis_index(*ra.algebra, b)));
  s.subalgebra = rows;
  std::vector<Vector> hint;
  for (const auto& t : toral) hint.push_back(ra.algebra->basis_element(basis_index(*ra.algebra, t)));
  s.toral_hint = hint;
  s.expected_verdict = expected;
  return s;
}

}  // namespace

std::size_t basis_index(const LieAlgebra& g, const std::string& label) {
  const auto& labels = g.labels();
  const auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) throw InputError("no basis element labelled '" + label + "' in " + g.name());
  return static_cast<std::size_t>(it - labels.begin());
}

std::vector<PairSpec> builtin_catalog() {
  std::vector<PairSpec> c;
  const auto sl2 = simple("sl", 2);
  const auto sl3 = simple("sl", 3);
  const auto sl4 = simple("sl", 4);
  const auto so4 = simple("so", 4);
  const auto so5 = simple("so", 5);
  const auto sp4 = simple("sp", 4);

  c.push_back(preset_pair("sl2/zero", sl2, named("zero"), true));
  c.push_back(preset_pair("sl2/borel", sl2, named("borel"), true));
  c.push_back(preset_pair("sl2/cartan", sl2, named("cartan"), true));
  c.push_back(preset_pair("sl2/max_unipotent", sl2, named("max_unipotent"), true));
  c.push_back(preset_pair("sl2/whole", sl2, named("whole"), false));
  {
    const RootedAlgebra ra = build_preset(sl2);
    const auto& g = *ra.algebra;
    const Vector x = add(g.basis_element(basis_index(g, "e")), g.basis_element(basis_index(g, "f")));
    PairSpec s;
    s.label = "sl2/split_torus";
    s.algebra = sl2;
    s.subalgebra = std::vector<Vector>{x};
    s.toral_hint = std::vector<Vector>{x};
    s.expected_verdict = true;
    c.push_back(std::move(s));
  }

  c.push_back(preset_pair("sl3/zero", sl3, named("zero"), true));
  c.push_back(preset_pair("sl3/borel", sl3, named("borel"), true));
  c.push_back(preset_pair("sl3/cartan", sl3, named("cartan"), true));
  c.push_back(preset_pair("sl3/max_unipotent", sl3, named("max_unipotent"), true));
  c.push_back(preset_pair("sl3/regular_nilpotent", sl3, named("regular_nilpotent"), true));
  c.push_back(preset_pair("sl3/principal_sl2", sl3, named("principal_sl2"), true));
  c.push_back(preset_pair("sl3/parabolic_1", sl3, with_roots("parabolic", {1}), false));
  c.push_back(preset_pair("sl3/levi_1", sl3, with_roots("levi", {1}), true));
  c.push_back(preset_pair("sl3/nilradical_1", sl3, with_roots("nilradical", {1}), true));
  c.push_back(preset_pair("sl3/whole", sl3, named("whole"), false));
  c.push_back(labelled_pair("sl3/sl2_block", sl3, {"E12", "H1", "E21"}, {"H1"}, true));

  c.push_back(preset_pair("sl4/borel", sl4, named("borel"), true));
  c.push_back(preset_pair("sl4/cartan", sl4, named("cartan"), true));
  c.push_back(preset_pair("sl4/max_unipotent", sl4, named("max_unipotent"), true));
  c.push_back(preset_pair("sl4/regular_nilpotent", sl4, named("regular_nilpotent"), true));
  c.push_back(preset_pair("sl4/principal_sl2", sl4, named("principal_sl2"), std::nullopt));
  c.push_back(preset_pair("sl4/parabolic_13", sl4, with_roots("parabolic", {1, 3}), false));
  c.push_back(preset_pair("sl4/levi_13", sl4, with_roots("levi", {1, 3}), std::nullopt));
  c.push_back(preset_pair("sl4/levi_2", sl4, with_roots("levi", {2}), std::nullopt));
  c.push_back(preset_pair("sl4/whole", sl4, named("whole"), false));

  c.push_back(preset_pair("so4/borel", so4, named("borel"), true));
  c.push_back(preset_pair("so4/levi_1", so4, with_roots("levi", {1}), std::nullopt));

  c.push_back(preset_pair("so5/borel", so5, named("borel"), true));
  c.push_back(preset_pair("so5/principal_sl2", so5, named("principal_sl2"), std::nullopt));
  c.push_back(preset_pair("so5/levi_1", so5, with_roots("levi", {1}), std::nullopt));
  c.push_back(preset_pair("so5/parabolic_2", so5, with_roots("parabolic", {2}), false));
  c.push_back(preset_pair("so5/whole", so5, named("whole"), false));

  c.push_back(preset_pair("sp4/borel", sp4, named("borel"), true));
  c.push_back(preset_pair("sp4/cartan", sp4, named("cartan"), true));
  c.push_back(preset_pair("sp4/principal_sl2", sp4, named("principal_sl2"), std::nullopt));
  c.push_back(preset_pair("sp4/levi_2", sp4, with_roots("levi", {2}), std::nullopt));
  c.push_back(preset_pair("sp4/whole", sp4, named("whole"), false));

  c.push_back(preset_pair("sl2+sl2/zero", sl2_sum(), named("zero"), true));
  c.push_back(preset_pair("sl2+sl2/borel", sl2_sum(), named("borel"), true));
  c.push_back(preset_pair("sl2+sl2/diagonal", sl2_sum(), named("diagonal"), true));
  c.push_back(preset_pair("sl2+sl2/factor_1", sl2_sum(), SubalgebraPreset{"factor", {}, 1}, false));
  c.push_back(preset_pair("sl2+sl2/whole", sl2_sum(), named("whole"), false));

  std::sort(c.begin(), c.end(), [](const PairSpec& a, const PairSpec& b) { return a.label < b.label; });
  return c;
}

std::vector<AlgebraPreset> catalog_algebras() {
  return {simple("sl", 2), simple("sl", 3), simple("sl", 4), simple("so", 4), simple("so", 5), simple("sp", 4), sl2_sum()};
}

std::vector<PairSpec> filter_catalog(const std::vector<PairSpec>& specs, const std::string& filter) {
  std::vector<PairSpec> out;
  for (const auto& s : specs)
    if (filter.empty() || s.label.find(filter) != std::string::npos) out.push_back(s);
  return out;
}

std::vector<TemperednessReport> run_catalog(const std::vector<PairSpec>& specs, const CriteriaConfig& config) {
  std::vector<Pair> pairs;
  pairs.reserve(specs.size());
  for (const auto& s : specs) pairs.push_back(resolve_pair(s));
  std::vector<TemperednessReport> reports(pairs.size());
  parallel_for(pairs.size(), config.parallelism, [&](std::size_t i) { reports[i] = check_tem(pairs[i], config); });
  return reports;
}

}  // namespace tempered
