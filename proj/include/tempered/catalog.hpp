#pragma once

#include <string>
#include <vector>

#include "tempered/constructors.hpp"
#include "tempered/criteria.hpp"

namespace tempered {

/// Built-in pairs over sl(2), sl(3), sl(4), so(4), so(5), sp(4) and sl(2)⊕sl(2),
/// sorted by label. Expected verdicts are set where they follow by hand.
std::vector<PairSpec> builtin_catalog();

/// The algebras the catalog draws from: sl2, sl3, sl4, so4, so5, sp4, sl2+sl2.
std::vector<AlgebraPreset> catalog_algebras();

/// Catalog specs whose label contains `filter` (all when empty).
std::vector<PairSpec> filter_catalog(const std::vector<PairSpec>& specs, const std::string& filter);

/// Resolves and checks every spec; pairs run concurrently up to config.parallelism.jobs.
/// Reports keep the order of `specs`.
std::vector<TemperednessReport> run_catalog(const std::vector<PairSpec>& specs, const CriteriaConfig& config);

/// Index of the basis element with this label; throws InputError if absent.
std::size_t basis_index(const LieAlgebra& g, const std::string& label);

}  // namespace tempered
