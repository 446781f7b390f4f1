#pragma once

#include <cstddef>
#include <vector>

#include "tempered/exact.hpp"
#include "tempered/kernels.hpp"

namespace tempered {

/// Central hyperplane arrangement {y : n_i . y = 0} in Q^d. The normals are
/// assumed to span Q^d (essential arrangement) and to be pairwise non-parallel.
struct Arrangement {
  std::size_t dim = 0;
  std::vector<Vector> normals;
};

/// Sign vector of a chamber: +1 or -1 per hyperplane.
using SignVector = std::vector<int>;

struct ChamberEnumeration {
  std::vector<Vector> rays;          // every extreme ray of every chamber, primitive integer vectors
  std::vector<SignVector> chambers;  // sorted lexicographically
};

/// Removes zero normals and keeps one normal per hyperplane.
std::vector<Vector> distinct_hyperplanes(const std::vector<Vector>& normals);

/// One-dimensional flats of the arrangement, both orientations, deduplicated.
/// Every extreme ray of every closed chamber appears here.
std::vector<Vector> candidate_rays(const Arrangement& arr);

/// Incremental sign-vector enumeration: hyperplanes are added one at a time and
/// each region is split when both halves are nonempty. Throws ResourceError once
/// more than `budget` regions exist.
ChamberEnumeration enumerate_chambers(const Arrangement& arr, std::size_t budget, Parallelism par = {});

/// Serial reference built independently from sums of independent candidate rays.
ChamberEnumeration enumerate_chambers_reference(const Arrangement& arr);

}  // namespace tempered
