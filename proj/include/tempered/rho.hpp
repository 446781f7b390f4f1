#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tempered/kernels.hpp"
#include "tempered/lie_algebra.hpp"

namespace tempered {

/// Commuting elements of h acting diagonalizably on g with rational eigenvalues.
struct ToralSubalgebra {
  std::vector<Element> basis;
  /// Set when no toral subalgebra could be determined; rho verdicts are then undetermined.
  bool undetermined = false;
  std::size_t dim() const { return basis.size(); }
};

/// Validates `hint` (commuting, rationally diagonalizable, inside h), or falls back
/// to the zero torus when h is unipotent and to an undetermined torus otherwise.
ToralSubalgebra find_toral(const LieAlgebra& g, const Subalgebra& h, const std::optional<std::vector<Element>>& hint);

/// Weights of a toral subalgebra on a module, as covectors on the toral basis.
struct WeightSystem {
  std::vector<Vector> weights;              // pairwise distinct, sorted
  std::vector<std::size_t> multiplicities;  // positive
  std::string module_label;
  std::size_t module_dim() const;
};

/// Weights on an ad(a)-stable subspace W of g.
WeightSystem weight_system(const LieAlgebra& g, const Subspace& module, const ToralSubalgebra& a,
                           std::string label = "custom");
/// Weights on the quotient g/h, acting on cosets.
WeightSystem quotient_weight_system(const LieAlgebra& g, const Subspace& h, const ToralSubalgebra& a);

/// (1/2) sum_alpha m_alpha |alpha(y)|, with y given in toral coordinates.
Scalar rho_value(const WeightSystem& ws, const Vector& y);

struct RayValue {
  Vector ray;   // toral coordinates
  Scalar rho_h;
  Scalar rho_quotient;
};

struct RhoReport {
  bool verdict = true;
  bool vacuous = false;                // zero toral subalgebra: nothing to check
  std::optional<Vector> failing_ray;   // rho_h > rho_{g/h} strictly at this point
  std::size_t chamber_count = 0;
  std::size_t rays_checked = 0;
  std::size_t hyperplanes = 0;
  std::vector<RayValue> ray_values;
  WeightSystem subalgebra_weights;
  WeightSystem quotient_weights;
};

struct RhoOptions {
  std::size_t chamber_budget = 100000;
  Parallelism parallelism{};
};

/// Decides rho_h <= rho_{g/h} on all of the real span of the toral basis by
/// checking every extreme ray of the weight-hyperplane arrangement exactly.
RhoReport rho_inequality(const LieAlgebra& g, const Subalgebra& h, const ToralSubalgebra& a,
                         const RhoOptions& options = {});

/// Generic form f(y) = sum_i coeff_i * rho_{ws_i}(y) >= 0 for all real y, checked on
/// the chamber rays of the combined arrangement. Returns the first violating ray.
struct LinearRhoCheck {
  bool holds = true;
  std::optional<Vector> violation;
  std::vector<Vector> rays;
  std::size_t chamber_count = 0;
};
LinearRhoCheck rho_combination_nonnegative(const std::vector<std::pair<Scalar, WeightSystem>>& terms,
                                           std::size_t toral_dim, const RhoOptions& options = {});

}  // namespace tempered
