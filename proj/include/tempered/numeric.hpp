#pragma once

#include "tempered/degeneration.hpp"

namespace tempered {

/// Sine of the largest principal angle between two subspaces of equal dimension,
/// computed in double precision.
double subspace_distance(const Subspace& a, const Subspace& b);

/// Distance between exp(t * sign * ad X) W, evaluated in doubles by scaling the
/// graded coordinates of W, and the subspace `target`.
double flow_distance(const Grading& grading, const Subspace& w, int direction_sign, double t, const Subspace& target);

}  // namespace tempered
