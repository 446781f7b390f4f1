#pragma once

#include <optional>
#include <vector>

#include "tempered/exact.hpp"

namespace tempered {

/// Polynomial with rational coefficients, lowest degree first; no trailing zeros.
using Polynomial = std::vector<Scalar>;

Polynomial poly_trim(Polynomial p);
Polynomial poly_derivative(const Polynomial& p);
Polynomial poly_gcd(Polynomial a, Polynomial b);
Scalar poly_eval(const Polynomial& p, const Scalar& x);
std::size_t poly_degree(const Polynomial& p);

/// Monic minimal polynomial of a square matrix, computed exactly from the
/// first linear dependency among I, A, A^2, ...
Polynomial minimal_polynomial(const Matrix& a);
/// True iff the minimal polynomial has no repeated factor, i.e. A is
/// diagonalizable over the algebraic closure.
bool is_semisimple_matrix(const Matrix& a);

struct Eigenspace {
  Scalar value;
  Matrix basis;  // rows v with A v = value * v
};

/// Eigenspace decomposition of A over Q, sorted by ascending eigenvalue, or
/// nullopt when A is not diagonalizable with rational eigenvalues. Eigenvalue
/// candidates come from floating point; the answer is certified exactly by
/// checking that the eigenspace dimensions add up to the size of A.
std::optional<std::vector<Eigenspace>> rational_diagonalization(const Matrix& a);

/// Nearest rational with denominator at most max_den (continued fractions).
Scalar rationalize(double x, long max_den = 1000000);

}  // namespace tempered
