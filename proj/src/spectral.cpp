#include "tempered/spectral.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

#include "tempered/errors.hpp"

namespace tempered {

Polynomial poly_trim(Polynomial p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
  return p;
}

std::size_t poly_degree(const Polynomial& p) { return p.empty() ? 0 : p.size() - 1; }

Polynomial poly_derivative(const Polynomial& p) {
  Polynomial d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
  return poly_trim(d);
}

namespace {

Polynomial poly_mod(Polynomial a, const Polynomial& b) {
  a = poly_trim(std::move(a));
  while (!a.empty() && a.size() >= b.size()) {
    const Scalar f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    a = poly_trim(std::move(a));
  }
  return a;
}

Polynomial make_monic(Polynomial p) {
  if (p.empty()) return p;
  const Scalar lead = p.back();
  for (auto& c : p) c /= lead;
  return p;
}

Matrix to_flat_row(const Matrix& m) {
  Matrix row(1, m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) row(0, r * m.cols() + c) = m(r, c);
  return row;
}

std::vector<double> real_eigenvalue_guesses(const Eigen::MatrixXd& m) {
  std::vector<double> out;
  if (m.rows() == 0) return out;
  Eigen::EigenSolver<Eigen::MatrixXd> solver(m, false);
  if (solver.info() != Eigen::Success) return out;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    const auto z = solver.eigenvalues()[i];
    if (std::abs(z.imag()) < 1e-6 * (1.0 + std::abs(z.real()))) out.push_back(z.real());
  }
  return out;
}

Eigen::MatrixXd to_double(const Matrix& a) {
  Eigen::MatrixXd m(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = a(r, c).get_d();
  return m;
}

std::optional<std::vector<Eigenspace>> certify(const Matrix& a, const std::vector<double>& guesses) {
  std::vector<Scalar> candidates;
  for (double g : guesses) {
    Scalar q = rationalize(g);
    if (std::find(candidates.begin(), candidates.end(), q) == candidates.end()) candidates.push_back(q);
  }
  std::sort(candidates.begin(), candidates.end());
  std::vector<Eigenspace> spaces;
  std::size_t total = 0;
  for (const auto& lambda : candidates) {
    Matrix shifted = a;
    for (std::size_t i = 0; i < a.rows(); ++i) shifted(i, i) -= lambda;
    Matrix ker = nullspace(shifted);
    if (ker.rows() == 0) continue;
    total += ker.rows();
    spaces.push_back({lambda, std::move(ker)});
  }
  if (total != a.rows()) return std::nullopt;
  return spaces;
}

}  // namespace

Polynomial poly_gcd(Polynomial a, Polynomial b) {
  a = poly_trim(std::move(a));
  b = poly_trim(std::move(b));
  while (!b.empty()) {
    Polynomial r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(std::move(a));
}

Scalar poly_eval(const Polynomial& p, const Scalar& x) {
  Scalar acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial minimal_polynomial(const Matrix& a) {
  if (a.rows() != a.cols()) throw InputError("minimal polynomial of non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return {Scalar(1)};
  // Rows of `powers` are vec(A^0), ..., vec(A^{k-1}); find the first A^k in their span.
  Matrix powers(0, n * n);
  Matrix current = Matrix::identity(n);
  for (std::size_t k = 0; k <= n; ++k) {
    const Matrix flat = to_flat_row(current);
    if (k > 0) {
      // Solve sum c_i vec(A^i) = vec(A^k).
      auto coeffs = solve(powers.transpose(), flat.row(0));
      if (coeffs) {
        Polynomial p(k + 1);
        for (std::size_t i = 0; i < k; ++i) p[i] = -(*coeffs)[i];
        p[k] = 1;
        return p;
      }
    }
    powers.append_row(flat.row(0));
    current = current * a;
  }
  throw InternalInconsistency("minimal polynomial exceeded the Cayley-Hamilton bound");
}

bool is_semisimple_matrix(const Matrix& a) {
  const Polynomial m = minimal_polynomial(a);
  return poly_degree(poly_gcd(m, poly_derivative(m))) == 0;
}

std::optional<std::vector<Eigenspace>> rational_diagonalization(const Matrix& a) {
  if (a.rows() != a.cols()) throw InputError("eigen-decomposition of non-square matrix");
  if (a.rows() == 0) return std::vector<Eigenspace>{};
  if (auto direct = certify(a, real_eigenvalue_guesses(to_double(a)))) return direct;

  // Conjugation can make A badly conditioned; the roots of its squarefree
  // minimal polynomial are far better behaved numerically.
  Polynomial m = minimal_polynomial(a);
  if (poly_degree(poly_gcd(m, poly_derivative(m))) != 0) return std::nullopt;
  const std::size_t d = poly_degree(m);
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
  for (std::size_t i = 0; i < d; ++i) {
    if (i + 1 < d) companion(static_cast<Eigen::Index>(i + 1), static_cast<Eigen::Index>(i)) = 1.0;
    companion(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(d - 1)) = -m[i].get_d();
  }
  std::vector<double> guesses = real_eigenvalue_guesses(companion);
  std::vector<double> verified;
  for (double g : guesses) {
    if (sgn(poly_eval(m, rationalize(g))) == 0) verified.push_back(g);
  }
  return certify(a, verified);
}

Scalar rationalize(double x, long max_den) {
  if (!std::isfinite(x)) return 0;
  const bool negative = x < 0;
  double v = std::abs(x);
  // Convergents h/k of the continued fraction of v.
  mpz_class h_prev = 1, h = static_cast<long>(std::floor(v));
  mpz_class k_prev = 0, k = 1;
  double frac = v - std::floor(v);
  for (int iter = 0; iter < 64 && frac > 1e-12; ++iter) {
    const double inv = 1.0 / frac;
    const long a = static_cast<long>(std::floor(inv));
    frac = inv - std::floor(inv);
    mpz_class h_next = a * h + h_prev;
    mpz_class k_next = a * k + k_prev;
    if (k_next > max_den) break;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
  }
  Scalar q(h, k);
  q.canonicalize();
  return negative ? Scalar(-q) : q;
}

}  // namespace tempered
