#include "tempered/arrangement.hpp"

#include <algorithm>

#include "tempered/errors.hpp"

namespace tempered {

namespace {

int sign_of(const Vector& normal, const Vector& y) { return sgn(dot(normal, y)); }

/// Open region {y : sign_i * (n_i . y) > 0 for the constrained i}. Its closure
/// is generated by the candidate rays it contains, so it is nonempty iff the
/// sum of those rays lies strictly inside.
bool region_nonempty(const Arrangement& arr, const std::vector<Vector>& rays,
                     const std::vector<std::size_t>& constrained, const SignVector& signs) {
  Vector sum = zero_vector(arr.dim);
  for (const auto& r : rays) {
    bool inside = true;
    for (std::size_t c = 0; c < constrained.size() && inside; ++c) {
      if (sign_of(arr.normals[constrained[c]], r) * signs[c] < 0) inside = false;
    }
    if (inside) sum = add(sum, r);
  }
  for (std::size_t c = 0; c < constrained.size(); ++c) {
    if (sign_of(arr.normals[constrained[c]], sum) * signs[c] <= 0) return false;
  }
  return true;
}

void combinations(std::size_t m, std::size_t k, std::size_t start, std::vector<std::size_t>& current,
                  std::vector<std::vector<std::size_t>>& out) {
  if (current.size() == k) {
    out.push_back(current);
    return;
  }
  for (std::size_t i = start; i + (k - current.size()) <= m; ++i) {
    current.push_back(i);
    combinations(m, k, i + 1, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Vector> distinct_hyperplanes(const std::vector<Vector>& normals) {
  std::vector<Vector> out;
  for (const auto& n : normals) {
    if (is_zero(n)) continue;
    Vector p = primitive_direction(n);
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(std::move(p));
  }
  return out;
}

std::vector<Vector> candidate_rays(const Arrangement& arr) {
  std::vector<Vector> rays;
  auto push = [&](const Vector& v) {
    Vector p = primitive_direction(v);
    if (std::find(rays.begin(), rays.end(), p) != rays.end()) return;
    rays.push_back(p);
    rays.push_back(scale(Scalar(-1), p));
  };
  if (arr.dim == 0) return rays;
  if (arr.dim == 1) {
    push(Vector{Scalar(1)});
    return rays;
  }
  std::vector<std::vector<std::size_t>> subsets;
  std::vector<std::size_t> current;
  combinations(arr.normals.size(), arr.dim - 1, 0, current, subsets);
  for (const auto& s : subsets) {
    Matrix m(0, arr.dim);
    for (auto i : s) m.append_row(arr.normals[i]);
    const Matrix ker = nullspace(m);
    if (ker.rows() == 1) push(ker.row_vector(0));
  }
  return rays;
}

ChamberEnumeration enumerate_chambers(const Arrangement& arr, std::size_t budget, Parallelism par) {
  ChamberEnumeration out;
  out.rays = candidate_rays(arr);
  std::vector<SignVector> regions{SignVector{}};
  std::vector<std::size_t> constrained;
  for (std::size_t h = 0; h < arr.normals.size(); ++h) {
    constrained.push_back(h);
    std::vector<SignVector> children(2 * regions.size());
    std::vector<char> keep(children.size(), 0);
    parallel_for(children.size(), par, [&](std::size_t idx) {
      SignVector s = regions[idx / 2];
      s.push_back(idx % 2 == 0 ? 1 : -1);
      keep[idx] = region_nonempty(arr, out.rays, constrained, s) ? 1 : 0;
      children[idx] = std::move(s);
    });
    regions.clear();
    for (std::size_t idx = 0; idx < children.size(); ++idx) {
      if (keep[idx]) regions.push_back(std::move(children[idx]));
    }
    if (regions.size() > budget) {
      throw ResourceError("hyperplane arrangement exceeds the chamber budget of " + std::to_string(budget));
    }
  }
  if (arr.normals.empty()) regions.clear();
  std::sort(regions.begin(), regions.end());
  out.chambers = std::move(regions);
  return out;
}

ChamberEnumeration enumerate_chambers_reference(const Arrangement& arr) {
  // The sum of d independent extreme rays of a chamber is interior to it, so
  // the strict sign vectors of all such sums are exactly the chambers.
  ChamberEnumeration out;
  out.rays = candidate_rays(arr);
  if (arr.normals.empty()) return out;
  std::vector<std::vector<std::size_t>> subsets;
  std::vector<std::size_t> current;
  combinations(out.rays.size(), arr.dim, 0, current, subsets);
  for (const auto& s : subsets) {
    Matrix m(0, arr.dim);
    for (auto i : s) m.append_row(out.rays[i]);
    if (rank(m) != arr.dim) continue;
    Vector sum = zero_vector(arr.dim);
    for (auto i : s) sum = add(sum, out.rays[i]);
    SignVector sv;
    for (const auto& n : arr.normals) sv.push_back(sign_of(n, sum));
    if (std::find(sv.begin(), sv.end(), 0) != sv.end()) continue;
    if (std::find(out.chambers.begin(), out.chambers.end(), sv) == out.chambers.end()) out.chambers.push_back(sv);
  }
  std::sort(out.chambers.begin(), out.chambers.end());
  return out;
}

}  // namespace tempered
