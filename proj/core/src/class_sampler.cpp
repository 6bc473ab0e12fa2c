// SPDX-License-Identifier: Apache-2.0

#include "puspec/class_sampler.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "puspec/error.hpp"
#include "puspec/geometry.hpp"
#include "puspec/parallel.hpp"
#include "puspec/simplex.hpp"

namespace puspec {

namespace {

std::string describe(const Chromaticity& c) {
  std::ostringstream os;
  os << "(" << c.x << ", " << c.y << ")";
  return os.str();
}

void check_target(const ColorTarget& target) {
  if (!(target.luminance > 0.0 && target.luminance <= 1.0))
    fail(ErrorCode::invalid_argument, "target luminance must lie in (0, 1]");
  if (!std::isfinite(target.c.x) || !std::isfinite(target.c.y))
    fail(ErrorCode::invalid_argument, "target chromaticity must be finite");
}

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

GamutLocation locate_in_gamut(const PUBasis& basis, const Chromaticity& c) {
  const auto& b = basis.chromaticities();
  const auto hull = geometry::convex_hull(b);
  if (hull.size() < 3) return GamutLocation::outside;
  if (geometry::distance_to_boundary(hull, c) <= kTriangleTolerance) return GamutLocation::boundary;
  return geometry::contains(hull, c) ? GamutLocation::inside : GamutLocation::outside;
}

std::vector<IndexTriple> enclosing_triangles(const PUBasis& basis, const Chromaticity& c) {
  switch (locate_in_gamut(basis, c)) {
    case GamutLocation::outside:
      fail(ErrorCode::out_of_gamut, "chromaticity " + describe(c) + " lies outside the basis gamut");
    case GamutLocation::boundary:
      fail(ErrorCode::boundary_singular,
           "chromaticity " + describe(c) + " lies on the basis gamut boundary");
    case GamutLocation::inside:
      break;
  }
  const auto& b = basis.chromaticities();
  const int K = basis.size();
  struct Candidate {
    IndexTriple t;
    double area;
  };
  std::vector<Candidate> found;
  for (int i = 0; i < K; ++i)
    for (int j = i + 1; j < K; ++j)
      for (int k = j + 1; k < K; ++k) {
        const auto &p = b[static_cast<std::size_t>(i)], &q = b[static_cast<std::size_t>(j)],
                   &r = b[static_cast<std::size_t>(k)];
        const double area = 0.5 * std::abs(geometry::cross(p, q, r));
        if (area <= 1e-12) continue;
        const auto l = geometry::barycentric(p, q, r, c);
        if (l[0] >= -kTriangleTolerance && l[1] >= -kTriangleTolerance &&
            l[2] >= -kTriangleTolerance)
          found.push_back({{i, j, k}, area});
      }
  std::stable_sort(found.begin(), found.end(),
                   [](const Candidate& a, const Candidate& b) { return a.area > b.area; });
  std::vector<IndexTriple> out;
  out.reserve(found.size());
  for (const auto& f : found) out.push_back(f.t);
  return out;
}

TriangleDecomposition decompose(const PUBasis& basis, const IndexTriple& triple,
                                const Chromaticity& c) {
  const int K = basis.size();
  const auto& b = basis.chromaticities();
  for (int idx : triple)
    if (idx < 0 || idx >= K)
      fail(ErrorCode::index_out_of_range, "triangle index " + std::to_string(idx) + " out of range");

  TriangleDecomposition d;
  d.indices = triple;
  for (int k = 0; k < K; ++k)
    if (std::find(triple.begin(), triple.end(), k) == triple.end()) d.free_indices.push_back(k);

  auto column = [&](int k) {
    const auto& p = b[static_cast<std::size_t>(k)];
    return Eigen::Vector3d(1.0, p.x, p.y);
  };
  for (int j = 0; j < 3; ++j) d.T.col(j) = column(triple[static_cast<std::size_t>(j)]);
  if (std::abs(d.T.determinant()) < 1e-12)
    fail(ErrorCode::degenerate_triangle, "basis triangle is degenerate");

  d.F.resize(3, static_cast<Eigen::Index>(d.free_indices.size()));
  for (std::size_t j = 0; j < d.free_indices.size(); ++j)
    d.F.col(static_cast<Eigen::Index>(j)) = column(d.free_indices[j]);

  const Eigen::Matrix3d Tinv = d.T.inverse();
  d.a_T = Tinv * Eigen::Vector3d(1.0, c.x, c.y);
  d.M = Tinv * d.F;
  if (d.a_T.minCoeff() < -kTriangleTolerance)
    fail(ErrorCode::invalid_argument, "triangle does not contain the target chromaticity");
  return d;
}

double dof_upper_bound(const TriangleDecomposition& d, std::span<const double> a_F, int n) {
  const int dofs = d.dof_count();
  if (n < 0 || n >= dofs) fail(ErrorCode::index_out_of_range, "dof index out of range");
  if (a_F.size() != static_cast<std::size_t>(dofs))
    fail(ErrorCode::length_mismatch, "dof vector has the wrong length");
  double bound = 1.0;
  for (int i = 0; i < 3; ++i) {
    const double m = d.M(i, n);
    if (m == 0.0) continue;
    double others = 0.0;
    for (int l = 0; l < dofs; ++l)
      if (l != n) others += d.M(i, l) * a_F[static_cast<std::size_t>(l)];
    const double heaviside = m > 0.0 ? 1.0 : 0.0;
    bound = std::min(bound, (d.a_T[i] + heaviside - 1.0 - others) / m);
  }
  return std::max(bound, 0.0);
}

std::vector<double> sample_dof(const TriangleDecomposition& d, Rng& rng, DofOrder order) {
  const auto dofs = static_cast<std::size_t>(d.dof_count());
  std::vector<double> a_F(dofs, 0.0);
  std::vector<int> visit(dofs);
  std::iota(visit.begin(), visit.end(), 0);
  if (order == DofOrder::random_permutation) {
    for (std::size_t i = dofs; i > 1; --i) std::swap(visit[i - 1], visit[rng.index(i)]);
  }
  for (int n : visit) {
    const double bound = dof_upper_bound(d, a_F, n);
    a_F[static_cast<std::size_t>(n)] = bound * rng.uniform();
  }
  return a_F;
}

std::vector<double> bary_from_dof(const TriangleDecomposition& d, std::span<const double> a_F) {
  const int dofs = d.dof_count();
  if (a_F.size() != static_cast<std::size_t>(dofs))
    fail(ErrorCode::length_mismatch, "dof vector has the wrong length");
  const Eigen::Map<const Eigen::VectorXd> aF(a_F.data(), dofs);
  const Eigen::Vector3d tri = d.a_T - d.M * aF;

  const std::size_t K = static_cast<std::size_t>(dofs) + 3;
  std::vector<double> a(K, 0.0);
  auto admit = [](double v) {
    if (v < -kTriangleTolerance || v > 1.0 + kTriangleTolerance || !std::isfinite(v))
      fail(ErrorCode::infeasible, "degrees of freedom violate the barycentric bounds");
    return std::clamp(v, 0.0, 1.0);
  };
  for (int j = 0; j < 3; ++j)
    a[static_cast<std::size_t>(d.indices[static_cast<std::size_t>(j)])] = admit(tri[j]);
  for (int j = 0; j < dofs; ++j)
    a[static_cast<std::size_t>(d.free_indices[static_cast<std::size_t>(j)])] =
        admit(a_F[static_cast<std::size_t>(j)]);
  return a;
}

std::vector<double> LuminanceLine::at(double w0) const {
  std::vector<double> w(direction.size());
  for (std::size_t k = 0; k < w.size(); ++k) w[k] = direction[k] * w0;
  return w;
}

LuminanceLine weights_from_bary(const PUBasis& basis, std::span<const double> a) {
  if (a.size() != static_cast<std::size_t>(basis.size()))
    fail(ErrorCode::length_mismatch, "barycentric vector length does not match the basis");
  const auto pivot = static_cast<std::size_t>(std::max_element(a.begin(), a.end()) - a.begin());
  if (!(a[pivot] > 0.0)) fail(ErrorCode::invalid_argument, "barycentric vector is zero");

  const auto& mag = basis.magnitudes();
  LuminanceLine line;
  line.pivot = static_cast<int>(pivot);
  line.direction.assign(a.size(), 0.0);
  double largest = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] <= 0.0) continue;
    line.direction[k] = (a[k] * mag[pivot]) / (a[pivot] * mag[k]);
    largest = std::max(largest, line.direction[k]);
  }
  line.direction[pivot] = 1.0;
  line.w0_max = std::min(1.0, 1.0 / largest);
  return line;
}

LuminanceResult achieve_luminance(const PUBasis& basis, const LuminanceLine& line,
                                  double luminance) {
  const auto& by = basis.luminances();
  const double slope = dot(line.direction, by);
  if (!(slope > 0.0)) fail(ErrorCode::invalid_argument, "weight line carries no luminance");

  LuminanceResult r;
  const double w0 = luminance / slope;
  if (w0 <= line.w0_max) {
    r.w = line.at(w0);
  } else {
    const std::vector<double> top = line.at(line.w0_max);
    const double f_max = basis.max_value(top);
    const double y_top = dot(top, by);
    const double divisor = std::max(f_max, y_top / luminance);
    r.w = top;
    for (double& v : r.w) v /= divisor;
    r.scaled = true;
  }
  r.achieved_luminance = dot(r.w, by);
  r.luminance_met = std::abs(r.achieved_luminance - luminance) < kLuminanceTolerance;
  return r;
}

std::vector<double> max_luminance_weights(const PUBasis& basis, const Chromaticity& c) {
  if (locate_in_gamut(basis, c) == GamutLocation::outside)
    fail(ErrorCode::out_of_gamut, "chromaticity " + describe(c) + " lies outside the basis gamut");
  const int K = basis.size();
  const auto& colors = basis.colors();
  const auto& mag = basis.magnitudes();

  // The homogeneous row of A w = 0 vanishes identically; keep the x and y rows.
  LinearProgram lp;
  lp.A.resize(2, K);
  for (int k = 0; k < K; ++k) {
    const auto i = static_cast<std::size_t>(k);
    lp.A(0, k) = colors[i].X - c.x * mag[i];
    lp.A(1, k) = colors[i].Y - c.y * mag[i];
  }
  lp.b = Eigen::Vector2d::Zero();
  lp.c.resize(K);
  for (int k = 0; k < K; ++k) lp.c[k] = basis.luminances()[static_cast<std::size_t>(k)];
  lp.lower = Eigen::VectorXd::Zero(K);
  lp.upper = Eigen::VectorXd::Ones(K);

  const LpResult res = solve_bounded_simplex(lp, {kLpTolerance, 10000});
  if (res.status != LpStatus::optimal || !(res.objective > 1e-12))
    fail(ErrorCode::out_of_gamut, "no bounded spectrum reaches chromaticity " + describe(c));
  return {res.x.data(), res.x.data() + K};
}

FeasibilityReport feasibility_check(const PUBasis& basis, const ColorTarget& target) {
  if (!(target.luminance >= 0.0 && target.luminance <= 1.0))
    fail(ErrorCode::invalid_argument, "target luminance must lie in [0, 1]");
  FeasibilityReport report;
  report.max_luminance_weights = max_luminance_weights(basis, target.c);
  const auto& w = report.max_luminance_weights;
  report.max_luminance = dot(w, basis.luminances());
  if (target.luminance <= 0.0) {
    report.scaled_luminance = report.max_luminance;
    report.feasible = true;
    return report;
  }
  const double f_max = basis.max_value(w);
  report.scaled_luminance =
      report.max_luminance / std::max(f_max, report.max_luminance / target.luminance);
  report.feasible = report.scaled_luminance >= target.luminance - kLpTolerance;
  return report;
}

ClassSample boundary_solution(const PUBasis& basis, const ColorTarget& target) {
  check_target(target);
  const auto& b = basis.chromaticities();
  const auto hull = geometry::convex_hull_indices(b);
  if (hull.size() < 3) fail(ErrorCode::out_of_gamut, "basis gamut is degenerate");

  std::size_t best = 0;
  double best_d = std::numeric_limits<double>::infinity();
  for (std::size_t e = 0; e < hull.size(); ++e) {
    const double d =
        geometry::distance_to_segment(target.c, b[hull[e]], b[hull[(e + 1) % hull.size()]]);
    if (d < best_d) {
      best_d = d;
      best = e;
    }
  }
  if (best_d > kTriangleTolerance)
    fail(ErrorCode::invalid_argument, "target is not on the gamut boundary");

  const std::size_t i = hull[best], j = hull[(best + 1) % hull.size()];
  const auto &p = b[i], &q = b[j];
  const double len2 = (q.x - p.x) * (q.x - p.x) + (q.y - p.y) * (q.y - p.y);
  const double t = std::clamp(
      ((target.c.x - p.x) * (q.x - p.x) + (target.c.y - p.y) * (q.y - p.y)) / len2, 0.0, 1.0);

  ClassSample s;
  s.boundary = true;
  s.triangle = {static_cast<int>(std::min(i, j)), static_cast<int>(std::max(i, j)), -1};
  s.a.assign(static_cast<std::size_t>(basis.size()), 0.0);
  s.a[i] = 1.0 - t;
  s.a[j] = t;
  const LuminanceLine line = weights_from_bary(basis, s.a);
  LuminanceResult r = achieve_luminance(basis, line, target.luminance);
  s.w = std::move(r.w);
  s.achieved_luminance = r.achieved_luminance;
  s.luminance_met = r.luminance_met;
  s.scaled = r.scaled;
  return s;
}

std::vector<ClassSample> sample_class(const PUBasis& basis, const ColorTarget& target,
                                      std::size_t count, std::uint64_t seed,
                                      const SamplingOptions& options) {
  check_target(target);
  const GamutLocation where = locate_in_gamut(basis, target.c);
  if (where == GamutLocation::outside)
    fail(ErrorCode::out_of_gamut,
         "chromaticity " + describe(target.c) + " lies outside the basis gamut");
  if (where == GamutLocation::boundary) {
    if (count == 0) return {};
    ClassSample s = boundary_solution(basis, target);
    s.seed = seed;
    return {std::move(s)};
  }

  const std::vector<IndexTriple> triangles = enclosing_triangles(basis, target.c);
  std::vector<TriangleDecomposition> decomps;
  switch (options.policy) {
    case TrianglePolicy::first:
      decomps.push_back(decompose(basis, triangles.front(), target.c));
      break;
    case TrianglePolicy::fixed_index:
      if (options.fixed_index < 0 || static_cast<std::size_t>(options.fixed_index) >= triangles.size())
        fail(ErrorCode::index_out_of_range,
             "triangle index " + std::to_string(options.fixed_index) + " out of range (" +
                 std::to_string(triangles.size()) + " enclosing triangles)");
      decomps.push_back(
          decompose(basis, triangles[static_cast<std::size_t>(options.fixed_index)], target.c));
      break;
    case TrianglePolicy::random_per_sample:
      for (const auto& t : triangles) decomps.push_back(decompose(basis, t, target.c));
      break;
  }

  std::vector<ClassSample> out(count);
  auto run = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      Rng rng = Rng::for_stream(seed, i);
      const std::size_t which = decomps.size() > 1 ? rng.index(decomps.size()) : 0;
      const TriangleDecomposition& d = decomps[which];
      ClassSample& s = out[i];
      s.seed = seed;
      s.index = i;
      s.triangle = d.indices;
      s.a_F = sample_dof(d, rng, options.order);
      s.a = bary_from_dof(d, s.a_F);
      LuminanceResult r = achieve_luminance(basis, weights_from_bary(basis, s.a), target.luminance);
      s.w = std::move(r.w);
      s.achieved_luminance = r.achieved_luminance;
      s.luminance_met = r.luminance_met;
      s.scaled = r.scaled;
    }
  };

  const unsigned threads =
      options.threads ? resolve_threads(options.threads, count) : (count >= 512 ? resolve_threads(0, count) : 1u);
  parallel_chunks(count, threads, run);
  return out;
}

}  // namespace puspec
