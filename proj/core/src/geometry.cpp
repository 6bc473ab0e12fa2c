// SPDX-License-Identifier: Apache-2.0

#include "puspec/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace puspec::geometry {

double cross(const Point& o, const Point& a, const Point& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

double signed_area(std::span<const Point> polygon) {
  const std::size_t n = polygon.size();
  if (n < 3) return 0.0;
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = polygon[i];
    const Point& b = polygon[(i + 1) % n];
    s += a.x * b.y - b.x * a.y;
  }
  return 0.5 * s;
}

double area(std::span<const Point> polygon) { return std::abs(signed_area(polygon)); }

double distance_to_segment(const Point& p, const Point& a, const Point& b) {
  const double dx = b.x - a.x, dy = b.y - a.y;
  const double len2 = dx * dx + dy * dy;
  double t = 0.0;
  if (len2 > 0.0) t = std::clamp(((p.x - a.x) * dx + (p.y - a.y) * dy) / len2, 0.0, 1.0);
  return std::hypot(p.x - (a.x + t * dx), p.y - (a.y + t * dy));
}

double distance_to_boundary(std::span<const Point> polygon, const Point& p) {
  double d = std::numeric_limits<double>::infinity();
  const std::size_t n = polygon.size();
  for (std::size_t i = 0; i < n; ++i)
    d = std::min(d, distance_to_segment(p, polygon[i], polygon[(i + 1) % n]));
  return d;
}

bool contains(std::span<const Point> polygon, const Point& p, double tolerance) {
  const std::size_t n = polygon.size();
  if (n < 3) return false;
  if (tolerance > 0.0 && distance_to_boundary(polygon, p) <= tolerance) return true;
  bool inside = false;
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const Point& a = polygon[i];
    const Point& b = polygon[j];
    if ((a.y > p.y) != (b.y > p.y)) {
      const double x = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (p.x < x) inside = !inside;
    }
  }
  return inside;
}

std::array<double, 3> barycentric(const Point& a, const Point& b, const Point& c, const Point& p) {
  const double det = cross(a, b, c);
  const double l0 = cross(p, b, c) / det;
  const double l1 = cross(a, p, c) / det;
  return {l0, l1, 1.0 - l0 - l1};
}

std::vector<Point> counter_clockwise(std::span<const Point> polygon) {
  std::vector<Point> out(polygon.begin(), polygon.end());
  if (signed_area(out) < 0.0) std::reverse(out.begin(), out.end());
  return out;
}

std::vector<Point> clip_convex(std::span<const Point> subject, std::span<const Point> convex_clip) {
  std::vector<Point> output = counter_clockwise(subject);
  const std::vector<Point> clip = counter_clockwise(convex_clip);
  const std::size_t m = clip.size();
  for (std::size_t e = 0; e < m && !output.empty(); ++e) {
    const Point& a = clip[e];
    const Point& b = clip[(e + 1) % m];
    const std::vector<Point> input = std::move(output);
    output.clear();
    const std::size_t n = input.size();
    for (std::size_t i = 0; i < n; ++i) {
      const Point& cur = input[i];
      const Point& prev = input[(i + n - 1) % n];
      const double dc = cross(a, b, cur);
      const double dp = cross(a, b, prev);
      if (dc >= 0.0) {
        if (dp < 0.0) {
          const double t = dp / (dp - dc);
          output.push_back({prev.x + t * (cur.x - prev.x), prev.y + t * (cur.y - prev.y)});
        }
        output.push_back(cur);
      } else if (dp >= 0.0) {
        const double t = dp / (dp - dc);
        output.push_back({prev.x + t * (cur.x - prev.x), prev.y + t * (cur.y - prev.y)});
      }
    }
  }
  return output;
}

namespace {

bool segments_intersect(const Point& p1, const Point& p2, const Point& q1, const Point& q2) {
  const double d1 = cross(q1, q2, p1);
  const double d2 = cross(q1, q2, p2);
  const double d3 = cross(p1, p2, q1);
  const double d4 = cross(p1, p2, q2);
  if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0)))
    return true;
  auto on_segment = [](const Point& a, const Point& b, const Point& p) {
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
           p.y <= std::max(a.y, b.y);
  };
  if (d1 == 0 && on_segment(q1, q2, p1)) return true;
  if (d2 == 0 && on_segment(q1, q2, p2)) return true;
  if (d3 == 0 && on_segment(p1, p2, q1)) return true;
  if (d4 == 0 && on_segment(p1, p2, q2)) return true;
  return false;
}

}  // namespace

bool is_simple(std::span<const Point> polygon) {
  const std::size_t n = polygon.size();
  if (n < 3) return false;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (j == i + 1 || (i == 0 && j == n - 1)) continue;
      if (segments_intersect(polygon[i], polygon[(i + 1) % n], polygon[j], polygon[(j + 1) % n]))
        return false;
    }
  }
  return true;
}

std::vector<std::size_t> convex_hull_indices(std::span<const Point> points) {
  std::vector<std::size_t> idx(points.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    const Point& p = points[a];
    const Point& q = points[b];
    return p.x < q.x || (p.x == q.x && (p.y < q.y || (p.y == q.y && a < b)));
  });
  idx.erase(std::unique(idx.begin(), idx.end(),
                        [&](std::size_t a, std::size_t b) { return points[a] == points[b]; }),
            idx.end());
  if (idx.size() < 3) return idx;
  std::vector<std::size_t> hull(2 * idx.size());
  std::size_t k = 0;
  for (std::size_t i : idx) {
    while (k >= 2 && cross(points[hull[k - 2]], points[hull[k - 1]], points[i]) <= 0.0) --k;
    hull[k++] = i;
  }
  for (std::size_t j = idx.size() - 1, t = k + 1; j-- > 0;) {
    while (k >= t && cross(points[hull[k - 2]], points[hull[k - 1]], points[idx[j]]) <= 0.0) --k;
    hull[k++] = idx[j];
  }
  hull.resize(k - 1);
  return hull;
}

std::vector<Point> convex_hull(std::span<const Point> points) {
  std::vector<Point> hull;
  for (std::size_t i : convex_hull_indices(points)) hull.push_back(points[i]);
  return hull;
}

}  // namespace puspec::geometry
