#include "avsi/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace avsi {

Vec3 rotate_about(const Vec3& v, const UnitVec3& axis, double angle) {
  const Vec3& k = axis.vec();
  double c = std::cos(angle);
  double s = std::sin(angle);
  return v * c + k.cross(v) * s + k * (k.dot(v) * (1.0 - c));
}

bool Frame::orthonormal(double tol) const {
  const Vec3& x = x_axis.vec();
  const Vec3& y = y_axis.vec();
  const Vec3& z = z_axis.vec();
  if (std::abs(x.norm() - 1.0) > tol) return false;
  if (std::abs(y.norm() - 1.0) > tol) return false;
  if (std::abs(z.norm() - 1.0) > tol) return false;
  if (std::abs(x.dot(y)) > tol) return false;
  if (std::abs(y.dot(z)) > tol) return false;
  if (std::abs(z.dot(x)) > tol) return false;
  return x.cross(y).dot(z) > 1.0 - 10.0 * tol;  // right-handed, det ~ +1
}

Frame rotate_frame(const Frame& f, const UnitVec3& axis, double angle) {
  Frame out;
  out.origin = f.origin;
  out.x_axis = UnitVec3::normalize(rotate_about(f.x_axis, axis, angle));
  out.y_axis = UnitVec3::normalize(rotate_about(f.y_axis, axis, angle));
  out.z_axis = UnitVec3::normalize(rotate_about(f.z_axis, axis, angle));
  return out;
}

UnitVec3 canonical_normal(const UnitVec3& n) {
  constexpr double kTie = 1e-12;
  const Vec3& v = n.vec();
  if (v.z > kTie) return n;
  if (v.z < -kTie) return -n;
  if (v.y > kTie) return n;
  if (v.y < -kTie) return -n;
  return v.x >= 0.0 ? n : -n;
}

std::optional<Circle3> circle_from_three_points(const Point3& p1, const Point3& p2,
                                                const Point3& p3) {
  Vec3 u = p2 - p1;
  Vec3 v = p3 - p1;
  Vec3 w = u.cross(v);
  double w2 = w.squared_norm();
  if (w.norm() <= 2e-9) return std::nullopt;  // collinear: area <= 1e-9

  // Circumcenter = p1 + a*u + b*v from the two perpendicular-bisector
  // constraints (O-p1).u = |u|^2/2 and (O-p1).v = |v|^2/2.
  double uu = u.squared_norm();
  double vv = v.squared_norm();
  double uv = u.dot(v);
  double a = vv * (uu - uv) / (2.0 * w2);
  double b = uu * (vv - uv) / (2.0 * w2);

  Circle3 c;
  c.center = p1 + a * u + b * v;
  c.radius = (c.center - p1).norm();
  c.normal = canonical_normal(UnitVec3::normalize(w));
  return c;
}

double point_to_circle_distance(const Point3& p, const Circle3& c) {
  Vec3 d = p - c.center;
  double h = d.dot(c.normal);
  double rho = reject_from(d, c.normal).norm();
  return std::hypot(rho - c.radius, h);
}

std::pair<UnitVec3, UnitVec3> circle_plane_basis(const Circle3& c) {
  Vec3 ux = reject_from({1, 0, 0}, c.normal);
  if (ux.norm() < 1e-6) ux = reject_from({0, 1, 0}, c.normal);
  UnitVec3 u = UnitVec3::normalize(ux);
  UnitVec3 v = UnitVec3::normalize(c.normal.vec().cross(u));
  return {u, v};
}

Point3 point_on_circle(const Circle3& c, double angle) {
  auto [u, v] = circle_plane_basis(c);
  return c.center + c.radius * (std::cos(angle) * u.vec() + std::sin(angle) * v.vec());
}

double circle_angle_of(const Circle3& c, const Point3& p) {
  auto [u, v] = circle_plane_basis(c);
  Vec3 d = p - c.center;
  double a = std::atan2(d.dot(v), d.dot(u));
  if (a < 0.0) a += 2.0 * kPi;
  return a;
}

Frame grasp_frame(const Point3& g, const Circle3& c) {
  Vec3 radial = reject_from(g - c.center, c.normal);
  if (radial.norm() < 1e-9) throw GeometryError("grasp point on circle axis");
  Frame f;
  f.origin = g;
  f.z_axis = c.normal;
  f.x_axis = UnitVec3::normalize(radial);
  f.y_axis = UnitVec3::normalize(f.z_axis.vec().cross(f.x_axis));
  return f;
}

double triangle_area(const Triangle3& t) {
  return 0.5 * (t.b - t.a).cross(t.c - t.a).norm();
}

double triangle_incircle_radius(const Triangle3& t) {
  double a = distance(t.b, t.c);
  double b = distance(t.c, t.a);
  double c = distance(t.a, t.b);
  double s = 0.5 * (a + b + c);
  if (s < 1e-300) return 0.0;
  return triangle_area(t) / s;
}

}  // namespace avsi
