#pragma once

#include <cmath>
#include <optional>
#include <utility>

#include "avsi/error.hpp"

namespace avsi {

inline constexpr double kPi = 3.14159265358979323846;

constexpr double deg_to_rad(double deg) { return deg * kPi / 180.0; }
constexpr double rad_to_deg(double rad) { return rad * 180.0 / kPi; }

// ===================== vectors and points (millimetres) =====================

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  constexpr Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  constexpr Vec3 operator-() const { return {-x, -y, -z}; }
  constexpr Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  constexpr Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
  Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }
  Vec3& operator-=(const Vec3& o) { x -= o.x; y -= o.y; z -= o.z; return *this; }

  constexpr double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
  constexpr Vec3 cross(const Vec3& o) const {
    return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
  }
  constexpr double squared_norm() const { return dot(*this); }
  double norm() const { return std::sqrt(squared_norm()); }
};

constexpr Vec3 operator*(double s, const Vec3& v) { return v * s; }

using Point3 = Vec3;

inline double distance(const Point3& a, const Point3& b) { return (a - b).norm(); }

// ============================== unit vectors ================================

// Norm is 1 within 1e-9 by construction; factories reject near-zero input.
class UnitVec3 {
 public:
  UnitVec3() = default;  // +z

  static std::optional<UnitVec3> try_normalize(const Vec3& v) {
    double n = v.norm();
    if (n < 1e-12) return std::nullopt;
    return UnitVec3(v / n);
  }

  static UnitVec3 normalize(const Vec3& v) {
    auto u = try_normalize(v);
    if (!u) throw GeometryError("cannot normalize near-zero vector");
    return *u;
  }

  double x() const { return v_.x; }
  double y() const { return v_.y; }
  double z() const { return v_.z; }
  const Vec3& vec() const { return v_; }
  operator const Vec3&() const { return v_; }  // NOLINT: arithmetic convenience

  UnitVec3 operator-() const { return UnitVec3(-v_); }

 private:
  explicit UnitVec3(const Vec3& v) : v_(v) {}
  Vec3 v_{0.0, 0.0, 1.0};
};

// Rodrigues rotation of v about `axis` by `angle` radians (right-handed).
Vec3 rotate_about(const Vec3& v, const UnitVec3& axis, double angle);

// ================================= frames ===================================

// Right-handed orthonormal pose: columns x/y/z are the basis in world terms.
struct Frame {
  Point3 origin;
  UnitVec3 x_axis{UnitVec3::normalize({1, 0, 0})};
  UnitVec3 y_axis{UnitVec3::normalize({0, 1, 0})};
  UnitVec3 z_axis;  // defaults to +z

  bool orthonormal(double tol = 1e-9) const;
  Point3 to_world(const Vec3& local) const {
    return origin + local.x * x_axis.vec() + local.y * y_axis.vec() + local.z * z_axis.vec();
  }
  Vec3 to_local(const Point3& world) const {
    Vec3 d = world - origin;
    return {d.dot(x_axis), d.dot(y_axis), d.dot(z_axis)};
  }
};

// Rotates the basis about `axis` (origin fixed).
Frame rotate_frame(const Frame& f, const UnitVec3& axis, double angle);

// ============================ circles, triangles ============================

struct Circle3 {
  Point3 center;
  UnitVec3 normal;
  double radius = 0.0;  // > 0
};

struct Triangle3 {
  Point3 a, b, c;
};

// Component of v perpendicular to n.
inline Vec3 reject_from(const Vec3& v, const UnitVec3& n) {
  return v - v.dot(n) * n.vec();
}

// Flips n if needed so that z > 0, tie-breaking on y then x.
UnitVec3 canonical_normal(const UnitVec3& n);

// Circumscribed circle of three points. Empty when the points are collinear
// (twice the triangle area below 1e-9). Normal follows canonical_normal.
std::optional<Circle3> circle_from_three_points(const Point3& p1, const Point3& p2,
                                                const Point3& p3);

// Euclidean distance from p to the circle curve. Exact on the axis:
// sqrt(r^2 + h^2).
double point_to_circle_distance(const Point3& p, const Circle3& c);

// Deterministic in-plane basis (u, v): u is the normalized projection of the
// world x-axis onto the circle plane (world y-axis when that projection is
// shorter than 1e-6), v = normal x u.
std::pair<UnitVec3, UnitVec3> circle_plane_basis(const Circle3& c);

// c.center + r*(cos(angle)*u + sin(angle)*v) in the basis above.
Point3 point_on_circle(const Circle3& c, double angle);

// In-plane angle of p in [0, 2*pi), measured in the same basis.
double circle_angle_of(const Circle3& c, const Point3& p);

// Gripper pose at g: z = circle normal, x = outward radial through g,
// y = z x x. Throws GeometryError when g is within 1e-9 of the center axis.
Frame grasp_frame(const Point3& g, const Circle3& c);

double triangle_area(const Triangle3& t);

// Inscribed-circle radius, area / semiperimeter. Degenerate triangles give 0.
double triangle_incircle_radius(const Triangle3& t);

}  // namespace avsi
