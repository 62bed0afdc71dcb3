#include "avsi/scene.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "avsi/error.hpp"

namespace avsi {

// ============================== configuration ===============================

void SceneConfig::validate() const {
  if (!(rim_thickness > 0.0) || !(vessel_inner_radius > rim_thickness / 2.0))
    throw ConfigError("scene: need vessel_inner_radius > rim_thickness/2 > 0");
  if (rim_sample_count < 1) throw ConfigError("scene: rim_sample_count < 1");
  if (depth_noise_sigma < 0.0) throw ConfigError("scene: negative depth_noise_sigma");
  if (outlier_fraction < 0.0 || outlier_fraction > 1.0)
    throw ConfigError("scene: outlier_fraction outside [0, 1]");
  if (outlier_box.min.x >= outlier_box.max.x || outlier_box.min.y >= outlier_box.max.y ||
      outlier_box.min.z >= outlier_box.max.z)
    throw ConfigError("scene: empty outlier_box");
  double a0 = std::fmod(std::fmod(fixed_point_angles_deg[0], 360.0) + 360.0, 360.0);
  double a1 = std::fmod(std::fmod(fixed_point_angles_deg[1], 360.0) + 360.0, 360.0);
  if (std::abs(a0 - a1) < 1e-9) throw ConfigError("scene: fixed point angles coincide");
}

void CameraModel::validate() const {
  if (width < 1 || height < 1) throw ConfigError("camera: empty image");
  if (!(fx > 0.0) || !(fy > 0.0)) throw ConfigError("camera: non-positive focal length");
  if (cx < 0.0 || cx >= width || cy < 0.0 || cy >= height)
    throw ConfigError("camera: principal point outside image");
  if (!pose.orthonormal(1e-9)) throw ConfigError("camera: pose basis not orthonormal");
}

std::optional<CameraModel::Projection> CameraModel::project(const Point3& world) const {
  Vec3 c = pose.to_local(world);
  if (c.z <= 1e-9) return std::nullopt;
  return Projection{fx * c.x / c.z + cx, fy * c.y / c.z + cy, c.z};
}

Point3 CameraModel::deproject(double u, double v, double depth) const {
  Vec3 local{(u - cx) * depth / fx, (v - cy) * depth / fy, depth};
  return pose.to_world(local);
}

CameraModel::Ray CameraModel::pixel_ray(double u, double v) const {
  Vec3 local{(u - cx) / fx, (v - cy) / fy, 1.0};
  Vec3 world_dir = local.x * pose.x_axis.vec() + local.y * pose.y_axis.vec() +
                   local.z * pose.z_axis.vec();
  double n = world_dir.norm();
  Ray r;
  r.origin = pose.origin;
  r.dir = UnitVec3::normalize(world_dir);
  r.depth_per_t = 1.0 / n;  // local z per unit world distance
  return r;
}

CameraModel make_default_camera(const SceneConfig& cfg) {
  constexpr double kHeight = 500.0;       // above the workspace plane
  constexpr double kInclineDeg = 50.0;    // optical axis below horizontal

  double drop = kHeight - cfg.rim_center.z;
  double horizontal = drop / std::tan(deg_to_rad(kInclineDeg));
  Point3 eye{cfg.rim_center.x - horizontal, cfg.rim_center.y, kHeight};

  UnitVec3 forward = UnitVec3::normalize(cfg.rim_center - eye);
  UnitVec3 right = UnitVec3::normalize(forward.vec().cross({0.0, 0.0, 1.0}));
  UnitVec3 down = UnitVec3::normalize(forward.vec().cross(right));

  CameraModel cam;
  cam.pose = Frame{eye, right, down, forward};
  cam.validate();
  return cam;
}

// ================================ scene build ===============================

Scene build_scene(const SceneConfig& cfg, Rng& rng) {
  cfg.validate();

  UnitVec3 world_y = UnitVec3::normalize({0.0, 1.0, 0.0});
  UnitVec3 normal =
      UnitVec3::normalize(rotate_about({0.0, 0.0, 1.0}, world_y, deg_to_rad(cfg.rim_tilt_deg)));

  Scene s;
  s.config = cfg;
  s.truth.rim_circle = Circle3{cfg.rim_center, normal, cfg.vessel_inner_radius};
  s.truth.f1 = point_on_circle(s.truth.rim_circle, deg_to_rad(cfg.fixed_point_angles_deg[0]));
  s.truth.f2 = point_on_circle(s.truth.rim_circle, deg_to_rad(cfg.fixed_point_angles_deg[1]));

  s.surface.centerline = s.truth.rim_circle;
  s.surface.tube_radius = cfg.rim_thickness / 2.0;
  s.surface.samples.reserve(cfg.rim_sample_count);

  auto [u, v] = circle_plane_basis(s.surface.centerline);
  double R = s.surface.centerline.radius;
  double r = s.surface.tube_radius;
  for (int i = 0; i < cfg.rim_sample_count; ++i) {
    double phi = rng.uniform(0.0, 2.0 * kPi);  // around the ring
    double psi = rng.uniform(0.0, 2.0 * kPi);  // around the tube
    Vec3 radial = std::cos(phi) * u.vec() + std::sin(phi) * v.vec();
    s.surface.samples.push_back(cfg.rim_center + (R + r * std::cos(psi)) * radial +
                                r * std::sin(psi) * normal.vec());
  }
  return s;
}

// ================================ rendering =================================

double torus_surface_distance(const Circle3& centerline, double tube_radius, const Point3& p) {
  Vec3 d = p - centerline.center;
  double h = d.dot(centerline.normal);
  double s = reject_from(d, centerline.normal).norm();
  return std::hypot(s - centerline.radius, h) - tube_radius;
}

namespace {

// Outward gradient of torus_surface_distance; near-zero on the ring axis.
Vec3 torus_distance_gradient(const Circle3& cl, const Point3& p) {
  Vec3 d = p - cl.center;
  double h = d.dot(cl.normal);
  Vec3 q = reject_from(d, cl.normal);
  double s = q.norm();
  if (s < 1e-12) return cl.normal.vec();  // degenerate; caller guards
  double m = std::hypot(s - cl.radius, h);
  if (m < 1e-12) return cl.normal.vec();
  return ((s - cl.radius) / m / s) * q + (h / m) * cl.normal.vec();
}

// Newton walk along a pixel ray, started from a splatted sample depth.
// Returns the ray parameter of the surface hit, or nothing for grazing rays.
std::optional<double> refine_ray_hit(const CameraModel::Ray& ray, const RimSurface& surf,
                                     double t0) {
  double t = t0;
  for (int it = 0; it < 12; ++it) {
    Point3 p = ray.origin + t * ray.dir.vec();
    double f = torus_surface_distance(surf.centerline, surf.tube_radius, p);
    if (std::abs(f) <= 1e-10) return t > 0.0 ? std::optional<double>(t) : std::nullopt;
    double g = torus_distance_gradient(surf.centerline, p).dot(ray.dir);
    if (std::abs(g) < 1e-4) return std::nullopt;
    double step = f / g;
    if (std::abs(step) > surf.tube_radius * 4.0) return std::nullopt;
    t -= step;
  }
  return std::nullopt;
}

// Depth of the ray point uniformly drawn from the chord inside the box, if any.
std::optional<double> box_chord_depth(const CameraModel::Ray& ray, const Aabb& box, Rng& rng) {
  double t_near = 0.0;
  double t_far = std::numeric_limits<double>::infinity();
  const double o[3] = {ray.origin.x, ray.origin.y, ray.origin.z};
  const double dir[3] = {ray.dir.x(), ray.dir.y(), ray.dir.z()};
  const double lo[3] = {box.min.x, box.min.y, box.min.z};
  const double hi[3] = {box.max.x, box.max.y, box.max.z};
  for (int k = 0; k < 3; ++k) {
    if (std::abs(dir[k]) < 1e-12) {
      if (o[k] < lo[k] || o[k] > hi[k]) return std::nullopt;
      continue;
    }
    double ta = (lo[k] - o[k]) / dir[k];
    double tb = (hi[k] - o[k]) / dir[k];
    t_near = std::max(t_near, std::min(ta, tb));
    t_far = std::min(t_far, std::max(ta, tb));
  }
  if (t_near >= t_far) return std::nullopt;
  return rng.uniform(t_near, t_far) * ray.depth_per_t;
}

}  // namespace

int RenderResult::count(PointLabel l) const {
  return static_cast<int>(std::count(labels.begin(), labels.end(), l));
}

RenderResult render_splat(const Scene& scene, const CameraModel& cam, Rng& rng) {
  cam.validate();
  const SceneConfig& cfg = scene.config;

  RenderResult out;
  out.image.width = cam.width;
  out.image.height = cam.height;
  std::size_t n = static_cast<std::size_t>(cam.width) * cam.height;
  out.image.color.assign(n, cfg.background_color);
  out.image.depth.assign(n, 0.0);
  out.labels.assign(n, PointLabel::Background);

  // Splat pass: nearest sample wins each pixel.
  int landed = 0;
  for (const Point3& p : scene.surface.samples) {
    auto proj = cam.project(p);
    if (!proj) continue;
    int u = static_cast<int>(std::lround(proj->u));
    int v = static_cast<int>(std::lround(proj->v));
    if (u < 0 || u >= cam.width || v < 0 || v >= cam.height) continue;
    ++landed;
    std::size_t i = out.image.index(u, v);
    if (out.labels[i] != PointLabel::Rim || proj->depth < out.image.depth[i]) {
      out.labels[i] = PointLabel::Rim;
      out.image.depth[i] = proj->depth;
    }
  }
  if (landed == 0) throw RenderError("no rim sample projects inside the image");

  // Snap each rim pixel's depth to the torus hit of its own center ray; a
  // pixel whose ray misses the surface (sample landed from a corner) reverts
  // to background.
  for (int v = 0; v < cam.height; ++v) {
    for (int u = 0; u < cam.width; ++u) {
      std::size_t i = out.image.index(u, v);
      if (out.labels[i] != PointLabel::Rim) continue;
      auto ray = cam.pixel_ray(u, v);
      auto hit = refine_ray_hit(ray, scene.surface, out.image.depth[i] / ray.depth_per_t);
      if (hit) {
        out.image.depth[i] = *hit * ray.depth_per_t;
        out.image.color[i] = cfg.rim_color;
      } else {
        out.labels[i] = PointLabel::Background;
        out.image.depth[i] = 0.0;
      }
    }
  }

  // Workspace plane z = 0 behind everything else.
  for (int v = 0; v < cam.height; ++v) {
    for (int u = 0; u < cam.width; ++u) {
      std::size_t i = out.image.index(u, v);
      if (out.labels[i] != PointLabel::Background) continue;
      auto ray = cam.pixel_ray(u, v);
      double dz = ray.dir.z();
      if (std::abs(dz) < 1e-12) continue;  // depth stays 0: no return
      double t = -ray.origin.z / dz;
      if (t <= 0.0) continue;
      out.image.depth[i] = t * ray.depth_per_t;
    }
  }

  // Depth noise on every return, row-major for determinism.
  if (cfg.depth_noise_sigma > 0.0) {
    for (std::size_t i = 0; i < n; ++i)
      if (out.image.depth[i] > 0.0) out.image.depth[i] += rng.normal(0.0, cfg.depth_noise_sigma);
  }

  // Outlier relocation on rim pixels only; color is left intact.
  if (cfg.outlier_fraction > 0.0) {
    for (int v = 0; v < cam.height; ++v) {
      for (int u = 0; u < cam.width; ++u) {
        std::size_t i = out.image.index(u, v);
        if (out.labels[i] != PointLabel::Rim) continue;
        if (rng.uniform() >= cfg.outlier_fraction) continue;
        auto depth = box_chord_depth(cam.pixel_ray(u, v), cfg.outlier_box, rng);
        if (!depth) continue;
        out.image.depth[i] = *depth;
        out.labels[i] = PointLabel::Outlier;
      }
    }
  }

  return out;
}

}  // namespace avsi
