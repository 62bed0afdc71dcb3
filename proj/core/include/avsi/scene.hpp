#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "avsi/geometry.hpp"
#include "avsi/rng.hpp"

namespace avsi {

struct Rgb {
  std::uint8_t r = 0, g = 0, b = 0;
  bool operator==(const Rgb&) const = default;
};

struct Aabb {
  Point3 min;
  Point3 max;
};

// Desk-scale phantom: a tilted torus rim over a flat workspace plane.
// Lengths in mm, angles in degrees at this boundary.
struct SceneConfig {
  double vessel_inner_radius = 7.5;  // rim centerline radius
  double rim_thickness = 1.5;        // torus tube diameter
  double rim_tilt_deg = 0.0;         // rotation of the rim plane about world y
  Point3 rim_center{0.0, 0.0, 20.0};
  std::array<double, 2> fixed_point_angles_deg{0.0, 120.0};
  Rgb rim_color{230, 200, 60};
  Rgb background_color{60, 60, 70};
  int rim_sample_count = 4000;
  double depth_noise_sigma = 0.3;  // mm, on every returned depth
  double outlier_fraction = 0.1;   // of rim pixels, relocated into outlier_box
  Aabb outlier_box{{-30.0, -30.0, -10.0}, {30.0, 30.0, 50.0}};

  void validate() const;  // throws ConfigError
};

// Pinhole camera. pose maps camera coordinates (x right, y down, z forward)
// to world coordinates; depth is the camera-frame z in mm, 0 = no return.
struct CameraModel {
  double fx = 5000.0, fy = 5000.0;
  double cx = 240.0, cy = 150.0;
  int width = 480, height = 300;
  Frame pose;

  void validate() const;

  struct Projection {
    double u, v;    // continuous pixel coordinates
    double depth;   // camera-frame z, mm
  };
  // Empty when the point is at or behind the camera plane.
  std::optional<Projection> project(const Point3& world) const;

  Point3 deproject(double u, double v, double depth) const;

  struct Ray {
    Point3 origin;
    UnitVec3 dir;      // world, unit
    double depth_per_t;  // camera-frame z advanced per unit world distance
  };
  Ray pixel_ray(double u, double v) const;
};

// 500 mm above the workspace on the -x side, optical axis dropping at 50
// degrees onto cfg.rim_center; the default rim spans roughly a quarter of the
// image width.
CameraModel make_default_camera(const SceneConfig& cfg);

struct GroundTruth {
  Circle3 rim_circle;  // torus centerline
  Point3 f1, f2;       // fixed grasp points, on rim_circle
};

struct RimSurface {
  Circle3 centerline;
  double tube_radius = 0.75;
  std::vector<Point3> samples;
};

struct Scene {
  SceneConfig config;
  GroundTruth truth;
  RimSurface surface;
};

// Tilts the rim plane about the world y-axis through rim_center and draws
// surface samples uniformly by torus angle pair.
Scene build_scene(const SceneConfig& cfg, Rng& rng);

struct RgbdImage {
  int width = 0, height = 0;
  std::vector<Rgb> color;
  std::vector<double> depth;  // mm, 0 = no return

  std::size_t index(int u, int v) const { return static_cast<std::size_t>(v) * width + u; }
};

enum class PointLabel : std::uint8_t { Background = 0, Rim = 1, Outlier = 2 };

struct RenderResult {
  RgbdImage image;
  std::vector<PointLabel> labels;  // per pixel

  int count(PointLabel l) const;
};

// Point-splat z-buffer render. Rim samples are splatted to their nearest
// pixel; each rim pixel's depth is then snapped to the exact torus
// intersection of its center ray so noise-free renders deproject back onto
// the surface. The workspace plane z=0 fills the rest. Gaussian depth noise
// is applied to every return, then outlier_fraction of rim pixels have their
// depth resampled uniformly along the ray chord inside outlier_box.
// Throws RenderError when no rim sample projects inside the image.
RenderResult render_splat(const Scene& scene, const CameraModel& cam, Rng& rng);

// Signed distance from p to the torus surface (negative inside the tube).
double torus_surface_distance(const Circle3& centerline, double tube_radius, const Point3& p);

}  // namespace avsi
