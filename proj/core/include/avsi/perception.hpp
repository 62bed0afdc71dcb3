#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <utility>
#include <vector>

#include "avsi/scene.hpp"

namespace avsi {

struct SegMask {
  int width = 0, height = 0;
  std::vector<std::uint8_t> data;  // 0 / 1

  SegMask() = default;
  SegMask(int w, int h) : width(w), height(h), data(static_cast<std::size_t>(w) * h, 0) {}

  std::size_t index(int u, int v) const { return static_cast<std::size_t>(v) * width + u; }
  bool test(int u, int v) const { return data[index(u, v)] != 0; }
  void set(int u, int v, bool on = true) { data[index(u, v)] = on ? 1 : 0; }
  int count() const;
};

// Inclusive per-channel RGB band.
struct ColorBand {
  std::uint8_t r_min = 0, r_max = 255;
  std::uint8_t g_min = 0, g_max = 255;
  std::uint8_t b_min = 0, b_max = 255;

  static ColorBand around(Rgb color, int tolerance);
  bool contains(Rgb c) const {
    return c.r >= r_min && c.r <= r_max && c.g >= g_min && c.g <= g_max && c.b >= b_min &&
           c.b <= b_max;
  }
};

// Pixel set iff its color lies in the band; depth plays no part.
SegMask segment_threshold(const RgbdImage& img, const ColorBand& band);

// Intersection over union; two empty masks count as 1.0.
// Throws DimensionMismatch when the masks disagree on size.
double iou(const SegMask& a, const SegMask& b);

// Grayscale PNG, pixel set iff value > 127 (16-bit inputs are scaled first).
// Throws IoError on read failure, DimensionMismatch when expected_size is
// given and differs.
SegMask load_mask(const std::filesystem::path& file,
                  std::optional<std::pair<int, int>> expected_size = std::nullopt);
void save_mask(const SegMask& mask, const std::filesystem::path& file);

using Label = PointLabel;

struct PointCloud {
  std::vector<Point3> points;
  std::vector<PointLabel> labels;  // same length as points

  std::size_t size() const { return points.size(); }
  void push_back(const Point3& p, PointLabel l) {
    points.push_back(p);
    labels.push_back(l);
  }
};

// Back-projects every set pixel with a positive depth into world coordinates;
// emitted points are labelled Rim. Throws DimensionMismatch when mask and
// image sizes differ.
PointCloud deproject(const SegMask& mask, const RgbdImage& img, const CameraModel& cam);

// Full-frame deprojection carrying the renderer's per-pixel labels.
PointCloud deproject_labeled(const RenderResult& render, const CameraModel& cam);

}  // namespace avsi
