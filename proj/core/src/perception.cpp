#include "avsi/perception.hpp"

#include <algorithm>

#include "avsi/error.hpp"

namespace avsi {

int SegMask::count() const {
  return static_cast<int>(std::count(data.begin(), data.end(), std::uint8_t{1}));
}

ColorBand ColorBand::around(Rgb color, int tolerance) {
  auto lo = [&](std::uint8_t c) { return static_cast<std::uint8_t>(std::max(0, c - tolerance)); };
  auto hi = [&](std::uint8_t c) { return static_cast<std::uint8_t>(std::min(255, c + tolerance)); };
  return ColorBand{lo(color.r), hi(color.r), lo(color.g), hi(color.g), lo(color.b), hi(color.b)};
}

SegMask segment_threshold(const RgbdImage& img, const ColorBand& band) {
  SegMask m(img.width, img.height);
  for (std::size_t i = 0; i < img.color.size(); ++i)
    m.data[i] = band.contains(img.color[i]) ? 1 : 0;
  return m;
}

double iou(const SegMask& a, const SegMask& b) {
  if (a.width != b.width || a.height != b.height)
    throw DimensionMismatch("iou: mask sizes differ");
  long inter = 0, uni = 0;
  for (std::size_t i = 0; i < a.data.size(); ++i) {
    bool pa = a.data[i] != 0, pb = b.data[i] != 0;
    inter += pa && pb;
    uni += pa || pb;
  }
  if (uni == 0) return 1.0;  // both empty: perfect agreement
  return static_cast<double>(inter) / static_cast<double>(uni);
}

PointCloud deproject(const SegMask& mask, const RgbdImage& img, const CameraModel& cam) {
  if (mask.width != img.width || mask.height != img.height)
    throw DimensionMismatch("deproject: mask and image sizes differ");
  PointCloud cloud;
  for (int v = 0; v < img.height; ++v) {
    for (int u = 0; u < img.width; ++u) {
      std::size_t i = img.index(u, v);
      if (mask.data[i] == 0) continue;
      double d = img.depth[i];
      if (d <= 0.0) continue;
      cloud.push_back(cam.deproject(u, v, d), PointLabel::Rim);
    }
  }
  return cloud;
}

PointCloud deproject_labeled(const RenderResult& render, const CameraModel& cam) {
  const RgbdImage& img = render.image;
  PointCloud cloud;
  for (int v = 0; v < img.height; ++v) {
    for (int u = 0; u < img.width; ++u) {
      std::size_t i = img.index(u, v);
      double d = img.depth[i];
      if (d <= 0.0) continue;
      cloud.push_back(cam.deproject(u, v, d), render.labels[i]);
    }
  }
  return cloud;
}

}  // namespace avsi
