#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "avsi/perception.hpp"
#include "avsi/scene.hpp"

namespace avsi {

// ----- PNG -----
// Color frames are 8-bit RGB. Depth frames are 16-bit grayscale in 0.1 mm
// units (value 0 = no return, saturating at 6553.5 mm). Masks are 8-bit
// grayscale 0/255. All throw IoError on filesystem or codec failure.

void write_color_png(const RgbdImage& img, const std::filesystem::path& file);
void write_depth_png(const RgbdImage& img, const std::filesystem::path& file);

// Reads a 16-bit grayscale depth PNG back into mm.
RgbdImage read_depth_png(const std::filesystem::path& file);

// ----- point-cloud CSV -----
// Header "x_mm,y_mm,z_mm,label", label in {rim, background, outlier}; the
// label column may be absent on input (rows default to rim).

std::string cloud_to_csv(const PointCloud& cloud);
PointCloud cloud_from_csv(std::string_view text);

void write_cloud_csv(const PointCloud& cloud, const std::filesystem::path& file);
PointCloud read_cloud_csv(const std::filesystem::path& file);

// ----- small file helpers -----
std::string read_text_file(const std::filesystem::path& file);
void write_text_file(const std::filesystem::path& file, std::string_view text);

}  // namespace avsi
