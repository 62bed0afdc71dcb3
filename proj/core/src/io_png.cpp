#include <png.h>

#include <cmath>
#include <cstdio>
#include <cstring>
#include <memory>
#include <vector>

#include "avsi/error.hpp"
#include "avsi/io.hpp"
#include "avsi/perception.hpp"

namespace avsi {

namespace {

struct FileCloser {
  void operator()(std::FILE* f) const {
    if (f) std::fclose(f);
  }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

FilePtr open_file(const std::filesystem::path& p, const char* mode) {
  FilePtr f(std::fopen(p.string().c_str(), mode));
  if (!f) throw IoError("cannot open " + p.string());
  return f;
}

// Writes one grayscale or RGB PNG; rows hold big-endian samples already.
void write_png(const std::filesystem::path& file, int w, int h, int bit_depth, int color_type,
               const std::vector<std::vector<png_byte>>& rows) {
  FilePtr f = open_file(file, "wb");
  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (!png) throw IoError("png_create_write_struct failed");
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_write_struct(&png, nullptr);
    throw IoError("png_create_info_struct failed");
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    throw IoError("png write failed: " + file.string());
  }
  png_init_io(png, f.get());
  png_set_IHDR(png, info, w, h, bit_depth, color_type, PNG_INTERLACE_NONE,
               PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  for (const auto& row : rows) png_write_row(png, const_cast<png_bytep>(row.data()));
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
}

struct PngData {
  int width = 0, height = 0;
  int bit_depth = 0, channels = 0;
  std::vector<png_byte> bytes;  // packed rows, 16-bit samples big-endian
};

PngData read_png(const std::filesystem::path& file) {
  FilePtr f = open_file(file, "rb");
  png_byte sig[8];
  if (std::fread(sig, 1, 8, f.get()) != 8 || png_sig_cmp(sig, 0, 8))
    throw IoError("not a PNG file: " + file.string());

  png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (!png) throw IoError("png_create_read_struct failed");
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_read_struct(&png, nullptr, nullptr);
    throw IoError("png_create_info_struct failed");
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw IoError("png read failed: " + file.string());
  }
  png_init_io(png, f.get());
  png_set_sig_bytes(png, 8);
  png_read_info(png, info);

  png_set_palette_to_rgb(png);
  png_set_expand_gray_1_2_4_to_8(png);
  png_set_strip_alpha(png);
  png_read_update_info(png, info);

  PngData out;
  out.width = static_cast<int>(png_get_image_width(png, info));
  out.height = static_cast<int>(png_get_image_height(png, info));
  out.bit_depth = png_get_bit_depth(png, info);
  out.channels = png_get_channels(png, info);

  std::size_t row_bytes = png_get_rowbytes(png, info);
  out.bytes.resize(row_bytes * out.height);
  std::vector<png_bytep> rows(out.height);
  for (int y = 0; y < out.height; ++y) rows[y] = out.bytes.data() + row_bytes * y;
  png_read_image(png, rows.data());
  png_read_end(png, nullptr);
  png_destroy_read_struct(&png, &info, nullptr);
  return out;
}

}  // namespace

void write_color_png(const RgbdImage& img, const std::filesystem::path& file) {
  std::vector<std::vector<png_byte>> rows(img.height);
  for (int v = 0; v < img.height; ++v) {
    rows[v].resize(static_cast<std::size_t>(img.width) * 3);
    for (int u = 0; u < img.width; ++u) {
      const Rgb& c = img.color[img.index(u, v)];
      rows[v][3 * u + 0] = c.r;
      rows[v][3 * u + 1] = c.g;
      rows[v][3 * u + 2] = c.b;
    }
  }
  write_png(file, img.width, img.height, 8, PNG_COLOR_TYPE_RGB, rows);
}

void write_depth_png(const RgbdImage& img, const std::filesystem::path& file) {
  std::vector<std::vector<png_byte>> rows(img.height);
  for (int v = 0; v < img.height; ++v) {
    rows[v].resize(static_cast<std::size_t>(img.width) * 2);
    for (int u = 0; u < img.width; ++u) {
      double mm = img.depth[img.index(u, v)];
      long q = std::lround(std::max(0.0, mm) * 10.0);  // 0.1 mm units
      std::uint16_t s = static_cast<std::uint16_t>(std::min(q, 65535L));
      rows[v][2 * u + 0] = static_cast<png_byte>(s >> 8);
      rows[v][2 * u + 1] = static_cast<png_byte>(s & 0xFF);
    }
  }
  write_png(file, img.width, img.height, 16, PNG_COLOR_TYPE_GRAY, rows);
}

RgbdImage read_depth_png(const std::filesystem::path& file) {
  PngData png = read_png(file);
  if (png.channels != 1 || png.bit_depth != 16)
    throw IoError("depth PNG must be 16-bit grayscale: " + file.string());
  RgbdImage img;
  img.width = png.width;
  img.height = png.height;
  std::size_t n = static_cast<std::size_t>(png.width) * png.height;
  img.color.assign(n, Rgb{});
  img.depth.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::uint16_t s = static_cast<std::uint16_t>((png.bytes[2 * i] << 8) | png.bytes[2 * i + 1]);
    img.depth[i] = s * 0.1;
  }
  return img;
}

SegMask load_mask(const std::filesystem::path& file,
                  std::optional<std::pair<int, int>> expected_size) {
  PngData png = read_png(file);
  if (png.channels != 1)
    throw IoError("mask PNG must be grayscale: " + file.string());
  if (expected_size &&
      (png.width != expected_size->first || png.height != expected_size->second))
    throw DimensionMismatch("mask size differs from expected");
  SegMask m(png.width, png.height);
  std::size_t n = m.data.size();
  for (std::size_t i = 0; i < n; ++i) {
    int value = png.bit_depth == 16 ? png.bytes[2 * i]  // high byte == 8-bit scale
                                    : png.bytes[i];
    m.data[i] = value > 127 ? 1 : 0;
  }
  return m;
}

void save_mask(const SegMask& mask, const std::filesystem::path& file) {
  std::vector<std::vector<png_byte>> rows(mask.height);
  for (int v = 0; v < mask.height; ++v) {
    rows[v].resize(mask.width);
    for (int u = 0; u < mask.width; ++u) rows[v][u] = mask.test(u, v) ? 255 : 0;
  }
  write_png(file, mask.width, mask.height, 8, PNG_COLOR_TYPE_GRAY, rows);
}

}  // namespace avsi
