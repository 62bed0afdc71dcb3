#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "avsi/error.hpp"
#include "avsi/io.hpp"

namespace avsi {

namespace {

const char* label_name(PointLabel l) {
  switch (l) {
    case PointLabel::Rim: return "rim";
    case PointLabel::Outlier: return "outlier";
    case PointLabel::Background: return "background";
  }
  return "rim";
}

PointLabel label_from(std::string_view s) {
  if (s == "rim") return PointLabel::Rim;
  if (s == "outlier") return PointLabel::Outlier;
  if (s == "background") return PointLabel::Background;
  throw ConfigError("unknown point label: " + std::string(s));
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = line.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(line.substr(start));
      break;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
  return out;
}

double parse_double(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw ConfigError("bad numeric field: " + std::string(s));
  return value;
}

}  // namespace

std::string cloud_to_csv(const PointCloud& cloud) {
  std::string out = "x_mm,y_mm,z_mm,label\n";
  char buf[128];
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    const Point3& p = cloud.points[i];
    std::snprintf(buf, sizeof buf, "%.6f,%.6f,%.6f,%s\n", p.x, p.y, p.z,
                  label_name(cloud.labels[i]));
    out += buf;
  }
  return out;
}

PointCloud cloud_from_csv(std::string_view text) {
  PointCloud cloud;
  std::size_t pos = 0;
  bool first = true;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (first) {
      first = false;
      if (line.find("x_mm") != std::string_view::npos) continue;  // header
    }
    auto fields = split(line, ',');
    if (fields.size() != 3 && fields.size() != 4)
      throw ConfigError("cloud CSV row needs 3 or 4 fields");
    Point3 p{parse_double(fields[0]), parse_double(fields[1]), parse_double(fields[2])};
    PointLabel l = fields.size() == 4 ? label_from(fields[3]) : PointLabel::Rim;
    cloud.push_back(p, l);
  }
  return cloud;
}

void write_cloud_csv(const PointCloud& cloud, const std::filesystem::path& file) {
  write_text_file(file, cloud_to_csv(cloud));
}

PointCloud read_cloud_csv(const std::filesystem::path& file) {
  return cloud_from_csv(read_text_file(file));
}

std::string read_text_file(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw IoError("cannot open " + file.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("read failed: " + file.string());
  return ss.str();
}

void write_text_file(const std::filesystem::path& file, std::string_view text) {
  std::ofstream out(file, std::ios::binary);
  if (!out) throw IoError("cannot open for write: " + file.string());
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw IoError("write failed: " + file.string());
}

}  // namespace avsi
