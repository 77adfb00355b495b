#include "rangekit/grid_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>

#include "rangekit/error.hpp"

namespace rangekit {

namespace {

constexpr char kMagic[4] = {'R', 'G', 'R', 'D'};

void put_u32(std::ostream& out, std::uint32_t v) {
  char b[4] = {static_cast<char>(v & 0xff), static_cast<char>((v >> 8) & 0xff),
               static_cast<char>((v >> 16) & 0xff),
               static_cast<char>((v >> 24) & 0xff)};
  out.write(b, 4);
}

std::uint32_t get_u32(std::istream& in, const std::string& path) {
  unsigned char b[4];
  if (!in.read(reinterpret_cast<char*>(b), 4))
    throw IoError("truncated RGRD header: " + path);
  return static_cast<std::uint32_t>(b[0]) |
         (static_cast<std::uint32_t>(b[1]) << 8) |
         (static_cast<std::uint32_t>(b[2]) << 16) |
         (static_cast<std::uint32_t>(b[3]) << 24);
}

void write_f32_payload(std::ostream& out, std::span<const float> values) {
  static_assert(sizeof(float) == 4);
  // Host is little-endian on every supported target; raw write is the
  // wire format.
  out.write(reinterpret_cast<const char*>(values.data()),
            static_cast<std::streamsize>(values.size() * 4));
}

struct Header {
  GridSpec spec;
  RgrdType dtype;
};

Header read_header(std::istream& in, const std::string& path) {
  char magic[4];
  if (!in.read(magic, 4) || std::memcmp(magic, kMagic, 4) != 0)
    throw IoError("not an RGRD file: " + path);
  std::uint32_t rows = get_u32(in, path);
  std::uint32_t cols = get_u32(in, path);
  std::uint32_t dtype = get_u32(in, path);
  if (rows == 0 || cols == 0)
    throw IoError("RGRD with zero dimension: " + path);
  if (dtype > 2) throw IoError("unknown RGRD dtype tag: " + path);
  Header h;
  h.spec.rows = static_cast<int>(rows);
  h.spec.cols = static_cast<int>(cols);
  h.spec.resolution_deg = 180.0 / static_cast<double>(rows);
  h.dtype = static_cast<RgrdType>(dtype);
  return h;
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + path.string());
  return out;
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open for reading: " + path.string());
  return in;
}

void write_header(std::ostream& out, const GridSpec& spec, RgrdType dtype) {
  out.write(kMagic, 4);
  put_u32(out, static_cast<std::uint32_t>(spec.rows));
  put_u32(out, static_cast<std::uint32_t>(spec.cols));
  put_u32(out, static_cast<std::uint32_t>(dtype));
}

} // namespace

void write_rgrd(const std::filesystem::path& path, const PresenceGrid& grid) {
  auto out = open_out(path);
  write_header(out, grid.spec, RgrdType::u8);
  out.write(reinterpret_cast<const char*>(grid.values.data()),
            static_cast<std::streamsize>(grid.values.size()));
  if (!out) throw IoError("write failed: " + path.string());
}

void write_rgrd(const std::filesystem::path& path, const GridSpec& spec,
                std::span<const float> values) {
  if (values.size() != static_cast<std::size_t>(spec.cell_count()))
    throw InputError("RGRD payload size does not match grid shape");
  auto out = open_out(path);
  write_header(out, spec, RgrdType::f32);
  write_f32_payload(out, values);
  if (!out) throw IoError("write failed: " + path.string());
}

void write_rgrd_planes(const std::filesystem::path& path, const GridSpec& spec,
                       std::uint32_t planes, std::span<const float> values) {
  if (values.size() != static_cast<std::size_t>(spec.cell_count()) * planes)
    throw InputError("RGRD plane payload size does not match shape");
  auto out = open_out(path);
  write_header(out, spec, RgrdType::planes);
  put_u32(out, planes);
  write_f32_payload(out, values);
  if (!out) throw IoError("write failed: " + path.string());
}

RgrdType peek_rgrd(const std::filesystem::path& path) {
  auto in = open_in(path);
  return read_header(in, path.string()).dtype;
}

PresenceGrid read_rgrd_presence(const std::filesystem::path& path) {
  auto in = open_in(path);
  Header h = read_header(in, path.string());
  if (h.dtype != RgrdType::u8)
    throw IoError("expected u8 RGRD grid: " + path.string());
  PresenceGrid grid;
  grid.spec = h.spec;
  grid.values.resize(static_cast<std::size_t>(h.spec.cell_count()));
  if (!in.read(reinterpret_cast<char*>(grid.values.data()),
               static_cast<std::streamsize>(grid.values.size())))
    throw IoError("truncated RGRD payload: " + path.string());
  for (std::uint8_t v : grid.values)
    if (v > 1) throw IoError("presence grid has non-binary value: " + path.string());
  return grid;
}

FloatGrid read_rgrd_f32(const std::filesystem::path& path) {
  auto in = open_in(path);
  Header h = read_header(in, path.string());
  if (h.dtype != RgrdType::f32)
    throw IoError("expected f32 RGRD grid: " + path.string());
  FloatGrid grid;
  grid.spec = h.spec;
  grid.values.resize(static_cast<std::size_t>(h.spec.cell_count()));
  if (!in.read(reinterpret_cast<char*>(grid.values.data()),
               static_cast<std::streamsize>(grid.values.size() * 4)))
    throw IoError("truncated RGRD payload: " + path.string());
  return grid;
}

PlaneStack read_rgrd_planes(const std::filesystem::path& path) {
  auto in = open_in(path);
  Header h = read_header(in, path.string());
  if (h.dtype != RgrdType::planes)
    throw IoError("expected multi-plane RGRD: " + path.string());
  PlaneStack stack;
  stack.spec = h.spec;
  stack.planes = get_u32(in, path.string());
  stack.values.resize(static_cast<std::size_t>(h.spec.cell_count()) *
                      stack.planes);
  if (!in.read(reinterpret_cast<char*>(stack.values.data()),
               static_cast<std::streamsize>(stack.values.size() * 4)))
    throw IoError("truncated RGRD payload: " + path.string());
  return stack;
}

void write_grid_csv(const std::filesystem::path& path, const GridSpec& spec,
                    std::span<const float> values) {
  auto out = open_out(path);
  out.precision(9);
  for (int r = 0; r < spec.rows; ++r) {
    for (int c = 0; c < spec.cols; ++c) {
      if (c) out << ',';
      out << values[spec.index(r, c)];
    }
    out << '\n';
  }
  if (!out) throw IoError("write failed: " + path.string());
}

void write_grid_csv(const std::filesystem::path& path,
                    const PresenceGrid& grid) {
  auto out = open_out(path);
  for (int r = 0; r < grid.spec.rows; ++r) {
    for (int c = 0; c < grid.spec.cols; ++c) {
      if (c) out << ',';
      out << static_cast<int>(grid.at(r, c));
    }
    out << '\n';
  }
  if (!out) throw IoError("write failed: " + path.string());
}

void write_pgm(const std::filesystem::path& path, const GridSpec& spec,
               std::span<const float> values) {
  if (values.size() != static_cast<std::size_t>(spec.cell_count()))
    throw InputError("PGM payload size does not match grid shape");
  float lo = values.empty() ? 0.0f : values[0];
  float hi = lo;
  for (float v : values) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  auto out = open_out(path);
  out << "P5\n" << spec.cols << " " << spec.rows << "\n255\n";
  const double range = static_cast<double>(hi) - static_cast<double>(lo);
  std::vector<unsigned char> row(static_cast<std::size_t>(spec.cols));
  for (int r = 0; r < spec.rows; ++r) {
    for (int c = 0; c < spec.cols; ++c) {
      double v = values[spec.index(r, c)];
      double scaled = range > 0.0 ? (v - lo) / range * 255.0 : 0.0;
      row[static_cast<std::size_t>(c)] =
          static_cast<unsigned char>(std::lround(std::clamp(scaled, 0.0, 255.0)));
    }
    out.write(reinterpret_cast<const char*>(row.data()),
              static_cast<std::streamsize>(row.size()));
  }
  if (!out) throw IoError("write failed: " + path.string());
}

} // namespace rangekit
