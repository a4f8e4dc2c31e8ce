#include "enls/field_io.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <charconv>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <iterator>
#include <sstream>
#include <system_error>

#include "enls/errors.hpp"

namespace enls {

namespace {

static_assert(std::endian::native == std::endian::little || std::endian::native == std::endian::big);

template <typename T>
void put(std::string& out, T value) {
  auto bytes = std::bit_cast<std::array<unsigned char, sizeof(T)>>(value);
  if constexpr (std::endian::native == std::endian::big) std::reverse(bytes.begin(), bytes.end());
  out.append(reinterpret_cast<const char*>(bytes.data()), bytes.size());
}

template <typename T>
T get(const std::string& in, std::size_t offset) {
  std::array<unsigned char, sizeof(T)> bytes{};
  std::memcpy(bytes.data(), in.data() + offset, sizeof(T));
  if constexpr (std::endian::native == std::endian::big) std::reverse(bytes.begin(), bytes.end());
  return std::bit_cast<T>(bytes);
}

std::string encode(const GridSpec& grid, double time, const ComplexVector& data, unsigned char kind) {
  std::string out;
  out.reserve(kBinaryHeaderBytes + 8 * data.size());
  out.append("ENLS", 4);
  put<std::uint32_t>(out, 1);
  put<std::uint8_t>(out, kind);
  put<std::uint8_t>(out, kConventionTag);
  out.append(6, '\0');
  put<double>(out, grid.box_length());
  put<std::uint32_t>(out, static_cast<std::uint32_t>(grid.num_modes()));
  out.append(4, '\0');
  put<double>(out, time);
  for (const auto& z : data) {
    put<float>(out, static_cast<float>(z.real()));
    put<float>(out, static_cast<float>(z.imag()));
  }
  return out;
}

struct Decoded {
  GridSpec grid;
  double time;
  ComplexVector data;
};

Decoded decode(const std::filesystem::path& path, unsigned char expected_kind) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MissingDataError("cannot open " + path.string());
  const std::string buf((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (buf.size() < kBinaryHeaderBytes || buf.compare(0, 4, "ENLS") != 0) {
    throw ConfigError(path.string() + ": not an ENLS binary file");
  }
  if (get<std::uint32_t>(buf, 4) != 1) throw ConfigError(path.string() + ": unsupported version");
  if (get<std::uint8_t>(buf, 8) != expected_kind) {
    throw ConfigError(path.string() + ": wrong record kind");
  }
  if (get<std::uint8_t>(buf, 9) != kConventionTag) {
    throw ConfigError(path.string() + ": unknown Fourier convention tag");
  }
  const GridSpec grid(get<double>(buf, 16), static_cast<int>(get<std::uint32_t>(buf, 24)));
  const double time = get<double>(buf, 32);
  const std::size_t M = static_cast<std::size_t>(grid.num_modes());
  if (buf.size() != kBinaryHeaderBytes + 8 * M) throw ConfigError(path.string() + ": truncated");
  ComplexVector data(M);
  for (std::size_t i = 0; i < M; ++i) {
    const std::size_t off = kBinaryHeaderBytes + 8 * i;
    data[i] = Complex(get<float>(buf, off), get<float>(buf, off + 4));
  }
  return {grid, time, std::move(data)};
}

}  // namespace

void write_binary(const std::filesystem::path& path, const FieldSample& f) {
  write_file_atomic(path, encode(f.grid, f.time, f.values, 0));
}

void write_binary(const std::filesystem::path& path, const Spectrum& s) {
  write_file_atomic(path, encode(s.grid, s.time, s.coeffs, 1));
}

FieldSample read_field_binary(const std::filesystem::path& path) {
  auto d = decode(path, 0);
  return FieldSample(d.grid, std::move(d.data), d.time);
}

Spectrum read_spectrum_binary(const std::filesystem::path& path) {
  auto d = decode(path, 1);
  return Spectrum(d.grid, std::move(d.data), d.time);
}

std::string format_double(double x) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  if (ec != std::errc{}) return "nan";
  return std::string(buf.data(), ptr);
}

std::string spectrum_csv(const Spectrum& s) {
  std::ostringstream out;
  out << "k,re,im\n";
  for (int k = s.grid.min_mode(); k <= s.grid.max_mode(); ++k) {
    const Complex c = s.at(k);
    out << k << ',' << format_double(c.real()) << ',' << format_double(c.imag()) << '\n';
  }
  return out.str();
}

void write_file_atomic(const std::filesystem::path& path, const std::string& contents) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) throw std::runtime_error("short write to " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace enls
