#pragma once

#include <filesystem>
#include <string>

#include "enls/grid.hpp"

namespace enls {

/// Flat little-endian binary layout shared by fields and spectra:
///
///   offset  size  content
///   0       4     magic "ENLS"
///   4       4     uint32 format version (1)
///   8       1     uint8 kind: 0 = physical field, 1 = spectrum
///   9       1     uint8 convention tag (1 = coefficients c_k = (1/M) sum_j u_j e^{-i xi_k x_j})
///   10      6     reserved, zero
///   16      8     float64 box length L
///   24      4     uint32 number of modes M
///   28      4     reserved, zero
///   32      8     float64 time t
///   40      8*M   M pairs of float32 (re, im), spectra in FFT storage order
inline constexpr std::size_t kBinaryHeaderBytes = 40;
inline constexpr unsigned char kConventionTag = 1;

void write_binary(const std::filesystem::path& path, const FieldSample& f);
void write_binary(const std::filesystem::path& path, const Spectrum& s);

FieldSample read_field_binary(const std::filesystem::path& path);
Spectrum read_spectrum_binary(const std::filesystem::path& path);

/// CSV with header "k,re,im", modes in increasing k.
std::string spectrum_csv(const Spectrum& s);

/// Writes to a sibling temporary file and renames it into place.
void write_file_atomic(const std::filesystem::path& path, const std::string& contents);

/// Shortest round-trip text for a double, used by every CSV/JSON writer so that
/// deterministic reruns produce byte-identical files.
std::string format_double(double x);

}  // namespace enls
