#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "sphrhs/harmonic_core.hpp"
#include "sphrhs/report.hpp"
#include "sphrhs/sphere_transform.hpp"

namespace sphrhs::io {

/// File could not be opened, read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Document is syntactically or structurally malformed.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Document parses but contradicts itself or the requested operation
/// (e.g. sample positions that are not the nodes of the declared grid).
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Coefficient document: {"lmax": N, "basis": "sqrt(l+1/2)Y",
//                        "coefficients": [{"l":..,"m":..,"re":..,"im":..}, ...]}
// Every (l, m) with |m| <= l <= lmax appears exactly once, written in (l, m) ascending order.
std::string format_coefficients(const HarmonicExpansion& f);
HarmonicExpansion parse_coefficients(const std::string& text);
void write_coefficients(const std::filesystem::path& path, const HarmonicExpansion& f);
HarmonicExpansion read_coefficients(const std::filesystem::path& path);

// Sampled field: '#'-prefixed metadata lines (lmax=, n_theta=, n_phi=) followed by
// rows "theta,phi,re,im" in grid order.
std::string format_field(const SampledField& field);
SampledField parse_field(const std::string& text);
void write_field(const std::filesystem::path& path, const SampledField& field);
SampledField read_field(const std::filesystem::path& path);

/// JSON array of report records.
std::string format_reports(const std::vector<BoundReport>& reports);

std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace sphrhs::io
