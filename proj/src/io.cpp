#include "sphrhs/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

namespace sphrhs::io {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

int integer_field(const nlohmann::json& record, const char* key, const std::string& where) {
  if (!record.contains(key) || !record[key].is_number_integer()) {
    throw FormatError(where + ": field '" + key + "' must be an integer");
  }
  return record[key].get<int>();
}

double real_field(const nlohmann::json& record, const char* key, const std::string& where) {
  if (!record.contains(key) || !record[key].is_number()) {
    throw FormatError(where + ": field '" + key + "' must be a number");
  }
  const double v = record[key].get<double>();
  if (!std::isfinite(v)) throw FormatError(where + ": field '" + key + "' must be finite");
  return v;
}

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_double(const std::string& token, std::size_t line_no) {
  const std::string t = trim(token);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc{} || ptr != t.data() + t.size() || !std::isfinite(v)) {
    throw FormatError("line " + std::to_string(line_no) + ": malformed number '" + t + "'");
  }
  return v;
}

}  // namespace

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  std::ostringstream os;
  os << in.rdbuf();
  if (in.bad()) throw IoError("error while reading '" + path.string() + "'");
  return os.str();
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << text;
  if (!out) throw IoError("error while writing '" + path.string() + "'");
}

std::string format_coefficients(const HarmonicExpansion& f) {
  // one record per line so that files diff cleanly
  std::string text = "{\"lmax\": " + std::to_string(f.lmax()) + ", \"basis\": " +
                     ordered_json(HarmonicExpansion::kBasisTag).dump() + ", \"coefficients\": [\n";
  for (int l = 0; l <= f.lmax(); ++l) {
    for (int m = -l; m <= l; ++m) {
      ordered_json r;
      r["l"] = l;
      r["m"] = m;
      r["re"] = f(l, m).real();
      r["im"] = f(l, m).imag();
      text += "  " + r.dump();
      text += (l == f.lmax() && m == l) ? "\n" : ",\n";
    }
  }
  return text + "]}\n";
}

HarmonicExpansion parse_coefficients(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(std::string("coefficient document is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw FormatError("coefficient document must be a JSON object");
  const int lmax = integer_field(doc, "lmax", "coefficient document");
  if (lmax < 0) throw FormatError("coefficient document: lmax must be non-negative");
  if (!doc.contains("basis") || !doc["basis"].is_string() ||
      doc["basis"].get<std::string>() != HarmonicExpansion::kBasisTag) {
    throw FormatError(std::string("coefficient document: basis must be \"") +
                      HarmonicExpansion::kBasisTag + "\"");
  }
  if (!doc.contains("coefficients") || !doc["coefficients"].is_array()) {
    throw FormatError("coefficient document: 'coefficients' must be an array");
  }

  HarmonicExpansion f(lmax);
  std::set<std::pair<int, int>> seen;
  std::size_t k = 0;
  for (const auto& record : doc["coefficients"]) {
    const std::string where = "coefficient record " + std::to_string(k++);
    if (!record.is_object()) throw FormatError(where + " must be an object");
    const int l = integer_field(record, "l", where);
    const int m = integer_field(record, "m", where);
    if (l < 0 || l > lmax || std::abs(m) > l) {
      throw FormatError(where + ": (" + std::to_string(l) + "," + std::to_string(m) +
                        ") is outside the triangle of degree " + std::to_string(lmax));
    }
    if (!seen.insert({l, m}).second) {
      throw FormatError(where + ": duplicate entry for (" + std::to_string(l) + "," +
                        std::to_string(m) + ")");
    }
    f.at(l, m) = complex{real_field(record, "re", where), real_field(record, "im", where)};
  }
  if (seen.size() != triangular_size(lmax)) {
    for (int l = 0; l <= lmax; ++l) {
      for (int m = -l; m <= l; ++m) {
        if (!seen.count({l, m})) {
          throw FormatError("coefficient document: missing entry for (" + std::to_string(l) +
                            "," + std::to_string(m) + ")");
        }
      }
    }
  }
  return f;
}

void write_coefficients(const std::filesystem::path& path, const HarmonicExpansion& f) {
  write_text(path, format_coefficients(f));
}

HarmonicExpansion read_coefficients(const std::filesystem::path& path) {
  return parse_coefficients(read_text(path));
}

std::string format_field(const SampledField& field) {
  std::ostringstream os;
  os << "# sampled field on a Gauss-Legendre x equispaced-phi grid\n";
  os << "# lmax=" << field.grid.lmax << "\n";
  os << "# n_theta=" << field.grid.n_theta() << "\n";
  os << "# n_phi=" << field.grid.n_phi() << "\n";
  os << "# columns: theta,phi,re,im\n";
  for (std::size_t i = 0; i < field.grid.n_theta(); ++i) {
    for (std::size_t j = 0; j < field.grid.n_phi(); ++j) {
      const complex v = field(i, j);
      os << number(field.grid.theta[i]) << ',' << number(field.grid.phi[j]) << ','
         << number(v.real()) << ',' << number(v.imag()) << '\n';
    }
  }
  return os.str();
}

SampledField parse_field(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  std::map<std::string, long> meta;
  struct Row {
    double theta, phi;
    complex value;
    std::size_t line_no;
  };
  std::vector<Row> rows;

  while (std::getline(in, line)) {
    ++line_no;
    const std::string t = trim(line);
    if (t.empty()) continue;
    if (t[0] == '#') {
      const auto eq = t.find('=');
      if (eq != std::string::npos) {
        const std::string key = trim(t.substr(1, eq - 1));
        const std::string value = trim(t.substr(eq + 1));
        long parsed = 0;
        const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), parsed);
        if (ec != std::errc{} || ptr != value.data() + value.size()) {
          throw FormatError("line " + std::to_string(line_no) + ": malformed metadata value '" +
                            value + "'");
        }
        meta[key] = parsed;
      }
      continue;
    }
    std::vector<std::string> fields;
    std::stringstream ss(t);
    std::string token;
    while (std::getline(ss, token, ',')) fields.push_back(token);
    if (fields.size() != 4) {
      throw FormatError("line " + std::to_string(line_no) + ": expected 4 comma-separated values, got " +
                        std::to_string(fields.size()));
    }
    rows.push_back({parse_double(fields[0], line_no), parse_double(fields[1], line_no),
                    complex{parse_double(fields[2], line_no), parse_double(fields[3], line_no)},
                    line_no});
  }

  if (!meta.count("lmax")) throw FormatError("field document lacks a '# lmax=' header");
  const long lmax = meta["lmax"];
  if (lmax < 0 || lmax > 100000) throw FormatError("field document: lmax out of range");
  SampledField field{make_grid(static_cast<int>(lmax)), {}};
  const SphereGrid& grid = field.grid;
  if (meta.count("n_theta") && meta["n_theta"] != static_cast<long>(grid.n_theta())) {
    throw ConsistencyError("n_theta header disagrees with the grid of degree " +
                           std::to_string(lmax));
  }
  if (meta.count("n_phi") && meta["n_phi"] != static_cast<long>(grid.n_phi())) {
    throw ConsistencyError("n_phi header disagrees with the grid of degree " + std::to_string(lmax));
  }
  if (rows.size() != grid.n_theta() * grid.n_phi()) {
    throw ConsistencyError("field has " + std::to_string(rows.size()) + " rows, grid needs " +
                           std::to_string(grid.n_theta() * grid.n_phi()));
  }
  field.samples.resize(rows.size());
  constexpr double kPositionTol = 1e-12;
  for (std::size_t i = 0; i < grid.n_theta(); ++i) {
    for (std::size_t j = 0; j < grid.n_phi(); ++j) {
      const Row& r = rows[i * grid.n_phi() + j];
      if (std::abs(r.theta - grid.theta[i]) > kPositionTol ||
          std::abs(r.phi - grid.phi[j]) > kPositionTol) {
        throw ConsistencyError("line " + std::to_string(r.line_no) +
                               ": sample position is not the expected grid node");
      }
      field(i, j) = r.value;
    }
  }
  return field;
}

void write_field(const std::filesystem::path& path, const SampledField& field) {
  write_text(path, format_field(field));
}

SampledField read_field(const std::filesystem::path& path) { return parse_field(read_text(path)); }

std::string format_reports(const std::vector<BoundReport>& reports) {
  ordered_json doc = ordered_json::array();
  for (const auto& r : reports) {
    ordered_json j;
    j["check"] = r.check;
    j["anchor"] = r.anchor;
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    j["margin"] = r.margin;
    j["tol"] = r.tol;
    j["pass"] = r.pass;
    j["seed"] = r.seed;
    j["lmax"] = r.lmax;
    j["n"] = r.n;
    if (r.informational) j["informational"] = true;
    if (!r.columns.empty()) {
      j["columns"] = r.columns;
      j["table"] = r.table;
    }
    doc.push_back(std::move(j));
  }
  return doc.dump(1) + "\n";
}

}  // namespace sphrhs::io
