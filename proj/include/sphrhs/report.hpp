#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sphrhs {

/// Outcome of one checked inequality or identity.
struct BoundReport {
  std::string check;
  std::string anchor;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
  double tol = 0.0;
  bool pass = false;
  std::uint64_t seed = 0;
  int lmax = 0;
  int n = 0;
  /// Set for scan records that carry data but no verdict.
  bool informational = false;
  std::vector<std::vector<double>> table;
  std::vector<std::string> columns;
};

/// Fills margin = rhs - lhs and pass = margin >= -tol.
BoundReport make_report(std::string check, std::string anchor, double lhs, double rhs,
                        double tol);

}  // namespace sphrhs
