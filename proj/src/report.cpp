#include "sphrhs/report.hpp"

#include <utility>

namespace sphrhs {

BoundReport make_report(std::string check, std::string anchor, double lhs, double rhs,
                        double tol) {
  BoundReport r;
  r.check = std::move(check);
  r.anchor = std::move(anchor);
  r.lhs = lhs;
  r.rhs = rhs;
  r.margin = rhs - lhs;
  r.tol = tol;
  r.pass = r.margin >= -tol;
  return r;
}

}  // namespace sphrhs
