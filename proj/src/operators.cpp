#include "sphrhs/operators.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <variant>

namespace sphrhs {

CoefficientOperator::CoefficientOperator(std::string name, std::vector<BandRule> rules,
                                         std::function<void(const HarmonicExpansion&)> domain_check)
    : name_(std::move(name)), rules_(std::move(rules)), domain_check_(std::move(domain_check)) {
  for (const auto& r : rules_) band_width_ = std::max(band_width_, r.dl);
}

void CoefficientOperator::check_domain(const HarmonicExpansion& f) const {
  if (domain_check_) domain_check_(f);
}

HarmonicExpansion CoefficientOperator::apply(const HarmonicExpansion& f) const {
  check_domain(f);
  HarmonicExpansion out(f.lmax() + band_width_);
  for (int l = 0; l <= f.lmax(); ++l) {
    for (int m = -l; m <= l; ++m) {
      const complex c = f(l, m);
      if (c == complex{}) continue;
      for (const auto& rule : rules_) {
        const int lt = l + rule.dl;
        const int mt = m + rule.dm;
        if (lt < 0 || std::abs(mt) > lt) continue;
        const complex a = rule.amplitude(l, m);
        if (a == complex{}) continue;
        const double ratio = std::sqrt((2.0 * l + 1.0) / (2.0 * lt + 1.0));
        out.at(lt, mt) += c * a * ratio;
      }
    }
  }
  return out;
}

struct OperatorExpression::Node {
  struct Leaf {
    CoefficientOperator op;
  };
  struct Identity {};
  struct Linear {
    std::vector<std::pair<complex, std::shared_ptr<const Node>>> terms;
  };
  struct Compose {
    std::shared_ptr<const Node> outer, inner;
  };
  struct Commutator {
    std::shared_ptr<const Node> a, b;
  };
  std::variant<Leaf, Identity, Linear, Compose, Commutator> value;
};

namespace {

using NodePtr = std::shared_ptr<const OperatorExpression::Node>;

HarmonicExpansion evaluate(const OperatorExpression::Node& node, const HarmonicExpansion& f);

HarmonicExpansion evaluate(const NodePtr& node, const HarmonicExpansion& f) {
  return evaluate(*node, f);
}

HarmonicExpansion evaluate(const OperatorExpression::Node& node, const HarmonicExpansion& f) {
  using N = OperatorExpression::Node;
  return std::visit(
      [&](const auto& v) -> HarmonicExpansion {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, N::Leaf>) {
          return v.op.apply(f);
        } else if constexpr (std::is_same_v<T, N::Identity>) {
          return f;
        } else if constexpr (std::is_same_v<T, N::Linear>) {
          HarmonicExpansion acc(f.lmax());
          for (const auto& [alpha, term] : v.terms) acc += alpha * evaluate(term, f);
          return acc;
        } else if constexpr (std::is_same_v<T, N::Compose>) {
          return evaluate(v.outer, evaluate(v.inner, f));
        } else {
          return evaluate(v.a, evaluate(v.b, f)) - evaluate(v.b, evaluate(v.a, f));
        }
      },
      node.value);
}

std::string describe(const OperatorExpression::Node& node) {
  using N = OperatorExpression::Node;
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, N::Leaf>) {
          return v.op.name();
        } else if constexpr (std::is_same_v<T, N::Identity>) {
          return "1";
        } else if constexpr (std::is_same_v<T, N::Linear>) {
          std::ostringstream os;
          os << "(";
          bool first = true;
          for (const auto& [alpha, term] : v.terms) {
            if (!first) os << " + ";
            first = false;
            if (alpha != complex{1.0, 0.0}) {
              if (alpha.imag() == 0.0) {
                os << alpha.real() << "*";
              } else {
                os << alpha << "*";
              }
            }
            os << describe(*term);
          }
          os << ")";
          return os.str();
        } else if constexpr (std::is_same_v<T, N::Compose>) {
          return describe(*v.outer) + "*" + describe(*v.inner);
        } else {
          return "[" + describe(*v.a) + "," + describe(*v.b) + "]";
        }
      },
      node.value);
}

}  // namespace

OperatorExpression::OperatorExpression(CoefficientOperator leaf)
    : node_(std::make_shared<const Node>(Node{Node::Leaf{std::move(leaf)}})) {}

OperatorExpression OperatorExpression::identity() {
  return OperatorExpression(std::make_shared<const Node>(Node{Node::Identity{}}));
}

HarmonicExpansion OperatorExpression::apply(const HarmonicExpansion& f) const {
  return evaluate(*node_, f);
}

std::string OperatorExpression::describe() const { return sphrhs::describe(*node_); }

OperatorExpression operator+(const OperatorExpression& a, const OperatorExpression& b) {
  using N = OperatorExpression::Node;
  N::Linear lin{{{1.0, a.node_}, {1.0, b.node_}}};
  return OperatorExpression(std::make_shared<const N>(N{std::move(lin)}));
}

OperatorExpression operator-(const OperatorExpression& a, const OperatorExpression& b) {
  using N = OperatorExpression::Node;
  N::Linear lin{{{1.0, a.node_}, {-1.0, b.node_}}};
  return OperatorExpression(std::make_shared<const N>(N{std::move(lin)}));
}

OperatorExpression operator*(const OperatorExpression& a, const OperatorExpression& b) {
  using N = OperatorExpression::Node;
  return OperatorExpression(std::make_shared<const N>(N{N::Compose{a.node_, b.node_}}));
}

OperatorExpression operator*(complex alpha, const OperatorExpression& a) {
  using N = OperatorExpression::Node;
  N::Linear lin{{{alpha, a.node_}}};
  return OperatorExpression(std::make_shared<const N>(N{std::move(lin)}));
}

OperatorExpression commutator(const OperatorExpression& a, const OperatorExpression& b) {
  using N = OperatorExpression::Node;
  return OperatorExpression(std::make_shared<const N>(N{N::Commutator{a.node_, b.node_}}));
}

}  // namespace sphrhs
