#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "morreykit/intervals.hpp"

namespace morreykit {

/// A strictly positive function on Z.
///
/// Three shapes are supported: the constant weight, the power weight
/// |k|^beta (with value 1 at the origin) and a table of values over a window.
/// Every shape carries a positive scale factor so that scaled copies and
/// pointwise powers stay in the same family:
///   (c * w)^e = c^e * w^e,  Power(beta)^e = Power(beta * e).
class Weight {
 public:
  enum class Kind { ConstantOne, Power, Tabulated };

  static Weight one();
  static Weight power(double beta);
  static Weight tabulated(Index lo, std::vector<double> values);

  Weight scaled(double factor) const;
  Weight pow(double exponent) const;

  /// Throws DomainError for a tabulated weight evaluated off its window.
  double operator()(Index k) const;

  Kind kind() const { return kind_; }
  double beta() const { return beta_; }
  double scale() const { return scale_; }
  const std::vector<double>& table() const { return table_; }

  /// Window where the weight is defined; nullopt means all of Z.
  std::optional<IndexInterval> domain() const;
  bool defined_on(const IndexInterval& j) const;

  /// Dense evaluation of w(k) for k in j, written to out (size j.size()).
  void fill(const IndexInterval& j, std::span<double> out) const;
  std::vector<double> values_on(const IndexInterval& j) const;

  std::string describe() const;

 private:
  Weight() = default;

  Kind kind_ = Kind::ConstantOne;
  double beta_ = 0.0;
  double scale_ = 1.0;
  Index lo_ = 0;
  std::vector<double> table_;
};

/// w(J) = sum of w(k) over k in J.
///
/// Power weights on long intervals use an Euler-Maclaurin tail so that
/// dyadic intervals at high levels stay cheap; everything else is summed
/// directly in increasing index order.
double weight_mass(const Weight& w, const IndexInterval& j);
double weight_mass(const Weight& w, std::span<const Index> members);

}  // namespace morreykit
