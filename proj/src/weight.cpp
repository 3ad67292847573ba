#include "morreykit/weight.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "morreykit/errors.hpp"

namespace morreykit {
namespace {

void require_positive_finite(double v, const char* what) {
  if (!std::isfinite(v) || v <= 0.0) {
    std::ostringstream os;
    os << what << " must be positive and finite, got " << v;
    throw DomainError(os.str());
  }
}

double power_at(double beta, Index k) {
  if (k == 0) return 1.0;
  return std::pow(static_cast<double>(k < 0 ? -k : k), beta);
}

// sum_{k=a}^{b} k^beta for 1 <= a <= b.
double power_sum(double beta, Index a, Index b) {
  constexpr Index kDirect = 1 << 16;
  constexpr Index kTailStart = 1 << 10;
  if (b - a < kDirect) {
    double s = 0.0;
    for (Index k = a; k <= b; ++k) s += power_at(beta, k);
    return s;
  }
  double s = 0.0;
  Index start = a;
  for (; start < kTailStart; ++start) s += power_at(beta, start);

  // Euler-Maclaurin on [A, B] with three Bernoulli corrections; A >= 1024
  // keeps the remainder far below double precision for moderate |beta|.
  const double A = static_cast<double>(start);
  const double B = static_cast<double>(b);
  double integral;
  if (beta == -1.0) {
    integral = std::log(B / A);
  } else {
    integral = (std::pow(B, beta + 1.0) - std::pow(A, beta + 1.0)) / (beta + 1.0);
  }
  auto deriv = [beta](double x, int order) {
    double c = 1.0;
    for (int i = 0; i < order; ++i) c *= (beta - i);
    return c * std::pow(x, beta - order);
  };
  double em = integral + 0.5 * (std::pow(A, beta) + std::pow(B, beta));
  em += (deriv(B, 1) - deriv(A, 1)) / 12.0;
  em -= (deriv(B, 3) - deriv(A, 3)) / 720.0;
  em += (deriv(B, 5) - deriv(A, 5)) / 30240.0;
  return s + em;
}

}  // namespace

Weight Weight::one() { return Weight{}; }

Weight Weight::power(double beta) {
  if (!std::isfinite(beta)) throw DomainError("power weight exponent must be finite");
  Weight w;
  w.kind_ = Kind::Power;
  w.beta_ = beta;
  return w;
}

Weight Weight::tabulated(Index lo, std::vector<double> values) {
  if (values.empty()) throw DomainError("tabulated weight needs at least one value");
  for (double v : values) require_positive_finite(v, "tabulated weight value");
  Weight w;
  w.kind_ = Kind::Tabulated;
  w.lo_ = lo;
  w.table_ = std::move(values);
  return w;
}

Weight Weight::scaled(double factor) const {
  require_positive_finite(factor, "weight scale");
  Weight w = *this;
  w.scale_ *= factor;
  return w;
}

Weight Weight::pow(double exponent) const {
  if (!std::isfinite(exponent)) throw DomainError("weight exponent must be finite");
  Weight w = *this;
  w.scale_ = std::pow(scale_, exponent);
  switch (kind_) {
    case Kind::ConstantOne:
      break;
    case Kind::Power:
      w.beta_ = beta_ * exponent;
      break;
    case Kind::Tabulated:
      for (double& v : w.table_) v = std::pow(v, exponent);
      break;
  }
  return w;
}

double Weight::operator()(Index k) const {
  switch (kind_) {
    case Kind::ConstantOne:
      return scale_;
    case Kind::Power:
      return scale_ * power_at(beta_, k);
    case Kind::Tabulated: {
      const Index off = k - lo_;
      if (off < 0 || off >= static_cast<Index>(table_.size())) {
        throw DomainError("tabulated weight evaluated at " + std::to_string(k) +
                          " outside its window " + domain()->to_string());
      }
      return scale_ * table_[static_cast<std::size_t>(off)];
    }
  }
  return scale_;
}

std::optional<IndexInterval> Weight::domain() const {
  if (kind_ != Kind::Tabulated) return std::nullopt;
  return IndexInterval{lo_, lo_ + static_cast<Index>(table_.size()) - 1};
}

bool Weight::defined_on(const IndexInterval& j) const {
  const auto d = domain();
  return !d || d->contains(j);
}

void Weight::fill(const IndexInterval& j, std::span<double> out) const {
  if (!defined_on(j)) {
    throw DomainError("weight " + describe() + " is not defined on " + j.to_string());
  }
  std::size_t i = 0;
  for (Index k = j.lo; k <= j.hi; ++k, ++i) out[i] = (*this)(k);
}

std::vector<double> Weight::values_on(const IndexInterval& j) const {
  std::vector<double> out(static_cast<std::size_t>(j.size()));
  fill(j, out);
  return out;
}

std::string Weight::describe() const {
  std::ostringstream os;
  os.precision(17);
  switch (kind_) {
    case Kind::ConstantOne:
      os << "one";
      break;
    case Kind::Power:
      os << "power(" << beta_ << ")";
      break;
    case Kind::Tabulated:
      os << "tabulated" << domain()->to_string();
      break;
  }
  if (scale_ != 1.0) os << "*" << scale_;
  return os.str();
}

double weight_mass(const Weight& w, const IndexInterval& j) {
  switch (w.kind()) {
    case Weight::Kind::ConstantOne:
      return w.scale() * static_cast<double>(j.size());
    case Weight::Kind::Power: {
      double s = 0.0;
      if (j.lo <= -1) s += power_sum(w.beta(), std::max<Index>(1, -j.hi), -j.lo);
      if (j.contains(0)) s += 1.0;
      if (j.hi >= 1) s += power_sum(w.beta(), std::max<Index>(1, j.lo), j.hi);
      return w.scale() * s;
    }
    case Weight::Kind::Tabulated: {
      if (!w.defined_on(j)) {
        throw DomainError("weight " + w.describe() + " is not defined on " + j.to_string());
      }
      double s = 0.0;
      for (Index k = j.lo; k <= j.hi; ++k) s += w(k);
      return s;
    }
  }
  return 0.0;
}

double weight_mass(const Weight& w, std::span<const Index> members) {
  double s = 0.0;
  for (Index k : members) s += w(k);
  return s;
}

}  // namespace morreykit
