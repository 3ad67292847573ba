#pragma once

// Brute-force reference implementations. They share nothing with the library
// beyond the data types: every sum is recomputed point by point.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "morreykit/intervals.hpp"
#include "morreykit/lattice.hpp"
#include "morreykit/weight.hpp"

namespace oracle {

using morreykit::Index;
using morreykit::LatticeSequence;
using morreykit::Weight;

inline double weight_at(const Weight& w, Index k) { return w(k); }

inline double mass(const Weight& w, Index lo, Index hi) {
  double s = 0.0;
  for (Index k = lo; k <= hi; ++k) s += w(k);
  return s;
}

struct Sup {
  double value = 0.0;
  Index m = 0;
  Index n = 0;
};

// sup over |m| <= m_range, N <= n_max of v(S)^{1/q-1/p} (sum_S |x|^p w)^{1/p};
// q = inf gives exponent -1/p.
inline Sup morrey(const LatticeSequence& x, double p, double q, const Weight& w, const Weight& v,
                  Index m_lo, Index m_hi, Index n_max) {
  const double e = std::isinf(q) ? -1.0 / p : 1.0 / q - 1.0 / p;
  Sup best{-1.0, 0, 0};
  for (Index m = m_lo; m <= m_hi; ++m) {
    for (Index n = 0; n <= n_max; ++n) {
      double s = 0.0;
      for (Index k = m - n; k <= m + n; ++k) s += std::pow(std::abs(x(k)), p) * w(k);
      const double val = std::pow(mass(v, m - n, m + n), e) * std::pow(s, 1.0 / p);
      if (val > best.value * (1.0 + 1e-13)) best = {val, m, n};
    }
  }
  return best;
}

// Weak norm: for each S, lambda ranges over left limits at every distinct |x|.
inline double weak_morrey(const LatticeSequence& x, double p, double q, const Weight& w,
                          Index m_lo, Index m_hi, Index n_max) {
  double best = 0.0;
  for (Index m = m_lo; m <= m_hi; ++m) {
    for (Index n = 0; n <= n_max; ++n) {
      const double pre = std::pow(mass(w, m - n, m + n), 1.0 / q - 1.0 / p);
      for (const auto& e : x.entries()) {
        const double a = std::abs(e.value);
        double level = 0.0;
        for (Index k = m - n; k <= m + n; ++k) {
          if (std::abs(x(k)) >= a) level += w(k);
        }
        if (level > 0.0) best = std::max(best, pre * a * std::pow(level, 1.0 / p));
      }
    }
  }
  return best;
}

// (M_w x)(m) via the triple loop, radii up to n_max.
inline double maximal_at(const LatticeSequence& x, const Weight& w, Index m, Index n_max) {
  double best = 0.0;
  for (Index n = 0; n <= n_max; ++n) {
    double num = 0.0;
    double den = 0.0;
    for (Index k = m - n; k <= m + n; ++k) {
      num += std::abs(x(k)) * w(k);
      den += w(k);
    }
    best = std::max(best, num / den);
  }
  return best;
}

inline double a1(const Weight& w, Index lo, Index hi) {
  double best = 0.0;
  for (Index a = lo; a <= hi; ++a) {
    for (Index b = a; b <= hi; ++b) {
      double s = 0.0;
      double mn = INFINITY;
      for (Index k = a; k <= b; ++k) {
        s += w(k);
        mn = std::min(mn, w(k));
      }
      best = std::max(best, s / static_cast<double>(b - a + 1) / mn);
    }
  }
  return best;
}

inline double ap(const Weight& w, double p, Index lo, Index hi) {
  double best = 0.0;
  for (Index a = lo; a <= hi; ++a) {
    for (Index b = a; b <= hi; ++b) {
      double s = 0.0;
      double d = 0.0;
      for (Index k = a; k <= b; ++k) {
        s += w(k);
        d += std::pow(w(k), -1.0 / (p - 1.0));
      }
      const double n = static_cast<double>(b - a + 1);
      best = std::max(best, (s / n) * std::pow(d / n, p - 1.0));
    }
  }
  return best;
}

inline double rh(const Weight& w, double r, Index lo, Index hi) {
  double best = 0.0;
  for (Index a = lo; a <= hi; ++a) {
    for (Index b = a; b <= hi; ++b) {
      double s = 0.0;
      double sr = 0.0;
      for (Index k = a; k <= b; ++k) {
        s += w(k);
        sr += std::pow(w(k), r);
      }
      const double n = static_cast<double>(b - a + 1);
      best = std::max(best, std::pow(n, 1.0 - 1.0 / r) * std::pow(sr, 1.0 / r) / s);
    }
  }
  return best;
}

struct Dyadic {
  int level;
  Index pos;
  Index lo() const { return (pos - 1) * (Index{1} << level) + 1; }
  Index hi() const { return pos * (Index{1} << level); }
};

inline double dyadic_avg(const LatticeSequence& x, const Weight& w, const Dyadic& d) {
  double num = 0.0;
  double den = 0.0;
  for (Index k = d.lo(); k <= d.hi(); ++k) {
    num += std::abs(x(k)) * w(k);
    den += w(k);
  }
  return num / den;
}

// Maximal dyadic intervals with average > t among levels <= top: an interval
// qualifies when its average exceeds t and no ancestor up to `top` does.
inline std::vector<Dyadic> cz_select(const LatticeSequence& x, const Weight& w, double t, int top) {
  std::vector<Dyadic> out;
  const Index lo = x.support_lo();
  const Index hi = x.support_hi();
  for (int level = 0; level <= top; ++level) {
    const Index size = Index{1} << level;
    const Index jlo = (lo - 1 >= 0 ? (lo - 1) / size : -((-(lo - 1) + size - 1) / size)) + 1;
    const Index jhi = (hi - 1 >= 0 ? (hi - 1) / size : -((-(hi - 1) + size - 1) / size)) + 1;
    for (Index j = jlo; j <= jhi; ++j) {
      Dyadic d{level, j};
      if (!(dyadic_avg(x, w, d) > t)) continue;
      bool maximal = true;
      Dyadic a = d;
      while (a.level < top) {
        const Index pj = (a.pos + 1 >= 0 ? (a.pos + 1) / 2 : -((-(a.pos + 1) + 1) / 2));
        a = {a.level + 1, pj};
        if (dyadic_avg(x, w, a) > t) {
          maximal = false;
          break;
        }
      }
      if (maximal) out.push_back(d);
    }
  }
  std::sort(out.begin(), out.end(), [](const Dyadic& a, const Dyadic& b) { return a.lo() < b.lo(); });
  return out;
}

// Integer-valued random sequence: exact sums in double arithmetic.
inline LatticeSequence random_integer_sequence(std::mt19937_64& rng, Index lo_min, Index lo_max,
                                               Index max_len, int max_abs) {
  std::uniform_int_distribution<Index> start(lo_min, lo_max);
  std::uniform_int_distribution<Index> len(1, max_len);
  std::uniform_int_distribution<int> val(-max_abs, max_abs);
  std::vector<double> dense(static_cast<std::size_t>(len(rng)));
  for (double& v : dense) v = val(rng);
  if (dense.front() == 0.0) dense.front() = 1.0;
  return LatticeSequence::from_dense(start(rng), dense);
}

inline LatticeSequence random_real_sequence(std::mt19937_64& rng, Index lo_min, Index lo_max,
                                            Index max_len, double max_abs) {
  std::uniform_int_distribution<Index> start(lo_min, lo_max);
  std::uniform_int_distribution<Index> len(1, max_len);
  std::uniform_real_distribution<double> val(-max_abs, max_abs);
  std::bernoulli_distribution sparse(0.3);
  std::vector<double> dense(static_cast<std::size_t>(len(rng)));
  for (double& v : dense) v = sparse(rng) ? 0.0 : val(rng);
  dense.front() = dense.front() == 0.0 ? 1.0 : dense.front();
  return LatticeSequence::from_dense(start(rng), dense);
}

}  // namespace oracle
