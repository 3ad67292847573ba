#include <doctest.h>

#include <cmath>
#include <random>

#include "morreykit/errors.hpp"
#include "morreykit/norms.hpp"
#include "morreykit/report.hpp"
#include "oracles.hpp"

using namespace morreykit;

namespace {

double eval_at(const LatticeSequence& x, const MorreyParams& mp, const SymmetricInterval& s) {
  double sum = 0.0;
  for (Index k = s.lo(); k <= s.hi(); ++k) sum += std::pow(std::abs(x(k)), mp.p) * mp.measure(k);
  const double e = std::isinf(mp.q) ? -1.0 / mp.p : 1.0 / mp.q - 1.0 / mp.p;
  return std::pow(oracle::mass(mp.normalizer, s.lo(), s.hi()), e) * std::pow(sum, 1.0 / mp.p);
}

const LatticeSequence kTriple = LatticeSequence::indicator({-1, 1});

}  // namespace

TEST_CASE("lp norm examples") {
  CHECK(lp_w_norm(LatticeSequence::delta(0), 3.0, Weight::one()) == 1.0);
  CHECK(lp_w_norm(LatticeSequence({{0, 2.0}, {1, 1.0}}), 2.0, Weight::one()) == std::sqrt(5.0));
  CHECK(lp_w_norm(LatticeSequence::delta(1), 1.0, Weight::power(1.0)) == 1.0);
}

TEST_CASE("Morrey norm golden examples") {
  const auto d = morrey_norm(LatticeSequence::delta(0), {1.5, 4.0, Weight::one(), Weight::one()});
  CHECK(d.value == 1.0);
  CHECK(d.witness == SymmetricInterval{0, 0});

  const auto r = morrey_norm(kTriple, {1.0, 2.0, Weight::one(), Weight::one()});
  CHECK(r.value == doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));
  CHECK(r.witness == SymmetricInterval{0, 1});
  CHECK_FALSE(r.lower_bound);
  const auto o = oracle::morrey(kTriple, 1.0, 2.0, Weight::one(), Weight::one(), -10, 10, 10);
  CHECK(r.value == doctest::Approx(o.value).epsilon(1e-12));

  CHECK(morrey_norm(LatticeSequence(), {1.0, 2.0, Weight::one(), Weight::one()}).value == 0.0);
  CHECK_THROWS_AS(morrey_norm(kTriple, {2.0, 1.0, Weight::one(), Weight::one()}), PreconditionError);
  CHECK_THROWS_AS(morrey_norm(kTriple, {2.0, kInfinity, Weight::one(), Weight::one()}),
                  PreconditionError);
}

TEST_CASE("q = infinity examples") {
  const Weight one = Weight::one();
  const auto d = morrey_pinf_norm(LatticeSequence::delta(0), 2.0, one, one);
  CHECK(d.value == 1.0);
  CHECK(d.witness == SymmetricInterval{0, 0});
  const auto t = morrey_pinf_norm(kTriple, 2.0, one, one);
  CHECK(t.value == 1.0);
  CHECK(t.witness == SymmetricInterval{-1, 0});

  // Constant region: every interval inside the window gives exactly c.
  const LatticeSequence c = LatticeSequence::indicator({-20, 20}, 2.5);
  const Weight w = Weight::power(0.5);
  ScanOptions opts;
  opts.window = IndexInterval{-20, 20};
  CHECK(morrey_pinf_norm(c, 3.0, w, w, opts).value == doctest::Approx(2.5).epsilon(1e-12));
}

TEST_CASE("weak norm examples") {
  const Weight one = Weight::one();
  const auto a = weak_morrey_norm(LatticeSequence::delta(0, 3.0), 1.0, 1.0, one);
  CHECK(a.value == 3.0);
  CHECK(a.level == 3.0);
  const auto b = weak_morrey_norm(kTriple, 1.0, 2.0, one);
  CHECK(b.value == doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));
  CHECK(b.level == 1.0);
}

TEST_CASE("layer cake examples") {
  const LatticeSequence x({{0, 2.0}, {1, 1.0}});
  CHECK(layer_cake_eval(x, 2.0, Weight::one()) == 5.0);
  CHECK(layer_cake_eval(LatticeSequence::delta(4, -1.5), 3.0, Weight::one()) ==
        doctest::Approx(std::pow(1.5, 3.0)).epsilon(1e-15));
}

TEST_CASE("scan agrees with brute force") {
  std::mt19937_64 rng(21);
  std::vector<Weight> weights{Weight::one(), Weight::power(-0.5), Weight::power(1.0),
                              Weight::power(-1.5)};
  for (int i = 0; i < 150; ++i) {
    const auto x = oracle::random_real_sequence(rng, -6, 4, 8, 10.0);
    const Weight& w = weights[static_cast<std::size_t>(i) % weights.size()];
    const Weight& v = weights[static_cast<std::size_t>(i / 4) % weights.size()];
    const double p = 1.0 + (i % 3) * 0.5;
    const double q = p + 1.0 + (i % 2);
    const MorreyParams mp{p, q, w, v};
    const auto r = morrey_norm(x, mp);
    const auto o = oracle::morrey(x, p, q, w, v, -30, 30, 30);
    CHECK(r.value == doctest::Approx(o.value).epsilon(1e-12));
    CHECK(eval_at(x, mp, r.witness) == doctest::Approx(r.value).epsilon(1e-12));

    const auto pinf = morrey_pinf_norm(x, p, w, v);
    const auto opinf = oracle::morrey(x, p, kInfinity, w, v, -30, 30, 30);
    CHECK(pinf.value == doctest::Approx(opinf.value).epsilon(1e-12));

    const auto weak = weak_morrey_norm(x, p, q, w);
    CHECK(weak.value == doctest::Approx(oracle::weak_morrey(x, p, q, w, -30, 30, 30)).epsilon(1e-12));
  }
}

TEST_CASE("p = q reduces to the weighted lp norm") {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 100; ++i) {
    const auto x = oracle::random_real_sequence(rng, -20, 20, 16, 10.0);
    const Weight w = i % 2 ? Weight::one() : Weight::power(0.5);
    const double p = 1.0 + (i % 4) * 0.5;
    CHECK(morrey_norm(x, {p, p, w, w}).value == doctest::Approx(lp_w_norm(x, p, w)).epsilon(1e-12));
  }
}

TEST_CASE("inclusions and norm axioms") {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 300; ++i) {
    const auto x = oracle::random_real_sequence(rng, -20, 20, 16, 10.0);
    const auto y = oracle::random_real_sequence(rng, -20, 20, 16, 10.0);
    const Weight w = i % 3 == 0 ? Weight::one() : Weight::power(i % 3 == 1 ? 0.5 : -0.5);
    const double p = 1.0 + (i % 3) * 0.5;
    const double q = p + 1.5;
    const MorreyParams mp{p, q, w, w};
    const double strong = morrey_norm(x, mp).value;
    CHECK(leq_with_rounding(weak_morrey_norm(x, p, q, w).value, strong));
    CHECK(leq_with_rounding(strong, lp_w_norm(x, q, w)));
    CHECK(leq_with_rounding(morrey_pinf_norm(x, p, w, w).value, x.sup_abs()));
    CHECK(morrey_norm(x.scaled(-3.0), mp).value == doctest::Approx(3.0 * strong).epsilon(1e-14));
    CHECK(leq_with_rounding(morrey_norm(x + y, mp).value, strong + morrey_norm(y, mp).value));
  }
}

TEST_CASE("two-weight inclusion") {
  std::mt19937_64 rng(10);
  const Weight w = Weight::power(0.5);
  for (double c : {0.5, 2.0}) {
    const Weight v = w.scaled(c);
    const double big_c = 1.0 / c;  // w <= (1/c) v
    for (int i = 0; i < 50; ++i) {
      const auto x = oracle::random_real_sequence(rng, -20, 20, 12, 10.0);
      const double p = 2.0, q = 3.0;
      const double lhs = morrey_norm(x, {p, q, w, v}).value;
      const double rhs = morrey_norm(x, {p, q, v, w}).value;
      CHECK(leq_with_rounding(lhs, std::pow(big_c, 2.0 / p - 1.0 / q) * rhs));
    }
  }
}

TEST_CASE("enlarging the scan region never changes the norm") {
  std::mt19937_64 rng(12);
  const std::vector<Weight> weights{Weight::one(), Weight::power(-0.5), Weight::power(0.0),
                                    Weight::power(1.0)};
  for (int i = 0; i < 200; ++i) {
    const auto x = oracle::random_real_sequence(rng, -40, 40, 32, 10.0);
    const Weight& w = weights[static_cast<std::size_t>(i) % weights.size()];
    const MorreyParams mp{1.5, 2.5, w, w};
    ScanOptions big;
    big.enlarge = 2;
    const auto a = morrey_norm(x, mp);
    const auto b = morrey_norm(x, mp, big);
    CHECK(a.value == b.value);
    CHECK(a.witness == b.witness);
    CHECK(weak_morrey_norm(x, 1.5, 2.5, w).value == weak_morrey_norm(x, 1.5, 2.5, w, big).value);
  }
}

TEST_CASE("windows and certification") {
  const Weight narrow = Weight::tabulated(-2, std::vector<double>(5, 1.0));
  CHECK_THROWS_AS(morrey_norm(kTriple, {1.0, 2.0, narrow, narrow}), UncertifiedDomain);
  const Weight table = Weight::tabulated(-3, std::vector<double>(7, 1.0));
  CHECK_FALSE(morrey_norm(kTriple, {1.0, 2.0, table, table}).lower_bound);
  ScanOptions opts;
  opts.window = IndexInterval{-3, 3};
  const auto r = morrey_norm(kTriple, {1.0, 2.0, table, table}, opts);
  CHECK(r.value == doctest::Approx(std::sqrt(3.0)));
  CHECK_FALSE(r.lower_bound);

  opts.window = IndexInterval{-1, 0};
  const auto cut = morrey_norm(kTriple, {1.0, 2.0, Weight::one(), Weight::one()}, opts);
  CHECK(cut.lower_bound);
  CHECK(cut.value <= std::sqrt(3.0));

  // Summable normalizer tails are still certified exactly.
  const auto summable = morrey_norm(kTriple, {1.0, 2.0, Weight::power(-1.5), Weight::power(-1.5)});
  CHECK_FALSE(summable.lower_bound);
}

TEST_CASE("layer cake matches the lp norm") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 1000; ++i) {
    const auto x = oracle::random_real_sequence(rng, -30, 30, 24, 10.0);
    const double p = std::vector<double>{1.0, 1.5, 2.0, 3.0}[static_cast<std::size_t>(i % 4)];
    const Weight w = i % 2 ? Weight::one() : Weight::power(0.5);
    const double lp = std::pow(lp_w_norm(x, p, w), p);
    CHECK(std::abs(lp - layer_cake_eval(x, p, w)) <= 1e-9 * lp);
  }
}

TEST_CASE("thread count does not change results") {
  std::mt19937_64 rng(14);
  for (int i = 0; i < 20; ++i) {
    const auto x = oracle::random_real_sequence(rng, -40, 40, 32, 10.0);
    const MorreyParams mp{2.0, 3.0, Weight::power(0.5), Weight::power(0.5)};
    ScanOptions many;
    many.threads = 4;
    const auto a = morrey_norm(x, mp);
    const auto b = morrey_norm(x, mp, many);
    CHECK(a.value == b.value);
    CHECK(a.witness == b.witness);
  }
}
