#include <doctest.h>

#include <random>

#include "morreykit/errors.hpp"
#include "morreykit/intervals.hpp"
#include "morreykit/lattice.hpp"
#include "oracles.hpp"

using namespace morreykit;

TEST_CASE("symmetric interval members and dilation") {
  CHECK(interval_members(SymmetricInterval{2, 1}) == std::vector<Index>{1, 2, 3});
  CHECK(SymmetricInterval(0, 3).size() == 7);

  std::mt19937_64 rng(11);
  std::uniform_int_distribution<Index> c(-1000, 1000), r(0, 500), l(1, 20);
  for (int i = 0; i < 10000; ++i) {
    const SymmetricInterval s{c(rng), r(rng)};
    const Index lambda = l(rng);
    const SymmetricInterval d = dilate(s, lambda);
    CHECK(d.size() == 2 * lambda * s.radius + 1);
    CHECK(d.as_interval().contains(s.as_interval()));
  }
  CHECK_THROWS_AS(dilate(SymmetricInterval{0, 1}, 0), PreconditionError);
  CHECK_THROWS_AS(SymmetricInterval(0, -1), PreconditionError);
  CHECK_THROWS_AS(IndexInterval(3, 2), PreconditionError);
}

TEST_CASE("dyadic tree up to level 12") {
  const Index reach = Index{1} << 12;
  for (int level = 1; level <= 12; ++level) {
    const Index size = Index{1} << level;
    for (Index pos = -reach / size; pos <= reach / size + 1; ++pos) {
      const DyadicInterval d{level, pos};
      const auto [a, b] = dyadic_children(d);
      CHECK(a.hi() + 1 == b.lo());
      CHECK(a.lo() == d.lo());
      CHECK(b.hi() == d.hi());
      CHECK(dyadic_parent(a) == d);
      CHECK(dyadic_parent(b) == d);
    }
  }
  CHECK_THROWS_AS(dyadic_children(DyadicInterval{0, 3}), DomainError);
}

TEST_CASE("dyadic intervals tile Z") {
  CHECK(DyadicInterval(0, 1).as_interval() == IndexInterval{1, 1});
  CHECK(DyadicInterval(2, 1).as_interval() == IndexInterval{1, 4});
  CHECK(DyadicInterval(1, 0).as_interval() == IndexInterval{-1, 0});
  for (int level = 0; level <= 8; ++level) {
    for (Index k = -600; k <= 600; ++k) {
      const DyadicInterval d = dyadic_containing(k, level);
      CHECK(d.as_interval().contains(k));
      CHECK_FALSE(DyadicInterval(level, d.pos - 1).as_interval().contains(k));
      CHECK_FALSE(DyadicInterval(level, d.pos + 1).as_interval().contains(k));
    }
  }
}

TEST_CASE("dyadic dilations") {
  const DyadicInterval d{2, 3};  // {9..12}
  CHECK(left_dilate(d, 2) == IndexInterval{5, 12});
  CHECK(right_dilate(d, 2) == IndexInterval{9, 16});
  CHECK(centered_dilate(d, 2) == IndexInterval{5, 16});
  CHECK(centered_dilate(d, 2).size() == 3 * d.size());
}

TEST_CASE("sequence invariants") {
  const LatticeSequence x({{-1, 0.5}, {0, 0.0}, {3, -2.0}});
  CHECK(x.size() == 2);
  CHECK(x.support_lo() == -1);
  CHECK(x.support_hi() == 3);
  CHECK(x(0) == 0.0);
  CHECK(x(3) == -2.0);
  CHECK(x.sup_abs() == 2.0);
  CHECK(LatticeSequence().support_lo() == 0);
  CHECK_FALSE(LatticeSequence().hull().has_value());
  CHECK_THROWS_AS(LatticeSequence({{1, 1.0}, {1, 2.0}}), PreconditionError);
  CHECK_THROWS_AS(LatticeSequence({{2, 1.0}, {1, 2.0}}), PreconditionError);
  CHECK_THROWS_AS(LatticeSequence({{1, NAN}}), DomainError);

  const LatticeSequence y = LatticeSequence::delta(3, 2.0);
  CHECK((x + y)(3) == 0.0);
  CHECK((x + y).size() == 1);
  CHECK(x.scaled(-2.0)(-1) == -1.0);
  CHECK(x.restricted({0, 5}).size() == 1);
  CHECK(x.entries_in({-5, 0}).size() == 1);
}

TEST_CASE("prefix table examples") {
  const Weight one = Weight::one();
  const auto delta = LatticeSequence::delta(0);
  CHECK(build_prefix(delta, PrefixTransform::Abs, one, {-2, 2}).range_sum({-1, 1}) == 1.0);
  const auto four = LatticeSequence::delta(1, 4.0);
  CHECK(build_prefix(four, PrefixTransform::Abs, one, {0, 4}).range_sum({1, 2}) == 4.0);
  CHECK(build_prefix(delta, PrefixTransform::Weight, one, {-3, 3}).range_sum({-3, 3}) == 7.0);
  const auto t = build_prefix(delta, PrefixTransform::Abs, one, {-2, 2});
  CHECK_THROWS_AS(t.range_sum({-3, 0}), DomainError);
  CHECK(t.clipped_sum(-10, 10) == 1.0);
  CHECK_THROWS_AS(build_prefix(delta, PrefixTransform::Abs, one, {0, 100}, 1.0, 50), ResourceError);
}

TEST_CASE("prefix range sums match direct sums") {
  std::mt19937_64 rng(5);
  const Weight w = Weight::power(0.5);
  for (int i = 0; i < 1000; ++i) {
    const auto x = oracle::random_real_sequence(rng, -50, 50, 40, 10.0);
    const IndexInterval win{x.support_lo() - 5, x.support_hi() + 5};
    const auto t = build_prefix(x, PrefixTransform::AbsPowWeighted, w, win, 2.0);
    std::uniform_int_distribution<Index> pick(win.lo, win.hi);
    Index a = pick(rng), b = pick(rng);
    if (a > b) std::swap(a, b);
    double direct = 0.0;
    for (Index k = a; k <= b; ++k) direct += x(k) * x(k) * w(k);
    CHECK(t.range_sum({a, b}) == doctest::Approx(direct).epsilon(1e-12));
    const auto& c = t.cumulative();
    CHECK(std::is_sorted(c.begin(), c.end()));
  }
}
