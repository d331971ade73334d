#include <doctest.h>

#include <cmath>
#include <random>
#include <unordered_set>

#include "oracles.hpp"
#include "reidem/counting.hpp"

using namespace reidem;

namespace {

const Alphabet kRank2(2);

Word W(const std::string& text) { return parse_word(kRank2, text); }

FreeEndomorphism fib() {
  return {kRank2, {W("a b"), W("a")}, {W("b"), W("B a")}};
}

// Independent count of conjugacy classes of cyclically reduced length < x in
// rank 2, via canonical rotation hashing on plain vectors.
long long cyclic_class_count(int x, int enum_radius) {
  oracle::VecSet canonical;
  for (const auto& w : oracle::enumerate(2, enum_radius)) {
    oracle::Vec key = oracle::canonical_cyclic(w);
    if (static_cast<int>(oracle::cyclic_core(w).size()) < x) canonical.insert(key);
  }
  return static_cast<long long>(canonical.size());
}

}  // namespace

TEST_CASE("norm proxy") {
  FreeEndomorphism id = identity_free_endomorphism(kRank2);
  CHECK(norm_proxy(W("A b a"), id, 0) == 1);
  CHECK(norm_proxy(Word(), id, 3) == 0);

  // gamma = a b sends a to the identity under the fibonacci map.
  CHECK(norm_proxy(W("a"), fib(), 2) == 0);
  CHECK(norm_proxy(W("a"), fib(), 0) == 1);

  // Non-increasing in the radius.
  std::mt19937 rng(47);
  for (int trial = 0; trial < 50; ++trial) {
    Word w = reduce(kRank2, oracle::random_reduced_word(rng, 2, 6));
    int prev = norm_proxy(w, fib(), 0);
    CHECK(prev <= cyclic_reduce(w).core.size());
    for (int radius = 1; radius <= 3; ++radius) {
      int cur = norm_proxy(w, fib(), radius);
      CHECK(cur <= prev);
      prev = cur;
    }
  }
}

TEST_CASE("counting for the identity matches cyclic words") {
  FreeEndomorphism id = identity_free_endomorphism(kRank2);
  std::vector<CountSample> samples = tw_count(id, 4, 4, 4);
  REQUIRE(samples.size() == 5);
  CHECK(samples[0].count == 0);  // nothing has norm < 0
  CHECK(samples[1].count == 1);  // the identity class
  CHECK(samples[2].count == 5);  // identity plus the four length-1 classes
  for (const CountSample& s : samples) {
    CHECK_FALSE(s.lower_bound_only);
    CHECK(s.count == cyclic_class_count(static_cast<int>(s.x), 4));
  }
  // Monotone in x.
  for (std::size_t i = 1; i < samples.size(); ++i) CHECK(samples[i].count >= samples[i - 1].count);
}

TEST_CASE("bounded merging is flagged honestly") {
  std::vector<CountSample> zero_radius = tw_count(fib(), 2, 3, 0);
  for (const CountSample& s : zero_radius) CHECK(s.lower_bound_only);

  // Merging only ever lowers counts.
  std::vector<CountSample> merged = tw_count(fib(), 2, 3, 2);
  for (std::size_t i = 0; i < merged.size(); ++i) CHECK(merged[i].count <= zero_radius[i].count);

  CHECK(tw_count(fib(), 2, 3, 2, 4) == tw_count(fib(), 2, 3, 2, 1));
  CHECK_THROWS_AS(tw_count(fib(), 5, 3, 1), InputError);
}

TEST_CASE("invariant separation certifies exact counts for a rank-1 map") {
  // a -> a^3 on the free group of rank 1: the classes are the two residues
  // of the exponent mod 2, separated by the cokernel invariant, so the
  // partition is certifiably exact even though the map is not the identity.
  Alphabet rank1(1);
  FreeEndomorphism cube(rank1, {parse_word(rank1, "a a a")});
  CHECK(reidemeister_abelian(cube.abelianization_matrix()) ==
        ReidemeisterCount::finite_count(2));

  std::vector<CountSample> samples = tw_count(cube, 3, 4, 2);
  REQUIRE(samples.size() == 4);
  for (const CountSample& s : samples) CHECK_FALSE(s.lower_bound_only);
  CHECK(samples[0].count == 0);
  CHECK(samples[1].count == 1);  // the identity class
  CHECK(samples[2].count == 2);  // plus the odd-exponent class
  CHECK(samples[3].count == 2);  // and nothing else, ever
}

TEST_CASE("synthetic sample generation") {
  std::vector<CountSample> s = generate_synthetic(2, 1, {1});
  CHECK(s[0].count == 7);
  CHECK(generate_synthetic(0, 1, {1})[0].count == 1);
  CHECK(generate_synthetic(2, 1, {3})[0].count == 78);
  CHECK_THROWS_AS(generate_synthetic(2, 1, {0}), InputError);
  CHECK_THROWS_AS(generate_synthetic(2, -1, {1}), InputError);
}

TEST_CASE("fit recovers a noise-free model") {
  for (double h : {0.5, 1.0, 2.0, 3.0}) {
    for (double c0 : {0.1, 1.0, 3.0, 10.0}) {
      std::vector<FitSample> samples;
      for (int x = 2; x <= 10; ++x) {
        samples.push_back({double(x), c0 * std::exp(h * x) / std::pow(x, 1.5)});
      }
      AsymptoticFit fit = fit_asymptotic(samples);
      CHECK(fit.h == doctest::Approx(h).epsilon(1e-12));
      CHECK(fit.c0 == doctest::Approx(c0).epsilon(1e-12));
      CHECK(fit.residual < 1e-12);

      AsymptoticFit fixed = fit_asymptotic(samples, h);
      CHECK(fixed.c0 == doctest::Approx(c0).epsilon(1e-12));
      CHECK(fixed.h_was_fixed);
    }
  }
}

TEST_CASE("fit with fixed h and noisy data") {
  std::mt19937 rng(12345);
  std::normal_distribution<double> noise(0.0, 0.01);
  std::vector<FitSample> samples;
  for (int x = 2; x <= 12; ++x) {
    double exact = 3.0 * std::exp(2.0 * x) / std::pow(x, 1.5);
    samples.push_back({double(x), exact * (1.0 + noise(rng))});
  }
  AsymptoticFit fit = fit_asymptotic(samples);
  CHECK(std::abs(fit.h - 2.0) <= 0.05);
  CHECK(std::abs(fit.c0 - 3.0) / 3.0 <= 0.05);
}

TEST_CASE("fit edge cases") {
  // Constant counts: well posed, no crash, honest residual.
  std::vector<FitSample> flat;
  for (int x = 1; x <= 6; ++x) flat.push_back({double(x), 5.0});
  AsymptoticFit fit = fit_asymptotic(flat);
  CHECK(std::isfinite(fit.h));
  CHECK(fit.residual >= 0);

  // Zero counts are dropped and reported.
  std::vector<FitSample> with_zeros = flat;
  with_zeros.push_back({7.0, 0.0});
  fit = fit_asymptotic(with_zeros);
  CHECK(fit.dropped_zero_count == 1);

  CHECK_THROWS_AS(fit_asymptotic({{1.0, 2.0}, {2.0, 3.0}}), InputError);
  std::vector<FitSample> degenerate = {{2.0, 3.0}, {2.0, 4.0}, {2.0, 5.0}};
  CHECK_THROWS_AS(fit_asymptotic(degenerate), InputError);
}

TEST_CASE("correction term refinement") {
  // Data generated from (C0 + C2/x) e^(hx) / x^(3/2) with h known.
  double h = 2.0, c0 = 3.0, c2 = 5.0;
  std::vector<FitSample> samples;
  for (int x = 2; x <= 12; ++x) {
    samples.push_back({double(x), (c0 + c2 / x) * std::exp(h * x) / std::pow(x, 1.5)});
  }
  AsymptoticFit fit = fit_asymptotic(samples, h, true);
  REQUIRE(fit.c2.has_value());
  CHECK(*fit.c2 == doctest::Approx(c2).epsilon(1e-6));
  CHECK(fit.c0 == doctest::Approx(c0).epsilon(1e-6));
}
