#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include <algorithm>
#include <array>

#include "reidem/torus.hpp"

using namespace reidem;

namespace {

const Alphabet kRank2(2);

Word W(const std::string& text) { return parse_word(kRank2, text); }

FreeEndomorphism fib() {
  return {kRank2, {W("a b"), W("a")}, {W("b"), W("B a")}};
}
FreeEndomorphism swap_ab() { return {kRank2, {W("b"), W("a")}, {W("b"), W("a")}}; }

std::vector<int> cyclic_table(int n) {
  std::vector<int> t(n * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) t[a * n + b] = (a + b) % n;
  }
  return t;
}

FiniteEndomorphism cyclic_endo(int n, int factor) {
  FiniteGroup g(n, cyclic_table(n));
  std::vector<int> map(n);
  for (int x = 0; x < n; ++x) map[x] = ((x * factor) % n + n) % n;
  return {std::move(g), std::move(map)};
}

FiniteGroup make_s3() {
  std::vector<std::array<int, 3>> perms = {
      {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  std::vector<int> table(36);
  for (int a = 0; a < 6; ++a) {
    for (int b = 0; b < 6; ++b) {
      std::array<int, 3> c;
      for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
      table[a * 6 + b] =
          static_cast<int>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  }
  return FiniteGroup(6, std::move(table));
}

TorusElement random_torus_element(std::mt19937& rng) {
  std::uniform_int_distribution<int> z(-3, 3);
  return {reduce(kRank2, oracle::random_reduced_word(rng, 2, 6)), z(rng)};
}

}  // namespace

TEST_CASE("torus multiplication") {
  FreeEndomorphism phi = fib();
  TorusElement g{W("a b"), 0}, h{W("b"), 0};
  CHECK(torus_multiply(phi, g, h) == TorusElement{W("a b b"), 0});

  // z * a = phi(a) * z.
  CHECK(torus_multiply(phi, {Word(), 1}, {W("a"), 0}) == TorusElement{W("a b"), 1});

  CHECK(torus_multiply(swap_ab(), {W("a"), 1}, {W("a"), -1}) == TorusElement{W("a b"), 0});

  // Negative z-exponents need the inverse.
  FreeEndomorphism not_auto(kRank2, {W("a b"), W("a")});
  CHECK_THROWS_AS(torus_multiply(not_auto, {Word(), -1}, {W("a"), 0}), MathError);
}

TEST_CASE("torus group laws on random samples") {
  FreeEndomorphism phi = fib();
  std::mt19937 rng(43);
  TorusElement identity{Word(), 0};
  for (int trial = 0; trial < 10000; ++trial) {
    TorusElement u = random_torus_element(rng);
    TorusElement v = random_torus_element(rng);
    TorusElement w = random_torus_element(rng);
    CHECK(torus_multiply(phi, torus_multiply(phi, u, v), w) ==
          torus_multiply(phi, u, torus_multiply(phi, v, w)));
    CHECK(torus_multiply(phi, u, identity) == u);
    CHECK(torus_multiply(phi, identity, u) == u);
    CHECK(torus_multiply(phi, u, torus_inverse(phi, u)) == identity);
  }
}

TEST_CASE("defining relation") {
  FreeEndomorphism phi = fib();
  for (int i = 1; i <= 2; ++i) {
    TorusElement g{Word::from_reduced(2, {i}), 0};
    TorusElement lhs = torus_multiply(
        phi, torus_multiply(phi, {Word(), 1}, g), {Word(), -1});
    CHECK(lhs == TorusElement{phi.apply(g.g), 0});
  }
}

TEST_CASE("torus powers") {
  FreeEndomorphism id = identity_free_endomorphism(kRank2);
  TorusElement t{W("a a"), 1};
  TorusElement sq = torus_power(id, t, 2);
  CHECK(sq == TorusElement{W("a a a a"), 2});
  CHECK(torus_power(id, t, -1) == torus_inverse(id, t));
  CHECK(torus_power(id, t, 0) == TorusElement{Word(), 0});
}

TEST_CASE("coset conjugacy search") {
  FreeEndomorphism phi = fib();
  Word x = W("a b");

  CosetConjugacyVerdict v = torus_conjugate_coset(x, x, phi, 0, 0);
  CHECK(v.verdict == Verdict::Yes);
  CHECK(v.conjugator == TorusElement{Word(), 0});

  v = torus_conjugate_coset(x, phi.apply(x), phi, x.size(), 1);
  CHECK(v.verdict == Verdict::Yes);

  FreeEndomorphism id = identity_free_endomorphism(kRank2);
  v = torus_conjugate_coset(W("a"), W("b"), id, 2, 2);
  CHECK(v.verdict == Verdict::No);
  CHECK(v.certificate == NoCertificate::InvariantMismatch);

  // Default z-range is |x| + |y| + 2, recorded in the verdict.
  v = torus_conjugate_coset(W("a"), W("b a"), fib(), 2);
  CHECK(v.z_range == 5);
}

TEST_CASE("conjugation preserves the coset") {
  FreeEndomorphism phi = fib();
  std::mt19937 rng(53);
  TorusElement xz{W("a B"), 1};
  for (int trial = 0; trial < 500; ++trial) {
    TorusElement c = random_torus_element(rng);
    TorusElement moved =
        torus_multiply(phi, torus_multiply(phi, c, xz), torus_inverse(phi, c));
    CHECK(moved.z == 1);
  }
}

TEST_CASE("finite torus realizes the coset model") {
  // Z/6 with negation: order-2 automorphism, product of order 12.
  FiniteEndomorphism neg6 = cyclic_endo(6, -1);
  FiniteTorus torus = build_finite_torus(neg6);
  CHECK(torus.m == 2);
  CHECK(torus.product.order() == 12);

  // The defining relation z g z^-1 = phi(g) inside the product table.
  int z = torus.embed(torus.base.identity(), 1);
  for (int g = 0; g < 6; ++g) {
    int conjugated = torus.product.conj(z, torus.embed(g, 0));
    CHECK(conjugated == torus.embed(neg6.apply(g), 0));
  }

  CosetBijectionReport rep = verify_coset_bijection(neg6);
  CHECK(rep.m == 2);
  CHECK(rep.twisted_count == 2);
  CHECK(rep.coset_count == 2);
  CHECK(rep.bijection_ok);

  CHECK_THROWS_AS(build_finite_torus(cyclic_endo(6, 2)), MathError);
}

TEST_CASE("coset bijection for the identity is the class count") {
  FiniteGroup s3 = make_s3();
  CosetBijectionReport rep = verify_coset_bijection(identity_endomorphism(s3));
  CHECK(rep.m == 1);
  CHECK(rep.twisted_count == 3);
  CHECK(rep.coset_count == 3);
  CHECK(rep.bijection_ok);
}

TEST_CASE("coset bijection for an inner automorphism of s3") {
  FiniteGroup s3 = make_s3();
  std::vector<int> conj_map(6);
  for (int x = 0; x < 6; ++x) conj_map[x] = s3.conj(1, x);
  FiniteEndomorphism inner(s3, conj_map);
  CHECK(inner.order_as_automorphism() == 2);
  CosetBijectionReport rep = verify_coset_bijection(inner);
  CHECK(rep.twisted_count == rep.coset_count);
  CHECK(rep.bijection_ok);
  CHECK(rep.twisted_count == 3);
}

TEST_CASE("stable norm estimates") {
  FreeEndomorphism id = identity_free_endomorphism(kRank2);
  for (int iters : {1, 3, 6}) {
    CHECK(stable_norm_estimate(id, {W("a"), 0}, iters) == Rational(1));
  }
  CHECK(stable_norm_estimate(fib(), {Word(), 1}, 5) == Rational(0));
  CHECK(stable_norm_estimate(id, {W("a b"), 0}, 4) == Rational(2));

  // Non-increasing in the iteration budget.
  TorusElement t{W("a B"), 1};
  FreeEndomorphism phi = fib();
  Rational prev = stable_norm_estimate(phi, t, 1);
  for (int iters = 2; iters <= 8; ++iters) {
    Rational cur = stable_norm_estimate(phi, t, iters);
    CHECK(cur <= prev);
    prev = cur;
  }
}
