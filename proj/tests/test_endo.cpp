#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "reidem/endo.hpp"

using namespace reidem;

namespace {

const Alphabet kRank2(2);

Word W(const std::string& text) { return parse_word(kRank2, text); }

FreeEndomorphism make_free(const std::vector<std::string>& images) {
  std::vector<Word> ws;
  for (const auto& s : images) ws.push_back(parse_word(kRank2, s));
  return {kRank2, std::move(ws)};
}

FreeEndomorphism make_auto(const std::vector<std::string>& images,
                           const std::vector<std::string>& inverse) {
  std::vector<Word> ws, inv;
  for (const auto& s : images) ws.push_back(parse_word(kRank2, s));
  for (const auto& s : inverse) inv.push_back(parse_word(kRank2, s));
  return {kRank2, std::move(ws), std::move(inv)};
}

FreeEndomorphism fib() { return make_auto({"a b", "a"}, {"b", "B a"}); }
FreeEndomorphism swap_ab() { return make_auto({"b", "a"}, {"b", "a"}); }

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
  for (int x = 0; x < n; ++x) map[x] = (x * factor) % n;
  return {std::move(g), std::move(map)};
}

}  // namespace

TEST_CASE("application is the substitution homomorphism") {
  CHECK(swap_ab().apply(W("a B")) == W("b A"));
  CHECK(fib().apply(Word()) == Word());
  CHECK(fib().apply(W("a b")) == W("a b a"));
}

TEST_CASE("homomorphism law on random pairs") {
  std::mt19937 rng(31);
  FreeEndomorphism phi = fib();
  for (int trial = 0; trial < 10000; ++trial) {
    Word u = reduce(kRank2, oracle::random_reduced_word(rng, 2, 12));
    Word v = reduce(kRank2, oracle::random_reduced_word(rng, 2, 12));
    CHECK(phi.apply(multiply(u, v)) == multiply(phi.apply(u), phi.apply(v)));
  }
}

TEST_CASE("composition") {
  FreeEndomorphism s = swap_ab();
  FreeEndomorphism ss = s.compose(s);
  CHECK(ss.is_identity());
  FreeEndomorphism id = identity_free_endomorphism(kRank2);
  CHECK(id.compose(fib()).images() == fib().images());

  FreeEndomorphism f2 = fib().compose(fib());
  CHECK(f2.images()[0] == W("a b a"));
  CHECK(f2.images()[1] == W("a b"));
}

TEST_CASE("abelianization matrix") {
  IntegerMatrix m = fib().abelianization_matrix();
  CHECK(m.at(0, 0) == 1);
  CHECK(m.at(0, 1) == 1);
  CHECK(m.at(1, 0) == 1);
  CHECK(m.at(1, 1) == 0);

  CHECK(identity_free_endomorphism(kRank2).abelianization_matrix() == IntegerMatrix::identity(2));

  IntegerMatrix k = make_free({"a B a", "b"}).abelianization_matrix();
  CHECK(k.at(0, 0) == 2);
  CHECK(k.at(0, 1) == 0);
  CHECK(k.at(1, 0) == -1);
  CHECK(k.at(1, 1) == 1);
}

TEST_CASE("abelianization is functorial") {
  std::vector<FreeEndomorphism> pool = {fib(), swap_ab(), make_free({"a b A", "b b"}),
                                        make_free({"B", "a a"})};
  for (const auto& phi : pool) {
    for (const auto& psi : pool) {
      CHECK(phi.compose(psi).abelianization_matrix() ==
            phi.abelianization_matrix() * psi.abelianization_matrix());
    }
  }
}

TEST_CASE("declared inverses are verified") {
  CHECK(fib().is_automorphism());
  CHECK_FALSE(make_free({"a b", "a"}).is_automorphism());
  CHECK_THROWS_AS(make_auto({"a b", "a"}, {"a", "b"}), MathError);
  CHECK(fib().inverse().apply(W("a b")) == W("a"));
  CHECK(fib().apply_power(W("a"), -1) == W("b"));
  CHECK_THROWS_AS(make_free({"a b", "a"}).apply_power(W("a"), -1), MathError);
}

TEST_CASE("finite endomorphism validation") {
  CHECK_NOTHROW(cyclic_endo(6, 2));
  FiniteGroup z4(4, cyclic_table(4));
  CHECK_THROWS_AS(FiniteEndomorphism(z4, {0, 1, 3, 2}), MathError);
  CHECK_THROWS_AS(FiniteEndomorphism(z4, {0, 1}), InputError);
  CHECK(cyclic_endo(5, 2).is_bijective());
  CHECK_FALSE(cyclic_endo(4, 2).is_bijective());
  CHECK(cyclic_endo(7, 2).order_as_automorphism() == 3);  // 2^3 = 1 mod 7
}

TEST_CASE("nilpotent radical") {
  // phi(x) = 2x on Z/4 kills everything in two steps.
  CHECK(nilpotent_radical(cyclic_endo(4, 2)) == std::vector<int>{0, 1, 2, 3});
  // phi(x) = 2x on Z/6: only 0 and 3 die.
  CHECK(nilpotent_radical(cyclic_endo(6, 2)) == std::vector<int>{0, 3});
  // Injective maps kill nothing.
  CHECK(nilpotent_radical(cyclic_endo(5, 2)) == std::vector<int>{0});
}

TEST_CASE("quotient endomorphism") {
  FiniteQuotient q = quotient_endomorphism(cyclic_endo(4, 2), {0, 1, 2, 3});
  CHECK(q.group.order() == 1);

  q = quotient_endomorphism(cyclic_endo(6, 2), {0, 3});
  CHECK(q.group.order() == 3);
  CHECK(q.endo.is_injective());
  CHECK(q.endo.apply(q.coset_of[1]) == q.coset_of[2]);

  q = quotient_endomorphism(cyclic_endo(5, 2), {0});
  CHECK(q.group.order() == 5);

  CHECK_THROWS_AS(quotient_endomorphism(cyclic_endo(6, 2), {0, 2}), MathError);

  // Z2 x Z2 with coordinate swap: {(0,0),(1,0)} is normal but not invariant.
  FiniteGroup klein(4, {0, 1, 2, 3, 1, 0, 3, 2, 2, 3, 0, 1, 3, 2, 1, 0});
  FiniteEndomorphism coordinate_swap(klein, {0, 2, 1, 3});
  CHECK_THROWS_AS(quotient_endomorphism(coordinate_swap, {0, 2}), MathError);
  CHECK(quotient_endomorphism(coordinate_swap, {0, 3}).group.order() == 2);
}

TEST_CASE("hyperbolicity witness") {
  HyperbolicityReport r = hyperbolicity_witness(identity_free_endomorphism(kRank2), 1,
                                                Rational(2), 1);
  CHECK_FALSE(r.holds);
  REQUIRE_FALSE(r.violators.empty());
  CHECK(r.violators.front() == W("a"));

  r = hyperbolicity_witness(swap_ab(), 1, Rational(2), 1);
  CHECK_FALSE(r.holds);
  CHECK(r.violators.front() == W("a"));

  HyperbolicityReport once = hyperbolicity_witness(fib(), 3, Rational(3, 2), 4);
  HyperbolicityReport again = hyperbolicity_witness(fib(), 3, Rational(3, 2), 4, 4);
  CHECK(once.holds == again.holds);
  CHECK(once.violators == again.violators);
  CHECK(once.words_checked == 160);

  // The violator list is truncated at 100, oldest first.
  HyperbolicityReport all = hyperbolicity_witness(identity_free_endomorphism(kRank2), 1,
                                                  Rational(2), 4);
  CHECK(all.violators.size() == 100);
  HyperbolicityReport all_mt = hyperbolicity_witness(identity_free_endomorphism(kRank2), 1,
                                                     Rational(2), 4, 3);
  CHECK(all.violators == all_mt.violators);

  CHECK_THROWS_AS(hyperbolicity_witness(make_free({"a b", "a"}), 1, Rational(2), 2), MathError);
  CHECK_THROWS_AS(hyperbolicity_witness(fib(), 1, Rational(1), 2), InputError);
}

TEST_CASE("free nilpotency is a semidecision") {
  FreeEndomorphism kill_a = make_free({"", "b"});
  CHECK(nilpotent_test_free(kill_a, W("a")).exponent == 1);

  FreeEndomorphism shift = make_free({"b", ""});
  CHECK(nilpotent_test_free(shift, W("a")).exponent == 2);

  NilpotencyVerdict v = nilpotent_test_free(fib(), W("a"), 10);
  CHECK_FALSE(v.exponent.has_value());
  CHECK(v.steps_completed == 10);
}
