#include <doctest.h>

#include "reidem/witness.hpp"

using namespace reidem;

namespace {

const Alphabet kRank2(2);

Word W(const std::string& text) { return parse_word(kRank2, text); }

FreeEndomorphism id2() { return identity_free_endomorphism(kRank2); }
FreeEndomorphism swap_ab() { return {kRank2, {W("b"), W("a")}, {W("b"), W("a")}}; }
// Inverts both generators; its own inverse.
FreeEndomorphism invert_all() { return {kRank2, {W("A"), W("B")}, {W("A"), W("B")}}; }

}  // namespace

TEST_CASE("bounded freeness evidence") {
  CHECK(verified_free_pair(W("a"), W("b"), 2));
  CHECK(verified_free_pair(W("a b"), W("b"), 2));
  CHECK_FALSE(verified_free_pair(W("a"), W("a"), 2));
  CHECK_FALSE(verified_free_pair(W("a b"), W("B A"), 2));
  CHECK_FALSE(verified_free_pair(Word(), W("b"), 2));
}

TEST_CASE("letter choice without any inversion trigger") {
  CdChoice choice = choose_cd(Word(), id2(), W("a"), W("b"), 8);
  CHECK(choice.c == W("a"));
  CHECK(choice.d == W("b"));
  CHECK_FALSE(choice.problem_case);

  choice = choose_cd(Word(), swap_ab(), W("a"), W("b"), 8);
  CHECK(choice.c == W("a"));
  CHECK_FALSE(choice.problem_case);

  choice = choose_cd(W("a"), id2(), W("a"), W("b"), 8);
  CHECK(choice.c == W("a"));
  CHECK(choice.d == W("b"));

  CHECK_THROWS_AS(choose_cd(Word(), id2(), W("a"), W("a"), 8), MathError);
  CHECK_THROWS_AS(choose_cd(Word(), id2(), W("a b"), W("B A"), 8), MathError);
}

TEST_CASE("problem case takes the mixed word") {
  // u0 = identity with the inverting automorphism arranges u a^p u^-1 = a^-p
  // at p = 1 for both letters.
  CdChoice choice = choose_cd(Word(), invert_all(), W("a"), W("b"), 8);
  CHECK(choice.problem_case);
  CHECK(choice.c == W("a b"));
  CHECK(choice.p_a == 1);
  CHECK(choice.q_b == 1);
  // The defining inequality, by direct word comparison.
  Word twisted = invert_all().apply(choice.c);
  CHECK(twisted == W("A B"));
  CHECK(inverse(choice.c) == W("B A"));
  CHECK_FALSE(twisted == inverse(choice.c));
  // d stays a positive word in c* and c c*.
  CHECK(choice.d == W("a b b"));
}

TEST_CASE("family generation in the identity case") {
  WitnessFamily family = generate_family(Word(), W("a"), W("b"), id2(), 1, 20);
  REQUIRE(family.reps.size() == 21);
  CHECK(family.elements[0] == TorusElement{W("a a"), 1});
  CHECK(family.reps[1] == W("a a a a B B"));
  for (const TorusElement& z : family.elements) CHECK(z.z == 1);
  // Cyclically reduced lengths 4n+2 strictly increase.
  int prev = -1;
  for (const Word& w : family.reps) {
    int len = cyclic_reduce(w).core.size();
    CHECK(len > prev);
    prev = len;
  }
  // Stable norm estimates are non-decreasing along the family.
  Rational last(-1);
  for (const TorusElement& z : family.elements) {
    Rational est = stable_norm_estimate(id2(), z, 4);
    CHECK(est >= last);
    last = est;
  }
}

TEST_CASE("certification by the abelianization invariant") {
  FreeEndomorphism id = id2();
  WitnessFamily family = generate_family(Word(), W("a"), W("b"), id, 1, 20);
  Certification cert = certify_family(family, id, 2);
  CHECK(cert.certified);
  for (int i = 0; i < cert.n; ++i) {
    for (int j = 0; j < cert.n; ++j) {
      CHECK(cert.at(i, j) == (i == j ? CertEntry::Same : CertEntry::Distinct));
    }
  }
  // Invariant coordinates are exactly (2n+2, -2n).
  TwistedInvariantMap inv(id);
  for (std::size_t n = 0; n < family.reps.size(); ++n) {
    ClassInvariant i = inv.of(family.reps[n]);
    CHECK(i.coords == std::vector<Integer>{Integer(2 * n + 2), Integer(-2 * static_cast<long long>(n))});
  }
}

TEST_CASE("degenerate family with c = d collapses") {
  FreeEndomorphism id = id2();
  WitnessFamily family = generate_family(Word(), W("a"), W("a"), id, 1, 5);
  // z_n = x_k for every n, so everything is the same class.
  Certification cert = certify_family(family, id, 2);
  CHECK_FALSE(cert.certified);
  for (int i = 0; i < cert.n; ++i) {
    for (int j = 0; j < cert.n; ++j) CHECK(cert.at(i, j) == CertEntry::Same);
  }
}

TEST_CASE("trivial cokernel yields honest unknowns") {
  FreeEndomorphism fib(kRank2, {W("a b"), W("a")}, {W("b"), W("B a")});
  WitnessFamily family = generate_family(Word(), W("a"), W("b"), fib, 1, 3);
  Certification cert = certify_family(family, fib, 1);
  // The invariant cannot separate anything here; no pair may be reported
  // distinct, and the family must not be certified.
  CHECK_FALSE(cert.certified);
  for (int i = 0; i < cert.n; ++i) {
    for (int j = 0; j < cert.n; ++j) CHECK(cert.at(i, j) != CertEntry::Distinct);
  }
}

TEST_CASE("family generation under the inverting automorphism") {
  FreeEndomorphism phi = invert_all();
  CdChoice choice = choose_cd(Word(), phi, W("a"), W("b"), 8);
  WitnessFamily family = generate_family(Word(), choice.c, choice.d, phi, 1, 5);
  for (const TorusElement& z : family.elements) CHECK(z.z == 1);
}
