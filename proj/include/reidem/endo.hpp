#pragma once

#include <boost/rational.hpp>
#include <optional>
#include <vector>

#include "reidem/finite_group.hpp"
#include "reidem/integer_matrix.hpp"
#include "reidem/word.hpp"

namespace reidem {

using Rational = boost::rational<long long>;

// Endomorphism of a finite group, stored as the image of every element.
// Construction verifies the homomorphism law on all pairs.
class FiniteEndomorphism {
 public:
  FiniteEndomorphism(FiniteGroup group, std::vector<int> map);

  const FiniteGroup& group() const { return group_; }
  const std::vector<int>& map() const { return map_; }
  int apply(int x) const { return map_[x]; }

  bool is_bijective() const;
  bool is_identity() const;
  bool is_injective() const;
  // this after inner; both on the same group.
  FiniteEndomorphism compose(const FiniteEndomorphism& inner) const;
  // Least m >= 1 with map^m = id; requires bijectivity.
  int order_as_automorphism() const;

 private:
  FiniteGroup group_;
  std::vector<int> map_;
};

FiniteEndomorphism identity_endomorphism(const FiniteGroup& g);

// All x with phi^n(x) = identity for some n <= |G|. The returned subgroup is
// re-verified to be normal, phi-invariant and phi-saturated.
std::vector<int> nilpotent_radical(const FiniteEndomorphism& phi);

struct FiniteQuotient {
  FiniteGroup group;
  std::vector<int> coset_of;  // element -> coset index
  std::vector<int> reps;      // coset index -> least element
  FiniteEndomorphism endo;    // induced map on the quotient
};

// Quotient of the group by a normal, phi-invariant subgroup, with the
// induced endomorphism.
FiniteQuotient quotient_endomorphism(const FiniteEndomorphism& phi,
                                     const std::vector<int>& normal_subgroup);

// Endomorphism of a free group, stored as generator images. If inverse
// images are supplied, both compositions are verified to fix every
// generator, which certifies an automorphism.
class FreeEndomorphism {
 public:
  FreeEndomorphism(Alphabet alphabet, std::vector<Word> images);
  FreeEndomorphism(Alphabet alphabet, std::vector<Word> images, std::vector<Word> inverse_images);

  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<Word>& images() const { return images_; }
  bool is_automorphism() const { return inverse_images_.has_value(); }
  bool is_identity() const;

  Word apply(const Word& w) const;
  // phi^n at a word; negative n requires the declared inverse.
  Word apply_power(const Word& w, long long n) const;
  FreeEndomorphism inverse() const;
  FreeEndomorphism compose(const FreeEndomorphism& inner) const;
  // phi^m as a map; m >= 0 (m < 0 via inverse()).
  FreeEndomorphism pow(int m) const;

  // Column j counts the signed occurrences of each generator in images[j].
  IntegerMatrix abelianization_matrix() const;

 private:
  Word apply_letters(const std::vector<Word>& images, const Word& w) const;

  Alphabet alphabet_;
  std::vector<Word> images_;
  std::optional<std::vector<Word>> inverse_images_;
};

FreeEndomorphism identity_free_endomorphism(const Alphabet& alphabet);

struct HyperbolicityReport {
  bool holds = false;
  std::vector<Word> violators;  // length-then-lex order, truncated to 100
  unsigned long long words_checked = 0;
  int radius = 0;
};

// Checks max(|phi^m(g)|, |phi^-m(g)|) >= lambda * |g| for every nontrivial
// reduced word of length <= radius, against the standard basis. Evidence at
// the given radius only, never a proof of the universal property.
HyperbolicityReport hyperbolicity_witness(const FreeEndomorphism& phi, int m, Rational lambda,
                                          int radius, int threads = 1);

struct NilpotencyVerdict {
  std::optional<int> exponent;  // least n <= cap with phi^n(w) = identity
  int steps_completed = 0;
  bool length_capped = false;  // iteration stopped early on word growth
};

NilpotencyVerdict nilpotent_test_free(const FreeEndomorphism& phi, const Word& w, int cap = 64,
                                      std::size_t max_letters = std::size_t(1) << 20);

}  // namespace reidem
