#pragma once

#include "reidem/torus.hpp"

namespace reidem {

struct CdChoice {
  Word c, d;
  bool problem_case = false;  // both letters of a pair were twisted-inverted
  int p_cap = 0;
  // Trigger exponents that fired during selection (0 = never within p_cap).
  int p_a = 0, q_b = 0, p_cstar = 0, q_ccstar = 0;
};

// Picks c and d in the style of the coset-class construction: a generator
// pair survives unless twisted conjugation by u = u0*z inverts a power of
// both of its members, in which case the mixed word a^p b^q is taken and the
// defining inequality u c u^-1 != c^-1 is verified outright.
CdChoice choose_cd(const Word& u0, const FreeEndomorphism& phi, const Word& a, const Word& b,
                   int p_cap);

// Bounded freeness evidence for <x, y>: substitutes every nontrivial reduced
// rank-2 pattern of length <= 2(|x|+|y|) and demands a nontrivial image.
// Failure certifies a genuine relation; success is evidence, exact when x, y
// are basis letters.
bool verified_free_pair(const Word& x, const Word& y, int rank);

struct WitnessFamily {
  Word u0, c, d;
  int k = 1;
  std::vector<Word> reps;              // word parts w_n of z_n = x_k^{n+1} y_k^{-n}
  std::vector<TorusElement> elements;  // the z_n themselves, all with z-exponent 1
};

// x_k = c^k u c^k and y_k = d^k u d^k as torus elements over u = u0*z;
// z_n = x_k^{n+1} y_k^{-n} for n = 0..n_max.
WitnessFamily generate_family(const Word& u0, const Word& c, const Word& d,
                              const FreeEndomorphism& phi, int k, int n_max);

enum class CertEntry { Same, Distinct, Unknown };

struct Certification {
  int n = 0;
  std::vector<CertEntry> entries;  // row-major n x n; diagonal Same
  bool certified = false;          // every off-diagonal pair Distinct
  CertEntry at(int i, int j) const { return entries[static_cast<std::size_t>(i) * n + j]; }
};

// Pairwise distinctness ladder: invariant comparison, then exact free-group
// conjugacy when phi = id, then bounded twisted search. Unknown entries are
// reported, never guessed.
Certification certify_family(const WitnessFamily& family, const FreeEndomorphism& phi,
                             int radius);

const char* cert_entry_name(CertEntry e);

}  // namespace reidem
