#pragma once

#include "reidem/twisted.hpp"

namespace reidem {

// Normal form g * z^n in the mapping torus of a free-group endomorphism,
// with all z's pushed to the right.
struct TorusElement {
  Word g;
  long long z = 0;
  bool operator==(const TorusElement&) const = default;
};

// (g1, n1) * (g2, n2) = (g1 * phi^n1(g2), n1 + n2). Negative intermediate
// powers require phi to be an automorphism.
TorusElement torus_multiply(const FreeEndomorphism& phi, const TorusElement& u,
                            const TorusElement& v);
TorusElement torus_inverse(const FreeEndomorphism& phi, const TorusElement& u);
TorusElement torus_power(const FreeEndomorphism& phi, const TorusElement& u, long long k);

struct CosetConjugacyVerdict {
  Verdict verdict = Verdict::Unknown;
  TorusElement conjugator;  // (y, 1) = c * (x, 1) * c^-1 on Yes
  NoCertificate certificate = NoCertificate::None;
  int radius = 0;
  int z_range = 0;
};

// Conjugacy of x*z and y*z inside the mapping torus, searching conjugators
// gamma * z^n with |gamma| <= radius and |n| <= z_range. Yes is re-verified
// by torus arithmetic; No only when invariants (constant along the coset)
// separate; Unknown records the exhausted bounds.
CosetConjugacyVerdict torus_conjugate_coset(const Word& x, const Word& y,
                                            const FreeEndomorphism& phi, int radius, int z_range);

// Any z-exponent can occur in a conjugator, so the default range is a
// heuristic recorded in the verdict.
inline CosetConjugacyVerdict torus_conjugate_coset(const Word& x, const Word& y,
                                                   const FreeEndomorphism& phi, int radius) {
  return torus_conjugate_coset(x, y, phi, radius, x.size() + y.size() + 2);
}

// Desk-scale model of the mapping torus for a finite-order automorphism:
// the semidirect product G x| Z/m with (g,k)(h,l) = (g phi^k(h), k+l mod m).
struct FiniteTorus {
  FiniteGroup base;
  FiniteEndomorphism phi;
  int m = 1;
  FiniteGroup product;

  int embed(int g, int k) const { return k * base.order() + g; }
  int base_part(int idx) const { return idx % base.order(); }
  int z_part(int idx) const { return idx / base.order(); }
};

FiniteTorus build_finite_torus(const FiniteEndomorphism& phi);

struct CosetBijectionReport {
  int m = 1;
  long long twisted_count = 0;
  long long coset_count = 0;
  bool bijection_ok = false;
};

// Partitions the coset {(g,1)} of the finite torus into ordinary conjugacy
// classes and checks that x -> (x,1) induces a bijection from the twisted
// classes of G onto them.
CosetBijectionReport verify_coset_bijection(const FiniteEndomorphism& phi);

// min over 1 <= k <= iterations of |cyclic core of word part of t^k| / k;
// an upper bound for the stable norm, non-increasing in `iterations`.
Rational stable_norm_estimate(const FreeEndomorphism& phi, const TorusElement& t, int iterations);

}  // namespace reidem
