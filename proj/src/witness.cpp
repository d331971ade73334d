#include "reidem/witness.hpp"

namespace reidem {

bool verified_free_pair(const Word& x, const Word& y, int rank) {
  if (x.empty() || y.empty()) return false;
  Alphabet pattern_alphabet(2);
  Alphabet target(rank);
  int bound = 2 * (x.size() + y.size());
  bool free = true;
  for_each_in_ball(pattern_alphabet, bound, [&](const Word& pattern) {
    if (!free || pattern.empty()) return;
    std::vector<Letter> image;
    auto append = [&](const Word& w, bool inverted) {
      if (!inverted) {
        for (Letter l : w.letters()) {
          if (!image.empty() && image.back() == -l) {
            image.pop_back();
          } else {
            image.push_back(l);
          }
        }
      } else {
        for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
          Letter l = -*it;
          if (!image.empty() && image.back() == -l) {
            image.pop_back();
          } else {
            image.push_back(l);
          }
        }
      }
    };
    for (Letter l : pattern.letters()) {
      const Word& base = (l == 1 || l == -1) ? x : y;
      append(base, l < 0);
    }
    if (image.empty()) free = false;
  });
  return free;
}

namespace {

// Least p <= p_cap with u0 phi(x^p) u0^-1 == x^-p, i.e. the coset element
// u = u0*z twisted-inverts a power of x; 0 if none.
int inversion_trigger(const Word& u0, const FreeEndomorphism& phi, const Word& x, int p_cap) {
  for (int p = 1; p <= p_cap; ++p) {
    Word xp = power(x, p);
    Word lhs = conjugated(u0, phi.apply(xp));
    if (lhs == inverse(xp)) return p;
  }
  return 0;
}

}  // namespace

CdChoice choose_cd(const Word& u0, const FreeEndomorphism& phi, const Word& a, const Word& b,
                   int p_cap) {
  if (p_cap < 1) throw InputError("p_cap must be >= 1");
  int rank = phi.alphabet().rank();
  if (!verified_free_pair(a, b, rank)) {
    throw MathError("a, b are not verifiably a free pair of rank 2");
  }

  CdChoice out;
  out.p_cap = p_cap;

  auto pick = [&](const Word& first, const Word& second, int& trig_first, int& trig_second) {
    trig_first = inversion_trigger(u0, phi, first, p_cap);
    if (trig_first == 0) return first;
    trig_second = inversion_trigger(u0, phi, second, p_cap);
    if (trig_second == 0) return second;
    // Both powers invert: the mixed word cannot, since its twisted image
    // reverses the factor order.
    Word mixed = multiply(power(first, trig_first), power(second, trig_second));
    if (conjugated(u0, phi.apply(mixed)) == inverse(mixed)) {
      throw Error("internal: mixed word escaped the inversion argument");
    }
    out.problem_case = true;
    return mixed;
  };

  out.c = pick(a, b, out.p_a, out.q_b);

  Word c_star;
  if (verified_free_pair(out.c, b, rank)) {
    c_star = b;
  } else if (verified_free_pair(out.c, a, rank)) {
    c_star = a;
  } else {
    throw MathError("p_cap exhausted in an ambiguous state: no verifiable companion for c");
  }
  Word cc_star = multiply(out.c, c_star);
  out.d = pick(c_star, cc_star, out.p_cstar, out.q_ccstar);
  return out;
}

WitnessFamily generate_family(const Word& u0, const Word& c, const Word& d,
                              const FreeEndomorphism& phi, int k, int n_max) {
  if (k < 1) throw InputError("k must be >= 1");
  if (n_max < 0) throw InputError("n_max must be >= 0");
  if (!phi.is_automorphism()) throw MathError("family generation requires an automorphism");

  WitnessFamily family;
  family.u0 = u0;
  family.c = c;
  family.d = d;
  family.k = k;

  TorusElement u{u0, 1};
  TorusElement ck{power(c, k), 0};
  TorusElement dk{power(d, k), 0};
  TorusElement x_k = torus_multiply(phi, torus_multiply(phi, ck, u), ck);
  TorusElement y_k = torus_multiply(phi, torus_multiply(phi, dk, u), dk);
  TorusElement y_k_inv = torus_inverse(phi, y_k);

  // z_n = x_k^{n+1} y_k^{-n} = x_k * z_{n-1} * y_k^{-1}.
  TorusElement z = x_k;
  for (int n = 0; n <= n_max; ++n) {
    if (n > 0) z = torus_multiply(phi, torus_multiply(phi, x_k, z), y_k_inv);
    if (z.z != 1) throw Error("internal: family member left the coset");
    family.elements.push_back(z);
    family.reps.push_back(z.g);
  }
  return family;
}

Certification certify_family(const WitnessFamily& family, const FreeEndomorphism& phi,
                             int radius) {
  int n = static_cast<int>(family.reps.size());
  Certification cert;
  cert.n = n;
  cert.entries.assign(static_cast<std::size_t>(n) * n, CertEntry::Same);

  TwistedInvariantMap inv(phi);
  std::vector<ClassInvariant> invariants;
  invariants.reserve(n);
  for (const Word& w : family.reps) invariants.push_back(inv.of(w));

  bool all_distinct = true;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      CertEntry e;
      if (!(invariants[i] == invariants[j])) {
        e = CertEntry::Distinct;
      } else if (phi.is_identity()) {
        e = free_conjugate(family.reps[i], family.reps[j]).conjugate ? CertEntry::Same
                                                                     : CertEntry::Distinct;
      } else {
        FreeConjugacyVerdict v =
            twisted_conjugate_free(family.reps[i], family.reps[j], phi, radius);
        e = v.verdict == Verdict::Yes       ? CertEntry::Same
            : v.verdict == Verdict::No      ? CertEntry::Distinct
                                            : CertEntry::Unknown;
      }
      cert.entries[static_cast<std::size_t>(i) * n + j] = e;
      cert.entries[static_cast<std::size_t>(j) * n + i] = e;
      if (e != CertEntry::Distinct) all_distinct = false;
    }
  }
  cert.certified = n > 0 && all_distinct;
  return cert;
}

const char* cert_entry_name(CertEntry e) {
  switch (e) {
    case CertEntry::Same:
      return "same";
    case CertEntry::Distinct:
      return "distinct";
    case CertEntry::Unknown:
      return "unknown";
  }
  return "unknown";
}

}  // namespace reidem
