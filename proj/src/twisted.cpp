#include "reidem/twisted.hpp"

#include <algorithm>
#include <map>

namespace reidem {

std::vector<Integer> abelianization(const Word& w, int rank) {
  std::vector<Integer> counts(rank);
  for (Letter l : w.letters()) {
    int i = (l > 0 ? l : -l) - 1;
    counts[i] += l > 0 ? 1 : -1;
  }
  return counts;
}

TwistedInvariantMap::TwistedInvariantMap(const FreeEndomorphism& phi)
    : rank_(phi.alphabet().rank()),
      snf_(smith_normal_form(IntegerMatrix::identity(rank_) - phi.abelianization_matrix())) {}

ClassInvariant TwistedInvariantMap::of(const Word& w) const {
  std::vector<Integer> ab = abelianization(w, rank_);
  ClassInvariant inv;
  inv.coords.resize(rank_);
  inv.moduli = snf_.diag;
  for (int i = 0; i < rank_; ++i) {
    Integer v = 0;
    for (int j = 0; j < rank_; ++j) v += snf_.left.at(i, j) * ab[j];
    const Integer& d = snf_.diag[i];
    if (d > 0) {
      v %= d;
      if (v < 0) v += d;
    }
    inv.coords[i] = std::move(v);
  }
  return inv;
}

ClassInvariant class_invariant(const Word& w, const FreeEndomorphism& phi) {
  return TwistedInvariantMap(phi).of(w);
}

FreeWitness twisted_image_witness(const FreeEndomorphism& phi, const Word& x) {
  Word gamma = inverse(x);
  Word image = multiply(multiply(gamma, x), inverse(phi.apply(gamma)));
  if (!(image == phi.apply(x))) throw Error("internal: image witness failed");
  return {gamma, true};
}

FiniteWitness twisted_image_witness(const FiniteEndomorphism& phi, int x) {
  const FiniteGroup& g = phi.group();
  int gamma = g.inv(x);
  int image = g.mul(g.mul(gamma, x), g.inv(phi.apply(gamma)));
  if (image != phi.apply(x)) throw Error("internal: image witness failed");
  return {gamma, true};
}

std::optional<int> twisted_conjugate_finite(const FiniteEndomorphism& phi, int x, int y) {
  const FiniteGroup& g = phi.group();
  if (x < 0 || x >= g.order() || y < 0 || y >= g.order()) {
    throw InputError("element out of range");
  }
  for (int gamma = 0; gamma < g.order(); ++gamma) {
    if (g.mul(g.mul(gamma, x), g.inv(phi.apply(gamma))) == y) return gamma;
  }
  return std::nullopt;
}

TwistedPartition reidemeister_finite(const FiniteEndomorphism& phi) {
  const FiniteGroup& g = phi.group();
  int n = g.order();
  TwistedPartition part;
  part.class_of.assign(n, -1);
  for (int x = 0; x < n; ++x) {
    if (part.class_of[x] >= 0) continue;
    int id = static_cast<int>(part.classes.size());
    std::vector<int> cls;
    // The whole class is one orbit sweep: gamma x phi(gamma)^-1 over gamma.
    for (int gamma = 0; gamma < n; ++gamma) {
      int y = g.mul(g.mul(gamma, x), g.inv(phi.apply(gamma)));
      if (part.class_of[y] < 0) {
        part.class_of[y] = id;
        cls.push_back(y);
      }
    }
    std::sort(cls.begin(), cls.end());
    part.classes.push_back(std::move(cls));
  }
  return part;
}

ReidemeisterCount reidemeister_abelian(const IntegerMatrix& action) {
  if (action.rows() != action.cols()) throw InputError("abelianized action must be square");
  SmithForm snf = smith_normal_form(IntegerMatrix::identity(action.rows()) - action);
  Integer product = 1;
  for (const Integer& d : snf.diag) {
    if (d == 0) return ReidemeisterCount::infinite_count();
    product *= d;
  }
  return ReidemeisterCount::finite_count(product);
}

FreeConjugacyVerdict twisted_conjugate_free(const Word& x, const Word& y,
                                            const FreeEndomorphism& phi, int radius) {
  if (radius < 0) throw InputError("radius must be >= 0");
  TwistedInvariantMap inv(phi);
  FreeConjugacyVerdict out;
  out.radius_searched = radius;
  out.invariant_x = inv.of(x);
  out.invariant_y = inv.of(y);
  if (!(out.invariant_x == out.invariant_y)) {
    out.verdict = Verdict::No;
    out.certificate = NoCertificate::InvariantMismatch;
    return out;
  }
  if (phi.is_identity()) {
    // Twisted conjugacy collapses to ordinary conjugacy, which is decidable
    // exactly; the verdict is definite at any radius.
    ConjugacyVerdict exact = free_conjugate(x, y);
    if (exact.conjugate) {
      out.verdict = Verdict::Yes;
      out.witness = exact.witness;
    } else {
      out.verdict = Verdict::No;
      out.certificate = NoCertificate::ExactFreeConjugacy;
    }
    return out;
  }
  bool found = false;
  for_each_in_ball(phi.alphabet(), radius, [&](const Word& gamma) {
    if (found) return;
    Word cand = multiply(multiply(gamma, x), inverse(phi.apply(gamma)));
    if (cand == y) {
      out.verdict = Verdict::Yes;
      out.witness = gamma;
      found = true;
    }
  });
  if (found) return out;
  out.verdict = Verdict::Unknown;
  return out;
}

namespace {

long long isogredience_class_count(const FiniteEndomorphism& alpha) {
  const FiniteGroup& g = alpha.group();
  int n = g.order();
  // Distinct automorphism tables among beta_m = i_m . alpha.
  std::map<std::vector<int>, int> table_id;
  std::vector<std::vector<int>> tables;
  for (int m = 0; m < n; ++m) {
    std::vector<int> beta(n);
    for (int x = 0; x < n; ++x) beta[x] = g.conj(m, alpha.apply(x));
    if (!table_id.count(beta)) {
      table_id.emplace(beta, static_cast<int>(tables.size()));
      tables.push_back(beta);
    }
  }
  // Merge tables under beta ~ i_h beta i_h^-1, tested exhaustively.
  int k = static_cast<int>(tables.size());
  std::vector<int> cls(k, -1);
  int classes = 0;
  for (int t = 0; t < k; ++t) {
    if (cls[t] >= 0) continue;
    int id = classes++;
    cls[t] = id;
    for (int h = 0; h < n; ++h) {
      std::vector<int> conj(n);
      for (int x = 0; x < n; ++x) conj[x] = g.conj(h, tables[t][g.conj(g.inv(h), x)]);
      auto it = table_id.find(conj);
      if (it == table_id.end()) throw Error("internal: conjugated representative left the coset");
      if (cls[it->second] < 0) cls[it->second] = id;
    }
  }
  // One sweep suffices: conjugation by h is a group action on tables.
  return classes;
}

long long twisted_mod_center_count(const FiniteEndomorphism& alpha) {
  const FiniteGroup& g = alpha.group();
  int n = g.order();
  std::vector<int> zs = center(g);
  std::vector<int> cls(n, -1);
  long long classes = 0;
  for (int x = 0; x < n; ++x) {
    if (cls[x] >= 0) continue;
    long long id = classes++;
    std::vector<int> stack{x};
    cls[x] = static_cast<int>(id);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int gamma = 0; gamma < n; ++gamma) {
        int v = g.mul(g.mul(gamma, u), g.inv(alpha.apply(gamma)));
        if (cls[v] < 0) {
          cls[v] = static_cast<int>(id);
          stack.push_back(v);
        }
      }
      for (int c : zs) {
        int v = g.mul(u, c);
        if (cls[v] < 0) {
          cls[v] = static_cast<int>(id);
          stack.push_back(v);
        }
      }
    }
  }
  return classes;
}

}  // namespace

IsogredienceReport isogredience_correspondence(const FiniteEndomorphism& alpha) {
  if (!alpha.is_bijective()) throw MathError("isogredience requires an automorphism");
  IsogredienceReport report;
  report.isogredience_classes = isogredience_class_count(alpha);
  report.twisted_mod_center_classes = twisted_mod_center_count(alpha);
  report.counts_equal = report.isogredience_classes == report.twisted_mod_center_classes;
  return report;
}

NilpotentReductionReport verify_nilpotent_reduction(const FiniteEndomorphism& phi) {
  NilpotentReductionReport report;
  report.radical = nilpotent_radical(phi);
  FiniteQuotient quotient = quotient_endomorphism(phi, report.radical);
  report.quotient_order = quotient.group.order();
  report.r_original = reidemeister_finite(phi).count();
  report.r_quotient = reidemeister_finite(quotient.endo).count();
  report.equal = report.r_original == report.r_quotient;
  report.induced_injective = quotient.endo.is_injective();
  return report;
}

}  // namespace reidem
