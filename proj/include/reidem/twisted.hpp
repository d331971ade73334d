#pragma once

#include <optional>
#include <vector>

#include "reidem/endo.hpp"
#include "reidem/integer_matrix.hpp"

namespace reidem {

// Number of twisted conjugacy classes; INFINITE is a first-class value,
// never a sentinel integer.
struct ReidemeisterCount {
  bool infinite = false;
  Integer value = 0;

  static ReidemeisterCount finite_count(Integer v) { return {false, std::move(v)}; }
  static ReidemeisterCount infinite_count() { return {true, 0}; }
  bool operator==(const ReidemeisterCount&) const = default;
};

// Signed generator counts of a word.
std::vector<Integer> abelianization(const Word& w, int rank);

// Image of a word in coker(I - M_phi), in Smith coordinates: coordinate i is
// reduced mod d_i when d_i > 0 and kept as an unbounded integer when d_i = 0.
// Constant on twisted conjugacy classes; a mismatch certifies distinctness.
struct ClassInvariant {
  std::vector<Integer> coords;
  std::vector<Integer> moduli;
  bool operator==(const ClassInvariant&) const = default;
};

// Precomputes the Smith form of I - M_phi once for repeated invariant use.
class TwistedInvariantMap {
 public:
  explicit TwistedInvariantMap(const FreeEndomorphism& phi);
  ClassInvariant of(const Word& w) const;
  const SmithForm& smith() const { return snf_; }

 private:
  int rank_;
  SmithForm snf_;
};

ClassInvariant class_invariant(const Word& w, const FreeEndomorphism& phi);

// gamma = x^-1 always certifies x ~ phi(x).
struct FreeWitness {
  Word gamma;
  bool certified = false;
};
FreeWitness twisted_image_witness(const FreeEndomorphism& phi, const Word& x);

struct FiniteWitness {
  int gamma = -1;
  bool certified = false;
};
FiniteWitness twisted_image_witness(const FiniteEndomorphism& phi, int x);

// Exhaustive over all conjugators; the least witness index on success.
std::optional<int> twisted_conjugate_finite(const FiniteEndomorphism& phi, int x, int y);

struct TwistedPartition {
  std::vector<std::vector<int>> classes;  // each sorted; ordered by least element
  std::vector<int> class_of;
  long long count() const { return static_cast<long long>(classes.size()); }
};
TwistedPartition reidemeister_finite(const FiniteEndomorphism& phi);

// R of an endomorphism of Z^r with abelianized action M: infinite iff
// det(I - M) = 0 (eigenvalue 1), otherwise the order of coker(I - M).
ReidemeisterCount reidemeister_abelian(const IntegerMatrix& action);

enum class Verdict { Yes, No, Unknown };

enum class NoCertificate {
  None,
  InvariantMismatch,   // cokernel invariants differ
  ExactFreeConjugacy,  // phi = id and the cyclic cores are not rotations
};

struct FreeConjugacyVerdict {
  Verdict verdict = Verdict::Unknown;
  Word witness;  // y = witness * x * phi(witness)^-1 when verdict is Yes
  NoCertificate certificate = NoCertificate::None;
  int radius_searched = 0;
  ClassInvariant invariant_x, invariant_y;
};

// Three-valued by design: Yes with a re-verified witness, No with a
// certificate, Unknown with the exhausted radius. Conjugators are searched
// breadth-first by length, lexicographically within a length.
FreeConjugacyVerdict twisted_conjugate_free(const Word& x, const Word& y,
                                            const FreeEndomorphism& phi, int radius);

struct IsogredienceReport {
  long long isogredience_classes = 0;
  long long twisted_mod_center_classes = 0;
  bool counts_equal = false;
};

// Groups the representatives i_n . alpha by exhaustive map conjugation, and
// independently partitions G by twisted conjugacy plus center translation;
// the two class counts must agree.
IsogredienceReport isogredience_correspondence(const FiniteEndomorphism& alpha);

struct NilpotentReductionReport {
  long long r_original = 0;
  long long r_quotient = 0;
  bool equal = false;
  bool induced_injective = false;
  std::vector<int> radical;
  int quotient_order = 0;
};

// R(phi) must equal R of the induced map on G / nilpotent radical.
NilpotentReductionReport verify_nilpotent_reduction(const FiniteEndomorphism& phi);

}  // namespace reidem
