#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "reidem/errors.hpp"

namespace reidem {

// Signed generator index: +i is the i-th generator (1-based), -i its inverse.
using Letter = int;

constexpr Letter inverse_letter(Letter l) { return -l; }

// Total order on letters used by every deterministic enumeration and
// canonical form in the library: a < A < b < B < c < ...
constexpr int letter_key(Letter l) {
  int idx = l > 0 ? l : -l;
  return 2 * (idx - 1) + (l < 0 ? 1 : 0);
}

class Alphabet {
 public:
  explicit Alphabet(int rank);
  int rank() const { return rank_; }
  bool operator==(const Alphabet&) const = default;

  // Single-letter text names: generator i prints as 'a'+i-1, its inverse as
  // the uppercase letter. Text I/O is only defined for rank <= 26.
  std::string letter_name(Letter l) const;
  Letter letter_from_char(char c) const;

 private:
  int rank_;
};

// A freely reduced word. Immutable value type; the empty word is the
// identity. Equality ignores the alphabet, so identities of different
// alphabets compare equal.
class Word {
 public:
  Word() = default;

  const std::vector<Letter>& letters() const { return letters_; }
  int rank() const { return rank_; }
  int size() const { return static_cast<int>(letters_.size()); }
  bool empty() const { return letters_.empty(); }

  friend bool operator==(const Word& a, const Word& b) {
    return a.letters_ == b.letters_;
  }

  // Trusted constructor: `letters` must already be freely reduced.
  static Word from_reduced(int rank, std::vector<Letter> letters);

 private:
  int rank_ = 0;
  std::vector<Letter> letters_;
};

struct WordHash {
  std::size_t operator()(const Word& w) const {
    std::size_t h = 1469598103934665603ull;
    for (Letter l : w.letters()) {
      h ^= static_cast<std::size_t>(static_cast<unsigned>(l));
      h *= 1099511628211ull;
    }
    return h;
  }
};

// Length-then-lex order (lex by letter_key). Used wherever a deterministic
// word order is promised.
bool word_less(const Word& a, const Word& b);

// Free reduction of an arbitrary letter sequence. Validates letters against
// the alphabet; idempotent.
Word reduce(const Alphabet& alphabet, const std::vector<Letter>& raw);

Word parse_word(const Alphabet& alphabet, const std::string& text);
std::string format_word(const Word& w);

Word multiply(const Word& u, const Word& v);
Word inverse(const Word& u);
Word power(const Word& u, long long k);
// g * u * g^-1
Word conjugated(const Word& g, const Word& u);

// w = conjugator * core * conjugator^-1 with core cyclically reduced.
struct CyclicForm {
  Word core;
  Word conjugator;
};
CyclicForm cyclic_reduce(const Word& w);

// Lexicographically least rotation of the cyclic core; equal for two words
// iff they are conjugate, so it serves as a conjugacy class key.
Word canonical_cyclic(const Word& w);

struct ConjugacyVerdict {
  bool conjugate = false;
  Word witness;  // v = witness * u * witness^-1 when conjugate
};
// Exact conjugacy test in the free group.
ConjugacyVerdict free_conjugate(const Word& u, const Word& v);

// Number of reduced words of length <= radius over `rank` generators.
unsigned long long ball_size(int rank, int radius);

// All reduced words of length <= radius, ordered by length then lex.
std::vector<Word> enumerate_ball(const Alphabet& alphabet, int radius);
void for_each_in_ball(const Alphabet& alphabet, int radius,
                      const std::function<void(const Word&)>& fn);

}  // namespace reidem
