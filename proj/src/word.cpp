#include "reidem/word.hpp"

#include <algorithm>
#include <sstream>

namespace reidem {

Alphabet::Alphabet(int rank) : rank_(rank) {
  if (rank < 1) throw InputError("alphabet rank must be >= 1");
}

std::string Alphabet::letter_name(Letter l) const {
  int idx = l > 0 ? l : -l;
  if (idx < 1 || idx > rank_) throw InputError("letter out of alphabet range");
  if (rank_ > 26) throw InputError("text names are only defined for rank <= 26");
  char c = static_cast<char>((l > 0 ? 'a' : 'A') + idx - 1);
  return std::string(1, c);
}

Letter Alphabet::letter_from_char(char c) const {
  int idx;
  bool inv;
  if (c >= 'a' && c <= 'z') {
    idx = c - 'a' + 1;
    inv = false;
  } else if (c >= 'A' && c <= 'Z') {
    idx = c - 'A' + 1;
    inv = true;
  } else {
    throw InputError(std::string("bad letter '") + c + "'");
  }
  if (idx > rank_) throw InputError(std::string("letter '") + c + "' out of alphabet range");
  return inv ? -idx : idx;
}

Word Word::from_reduced(int rank, std::vector<Letter> letters) {
  Word w;
  w.rank_ = rank;
  w.letters_ = std::move(letters);
  return w;
}

bool word_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  const auto& x = a.letters();
  const auto& y = b.letters();
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] != y[i]) return letter_key(x[i]) < letter_key(y[i]);
  }
  return false;
}

namespace {

void push_reduced(std::vector<Letter>& stack, Letter l) {
  if (!stack.empty() && stack.back() == -l) {
    stack.pop_back();
  } else {
    stack.push_back(l);
  }
}

int common_rank(const Word& u, const Word& v) {
  if (u.rank() == 0) return v.rank();
  if (v.rank() == 0) return u.rank();
  if (u.rank() != v.rank()) throw InputError("alphabet mismatch");
  return u.rank();
}

}  // namespace

Word reduce(const Alphabet& alphabet, const std::vector<Letter>& raw) {
  std::vector<Letter> out;
  out.reserve(raw.size());
  for (Letter l : raw) {
    int idx = l > 0 ? l : -l;
    if (idx < 1 || idx > alphabet.rank()) throw InputError("letter index out of alphabet range");
    push_reduced(out, l);
  }
  return Word::from_reduced(alphabet.rank(), std::move(out));
}

Word parse_word(const Alphabet& alphabet, const std::string& text) {
  std::vector<Letter> raw;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    for (char c : tok) raw.push_back(alphabet.letter_from_char(c));
  }
  return reduce(alphabet, raw);
}

std::string format_word(const Word& w) {
  if (w.empty()) return "";
  Alphabet alphabet(w.rank());
  std::string out;
  for (std::size_t i = 0; i < w.letters().size(); ++i) {
    if (i) out += ' ';
    out += alphabet.letter_name(w.letters()[i]);
  }
  return out;
}

Word multiply(const Word& u, const Word& v) {
  int rank = common_rank(u, v);
  std::vector<Letter> out = u.letters();
  for (Letter l : v.letters()) push_reduced(out, l);
  return Word::from_reduced(rank, std::move(out));
}

Word inverse(const Word& u) {
  std::vector<Letter> out(u.letters().rbegin(), u.letters().rend());
  for (Letter& l : out) l = -l;
  return Word::from_reduced(u.rank(), std::move(out));
}

Word power(const Word& u, long long k) {
  Word base = k < 0 ? inverse(u) : u;
  long long n = k < 0 ? -k : k;
  Word acc = Word::from_reduced(u.rank(), {});
  for (long long i = 0; i < n; ++i) acc = multiply(acc, base);
  return acc;
}

Word conjugated(const Word& g, const Word& u) {
  return multiply(multiply(g, u), inverse(g));
}

CyclicForm cyclic_reduce(const Word& w) {
  const auto& ls = w.letters();
  std::size_t lo = 0, hi = ls.size();
  while (hi - lo >= 2 && ls[lo] == -ls[hi - 1]) {
    ++lo;
    --hi;
  }
  CyclicForm out;
  out.conjugator = Word::from_reduced(w.rank(), {ls.begin(), ls.begin() + lo});
  out.core = Word::from_reduced(w.rank(), {ls.begin() + lo, ls.begin() + hi});
  return out;
}

namespace {

Word rotation(const Word& core, std::size_t r) {
  const auto& ls = core.letters();
  std::vector<Letter> out;
  out.reserve(ls.size());
  out.insert(out.end(), ls.begin() + r, ls.end());
  out.insert(out.end(), ls.begin(), ls.begin() + r);
  return Word::from_reduced(core.rank(), std::move(out));
}

}  // namespace

Word canonical_cyclic(const Word& w) {
  Word core = cyclic_reduce(w).core;
  Word best = core;
  for (std::size_t r = 1; r < core.letters().size(); ++r) {
    Word cand = rotation(core, r);
    if (word_less(cand, best)) best = cand;
  }
  return best;
}

ConjugacyVerdict free_conjugate(const Word& u, const Word& v) {
  common_rank(u, v);
  CyclicForm cu = cyclic_reduce(u);
  CyclicForm cv = cyclic_reduce(v);
  if (cu.core.size() != cv.core.size()) return {};
  std::size_t n = cu.core.letters().size();
  if (n == 0) return {true, Word()};
  for (std::size_t r = 0; r < n; ++r) {
    if (rotation(cu.core, r) == cv.core) {
      // u = p c p^-1, v = q c' q^-1 with c' = rotation of c by prefix s,
      // so v = (q s^-1 p^-1) u (q s^-1 p^-1)^-1.
      Word s = Word::from_reduced(cu.core.rank(),
                                  {cu.core.letters().begin(), cu.core.letters().begin() + r});
      Word gamma = multiply(multiply(cv.conjugator, inverse(s)), inverse(cu.conjugator));
      if (!(conjugated(gamma, u) == v)) throw Error("internal: conjugacy witness failed");
      return {true, gamma};
    }
  }
  return {};
}

unsigned long long ball_size(int rank, int radius) {
  unsigned long long total = 1, sphere = 1;
  for (int k = 1; k <= radius; ++k) {
    sphere *= (k == 1) ? 2ull * rank : 2ull * rank - 1;
    total += sphere;
  }
  return total;
}

void for_each_in_ball(const Alphabet& alphabet, int radius,
                      const std::function<void(const Word&)>& fn) {
  if (radius < 0) throw InputError("radius must be >= 0");
  std::vector<Letter> order;
  for (int i = 1; i <= alphabet.rank(); ++i) {
    order.push_back(i);
    order.push_back(-i);
  }
  std::vector<Word> sphere{Word::from_reduced(alphabet.rank(), {})};
  fn(sphere[0]);
  for (int k = 1; k <= radius; ++k) {
    std::vector<Word> next;
    next.reserve(sphere.size() * 2 * alphabet.rank());
    for (const Word& w : sphere) {
      for (Letter l : order) {
        if (!w.empty() && w.letters().back() == -l) continue;
        std::vector<Letter> ls = w.letters();
        ls.push_back(l);
        next.push_back(Word::from_reduced(alphabet.rank(), std::move(ls)));
      }
    }
    for (const Word& w : next) fn(w);
    sphere = std::move(next);
  }
}

std::vector<Word> enumerate_ball(const Alphabet& alphabet, int radius) {
  std::vector<Word> out;
  out.reserve(ball_size(alphabet.rank(), radius));
  for_each_in_ball(alphabet, radius, [&](const Word& w) { out.push_back(w); });
  return out;
}

}  // namespace reidem
