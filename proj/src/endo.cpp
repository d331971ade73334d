#include "reidem/endo.hpp"

#include <algorithm>

#include "reidem/parallel.hpp"

namespace reidem {

FiniteEndomorphism::FiniteEndomorphism(FiniteGroup group, std::vector<int> map)
    : group_(std::move(group)), map_(std::move(map)) {
  int n = group_.order();
  if (map_.size() != static_cast<std::size_t>(n)) {
    throw InputError("endomorphism map has wrong length");
  }
  for (int x : map_) {
    if (x < 0 || x >= n) throw InputError("endomorphism map entry out of range");
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (map_[group_.mul(x, y)] != group_.mul(map_[x], map_[y])) {
        throw MathError("map is not a homomorphism: fails at (" + std::to_string(x) + "," +
                        std::to_string(y) + ")");
      }
    }
  }
  if (map_[group_.identity()] != group_.identity()) {
    throw MathError("map does not fix the identity");
  }
}

bool FiniteEndomorphism::is_bijective() const {
  std::vector<bool> hit(group_.order(), false);
  for (int x : map_) {
    if (hit[x]) return false;
    hit[x] = true;
  }
  return true;
}

bool FiniteEndomorphism::is_identity() const {
  for (int x = 0; x < group_.order(); ++x) {
    if (map_[x] != x) return false;
  }
  return true;
}

bool FiniteEndomorphism::is_injective() const { return is_bijective(); }

FiniteEndomorphism FiniteEndomorphism::compose(const FiniteEndomorphism& inner) const {
  if (!(group_ == inner.group_)) throw InputError("group mismatch in composition");
  std::vector<int> out(map_.size());
  for (std::size_t x = 0; x < map_.size(); ++x) out[x] = map_[inner.map_[x]];
  return {group_, std::move(out)};
}

int FiniteEndomorphism::order_as_automorphism() const {
  if (!is_bijective()) throw MathError("endomorphism is not bijective");
  std::vector<int> cur = map_;
  int m = 1;
  auto is_id = [&] {
    for (std::size_t i = 0; i < cur.size(); ++i) {
      if (cur[i] != static_cast<int>(i)) return false;
    }
    return true;
  };
  while (!is_id()) {
    for (int& x : cur) x = map_[x];
    ++m;
    if (m > 1 << 20) throw Error("internal: automorphism order runaway");
  }
  return m;
}

FiniteEndomorphism identity_endomorphism(const FiniteGroup& g) {
  std::vector<int> map(g.order());
  for (int i = 0; i < g.order(); ++i) map[i] = i;
  return {g, std::move(map)};
}

std::vector<int> nilpotent_radical(const FiniteEndomorphism& phi) {
  const FiniteGroup& g = phi.group();
  int n = g.order();
  // Iterate each element until it either dies at the identity or cycles.
  std::vector<int> radical;
  for (int x = 0; x < n; ++x) {
    int cur = x;
    for (int step = 0; step <= n; ++step) {
      if (cur == g.identity()) {
        radical.push_back(x);
        break;
      }
      cur = phi.apply(cur);
    }
  }
  std::vector<bool> in(n, false);
  for (int x : radical) in[x] = true;
  for (int x : radical) {
    for (int h = 0; h < n; ++h) {
      if (!in[g.conj(h, x)]) throw Error("internal: nilpotent radical not normal");
    }
    if (!in[phi.apply(x)]) throw Error("internal: nilpotent radical not phi-invariant");
  }
  for (int x = 0; x < n; ++x) {
    if (in[phi.apply(x)] && !in[x]) throw Error("internal: nilpotent radical not saturated");
  }
  return radical;
}

namespace {

bool is_subgroup(const FiniteGroup& g, const std::vector<bool>& in) {
  if (!in[g.identity()]) return false;
  for (int x = 0; x < g.order(); ++x) {
    if (!in[x]) continue;
    if (!in[g.inv(x)]) return false;
    for (int y = 0; y < g.order(); ++y) {
      if (in[y] && !in[g.mul(x, y)]) return false;
    }
  }
  return true;
}

}  // namespace

FiniteQuotient quotient_endomorphism(const FiniteEndomorphism& phi,
                                     const std::vector<int>& normal_subgroup) {
  const FiniteGroup& g = phi.group();
  int n = g.order();
  std::vector<bool> in(n, false);
  for (int x : normal_subgroup) {
    if (x < 0 || x >= n) throw InputError("subgroup element out of range");
    in[x] = true;
  }
  if (!is_subgroup(g, in)) throw MathError("N is not a subgroup");
  for (int x = 0; x < n; ++x) {
    if (!in[x]) continue;
    for (int h = 0; h < n; ++h) {
      if (!in[g.conj(h, x)]) throw MathError("N is not normal");
    }
    if (!in[phi.apply(x)]) throw MathError("N is not phi-invariant");
  }

  // Cosets get ids in order of their least element.
  std::vector<int> coset_of(n, -1);
  std::vector<int> reps;
  for (int x = 0; x < n; ++x) {
    if (coset_of[x] >= 0) continue;
    int id = static_cast<int>(reps.size());
    reps.push_back(x);
    for (int k = 0; k < n; ++k) {
      if (in[k]) coset_of[g.mul(x, k)] = id;
    }
  }
  int q = static_cast<int>(reps.size());
  std::vector<int> table(static_cast<std::size_t>(q) * q);
  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < q; ++b) table[static_cast<std::size_t>(a) * q + b] = coset_of[g.mul(reps[a], reps[b])];
  }
  std::vector<std::string> names;
  if (!g.names().empty()) {
    for (int r : reps) names.push_back(g.names()[r] + "N");
  }
  FiniteGroup quotient(q, std::move(table), std::move(names));
  std::vector<int> qmap(q);
  for (int a = 0; a < q; ++a) qmap[a] = coset_of[phi.apply(reps[a])];
  FiniteEndomorphism induced(quotient, std::move(qmap));
  return {std::move(quotient), std::move(coset_of), std::move(reps), std::move(induced)};
}

FreeEndomorphism::FreeEndomorphism(Alphabet alphabet, std::vector<Word> images)
    : alphabet_(alphabet), images_(std::move(images)) {
  if (images_.size() != static_cast<std::size_t>(alphabet_.rank())) {
    throw InputError("image count differs from alphabet rank");
  }
  for (const Word& w : images_) {
    if (w.rank() != 0 && w.rank() != alphabet_.rank()) throw InputError("alphabet mismatch");
  }
}

FreeEndomorphism::FreeEndomorphism(Alphabet alphabet, std::vector<Word> images,
                                   std::vector<Word> inverse_images)
    : FreeEndomorphism(alphabet, std::move(images)) {
  if (inverse_images.size() != static_cast<std::size_t>(alphabet_.rank())) {
    throw InputError("inverse image count differs from alphabet rank");
  }
  for (int i = 1; i <= alphabet_.rank(); ++i) {
    Word gen = Word::from_reduced(alphabet_.rank(), {i});
    if (!(apply_letters(inverse_images, apply(gen)) == gen) ||
        !(apply(apply_letters(inverse_images, gen)) == gen)) {
      throw MathError("declared inverse does not invert the endomorphism");
    }
  }
  inverse_images_ = std::move(inverse_images);
}

bool FreeEndomorphism::is_identity() const {
  for (int i = 1; i <= alphabet_.rank(); ++i) {
    const Word& im = images_[i - 1];
    if (im.size() != 1 || im.letters()[0] != i) return false;
  }
  return true;
}

Word FreeEndomorphism::apply_letters(const std::vector<Word>& images, const Word& w) const {
  std::vector<Letter> out;
  for (Letter l : w.letters()) {
    const Word& im = images[(l > 0 ? l : -l) - 1];
    if (l > 0) {
      for (Letter x : im.letters()) {
        if (!out.empty() && out.back() == -x) {
          out.pop_back();
        } else {
          out.push_back(x);
        }
      }
    } else {
      for (auto it = im.letters().rbegin(); it != im.letters().rend(); ++it) {
        Letter x = -*it;
        if (!out.empty() && out.back() == -x) {
          out.pop_back();
        } else {
          out.push_back(x);
        }
      }
    }
  }
  return Word::from_reduced(alphabet_.rank(), std::move(out));
}

Word FreeEndomorphism::apply(const Word& w) const {
  if (w.rank() != 0 && w.rank() != alphabet_.rank()) throw InputError("alphabet mismatch");
  return apply_letters(images_, w);
}

Word FreeEndomorphism::apply_power(const Word& w, long long n) const {
  if (n >= 0) {
    Word cur = w;
    for (long long i = 0; i < n; ++i) cur = apply(cur);
    return cur;
  }
  if (!inverse_images_) throw MathError("negative power of a non-automorphism");
  Word cur = w;
  for (long long i = 0; i < -n; ++i) cur = apply_letters(*inverse_images_, cur);
  return cur;
}

FreeEndomorphism FreeEndomorphism::inverse() const {
  if (!inverse_images_) throw MathError("endomorphism has no declared inverse");
  return {alphabet_, *inverse_images_, images_};
}

FreeEndomorphism FreeEndomorphism::compose(const FreeEndomorphism& inner) const {
  if (!(alphabet_ == inner.alphabet_)) throw InputError("alphabet mismatch in composition");
  std::vector<Word> images;
  images.reserve(images_.size());
  for (const Word& w : inner.images_) images.push_back(apply(w));
  if (inverse_images_ && inner.inverse_images_) {
    std::vector<Word> inv;
    inv.reserve(images_.size());
    for (const Word& w : *inverse_images_) inv.push_back(inner.apply_letters(*inner.inverse_images_, w));
    return {alphabet_, std::move(images), std::move(inv)};
  }
  return {alphabet_, std::move(images)};
}

FreeEndomorphism FreeEndomorphism::pow(int m) const {
  if (m < 0) throw InputError("pow takes m >= 0; use inverse() for negative powers");
  FreeEndomorphism acc = identity_free_endomorphism(alphabet_);
  for (int i = 0; i < m; ++i) acc = compose(acc);
  return acc;
}

IntegerMatrix FreeEndomorphism::abelianization_matrix() const {
  int r = alphabet_.rank();
  IntegerMatrix m(r, r);
  for (int j = 0; j < r; ++j) {
    for (Letter l : images_[j].letters()) {
      int i = (l > 0 ? l : -l) - 1;
      m.at(i, j) += l > 0 ? 1 : -1;
    }
  }
  return m;
}

FreeEndomorphism identity_free_endomorphism(const Alphabet& alphabet) {
  std::vector<Word> images, inv;
  for (int i = 1; i <= alphabet.rank(); ++i) {
    images.push_back(Word::from_reduced(alphabet.rank(), {i}));
    inv.push_back(Word::from_reduced(alphabet.rank(), {i}));
  }
  return {alphabet, std::move(images), std::move(inv)};
}

HyperbolicityReport hyperbolicity_witness(const FreeEndomorphism& phi, int m, Rational lambda,
                                          int radius, int threads) {
  if (!phi.is_automorphism()) throw MathError("hyperbolicity check requires an automorphism");
  if (m < 1) throw InputError("m must be >= 1");
  if (radius < 1) throw InputError("radius must be >= 1");
  if (lambda <= Rational(1)) throw InputError("lambda must be > 1");

  FreeEndomorphism fwd = phi.pow(m);
  FreeEndomorphism bwd = phi.inverse().pow(m);
  std::vector<Word> ball = enumerate_ball(phi.alphabet(), radius);

  long long p = lambda.numerator(), q = lambda.denominator();
  std::vector<std::vector<Word>> found(threads < 1 ? 1 : threads);
  run_chunked(ball.size(), threads, [&](std::size_t chunk, std::size_t lo, std::size_t hi) {
    auto& local = found[chunk];
    for (std::size_t i = lo; i < hi; ++i) {
      const Word& w = ball[i];
      if (w.empty()) continue;
      long long grown = std::max(fwd.apply(w).size(), bwd.apply(w).size());
      if (grown * q < static_cast<long long>(w.size()) * p) {
        if (local.size() < 100) local.push_back(w);
      }
    }
  });

  HyperbolicityReport report;
  report.radius = radius;
  report.words_checked = ball.size() - 1;
  for (const auto& chunk : found) {
    for (const Word& w : chunk) {
      if (report.violators.size() < 100) report.violators.push_back(w);
    }
  }
  report.holds = true;
  for (const auto& chunk : found) {
    if (!chunk.empty()) report.holds = false;
  }
  return report;
}

NilpotencyVerdict nilpotent_test_free(const FreeEndomorphism& phi, const Word& w, int cap,
                                      std::size_t max_letters) {
  if (cap < 1) throw InputError("cap must be >= 1");
  NilpotencyVerdict verdict;
  Word cur = w;
  for (int n = 1; n <= cap; ++n) {
    cur = phi.apply(cur);
    verdict.steps_completed = n;
    if (cur.empty()) {
      verdict.exponent = n;
      return verdict;
    }
    if (cur.letters().size() > max_letters) {
      verdict.length_capped = true;
      return verdict;
    }
  }
  return verdict;
}

}  // namespace reidem
