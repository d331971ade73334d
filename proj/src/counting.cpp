#include "reidem/counting.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>
#include <unordered_set>

#include "reidem/parallel.hpp"

namespace reidem {

int norm_proxy(const Word& w, const FreeEndomorphism& phi, int radius) {
  if (radius < 0) throw InputError("radius must be >= 0");
  int best = cyclic_reduce(w).core.size();
  for_each_in_ball(phi.alphabet(), radius, [&](const Word& gamma) {
    Word moved = multiply(multiply(gamma, w), inverse(phi.apply(gamma)));
    best = std::min(best, cyclic_reduce(moved).core.size());
  });
  return best;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    for (std::size_t i = 0; i < n; ++i) parent[i] = static_cast<int>(i);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

std::vector<CountSample> tw_count(const FreeEndomorphism& phi, int x_max, int enum_radius,
                                  int conj_radius, int threads) {
  if (x_max < 0 || enum_radius < 0 || conj_radius < 0) {
    throw InputError("counting bounds must be >= 0");
  }
  if (enum_radius < x_max) throw InputError("enum_radius must be >= x_max");

  const Alphabet& alphabet = phi.alphabet();
  std::vector<Word> words = enumerate_ball(alphabet, enum_radius);
  std::unordered_map<Word, int, WordHash> index;
  index.reserve(words.size() * 2);
  for (std::size_t i = 0; i < words.size(); ++i) index.emplace(words[i], static_cast<int>(i));

  // One-letter twisted conjugation w -> g w phi(g)^-1; a length-r chain of
  // these is exactly twisted conjugation by a conjugator of length <= r.
  std::vector<Letter> moves;
  std::vector<Word> right_factor;
  for (int i = 1; i <= alphabet.rank(); ++i) {
    for (Letter g : {i, -i}) {
      moves.push_back(g);
      right_factor.push_back(inverse(phi.apply(Word::from_reduced(alphabet.rank(), {g}))));
    }
  }

  struct SourceResult {
    std::vector<std::pair<int, int>> merges;
    std::vector<std::pair<int, int>> norms;  // (source, min cyclic length seen)
  };
  int chunk_count = threads < 1 ? 1 : threads;
  std::vector<SourceResult> results(chunk_count);

  run_chunked(words.size(), threads, [&](std::size_t chunk, std::size_t lo, std::size_t hi) {
    SourceResult& local = results[chunk];
    for (std::size_t s = lo; s < hi; ++s) {
      std::unordered_set<Word, WordHash> visited;
      std::vector<Word> frontier{words[s]};
      visited.insert(words[s]);
      int min_len = cyclic_reduce(words[s]).core.size();
      for (int depth = 0; depth < conj_radius && !frontier.empty(); ++depth) {
        std::vector<Word> next;
        for (const Word& w : frontier) {
          for (std::size_t mi = 0; mi < moves.size(); ++mi) {
            std::vector<Letter> raw;
            raw.reserve(w.letters().size() + right_factor[mi].letters().size() + 1);
            raw.push_back(moves[mi]);
            raw.insert(raw.end(), w.letters().begin(), w.letters().end());
            Word moved = multiply(reduce(alphabet, raw), right_factor[mi]);
            if (visited.insert(moved).second) {
              min_len = std::min(min_len, cyclic_reduce(moved).core.size());
              auto it = index.find(moved);
              if (it != index.end()) local.merges.emplace_back(static_cast<int>(s), it->second);
              next.push_back(std::move(moved));
            }
          }
        }
        frontier = std::move(next);
      }
      local.norms.emplace_back(static_cast<int>(s), min_len);
    }
  });

  UnionFind uf(words.size());
  for (const SourceResult& r : results) {
    for (auto [a, b] : r.merges) uf.unite(a, b);
  }
  std::vector<int> class_norm(words.size(), -1);
  for (const SourceResult& r : results) {
    for (auto [s, len] : r.norms) {
      int root = uf.find(s);
      if (class_norm[root] < 0 || len < class_norm[root]) class_norm[root] = len;
    }
  }

  // Exactness: either the identity-map merge is complete at this radius, or
  // the cokernel invariant separates every pair of unmerged classes.
  bool exact = phi.is_identity() && conj_radius >= enum_radius;
  if (!exact) {
    TwistedInvariantMap inv(phi);
    std::vector<int> roots;
    for (std::size_t i = 0; i < words.size(); ++i) {
      if (uf.find(static_cast<int>(i)) == static_cast<int>(i)) roots.push_back(static_cast<int>(i));
    }
    std::vector<ClassInvariant> class_inv;
    class_inv.reserve(roots.size());
    for (int r : roots) class_inv.push_back(inv.of(words[r]));
    exact = true;
    for (std::size_t i = 0; i < roots.size() && exact; ++i) {
      for (std::size_t j = i + 1; j < roots.size() && exact; ++j) {
        if (class_inv[i] == class_inv[j]) exact = false;
      }
    }
  }

  std::vector<CountSample> samples;
  samples.reserve(x_max + 1);
  for (int x = 0; x <= x_max; ++x) {
    long long count = 0;
    for (std::size_t i = 0; i < words.size(); ++i) {
      if (class_norm[i] >= 0 && class_norm[i] < x) ++count;
    }
    samples.push_back({static_cast<double>(x), count, !exact});
  }
  return samples;
}

std::vector<FitSample> to_fit_samples(const std::vector<CountSample>& samples) {
  std::vector<FitSample> out;
  out.reserve(samples.size());
  for (const CountSample& s : samples) out.push_back({s.x, static_cast<double>(s.count)});
  return out;
}

AsymptoticFit fit_asymptotic(const std::vector<FitSample>& samples, std::optional<double> h_fixed,
                             bool fit_correction) {
  AsymptoticFit fit;
  std::vector<FitSample> kept;
  for (const FitSample& s : samples) {
    if (s.count > 0) {
      if (s.x <= 0) throw InputError("sample thresholds must be positive");
      kept.push_back(s);
    } else {
      ++fit.dropped_zero_count;
    }
  }
  if (kept.size() < 3) throw InputError("need at least 3 samples with positive count");

  std::size_t n = kept.size();
  std::vector<double> ys(n);
  for (std::size_t i = 0; i < n; ++i) {
    ys[i] = std::log(kept[i].count) + AsymptoticFit::model_exponent * std::log(kept[i].x);
  }

  double intercept;
  if (h_fixed) {
    fit.h = *h_fixed;
    fit.h_was_fixed = true;
    double sum = 0;
    for (std::size_t i = 0; i < n; ++i) sum += ys[i] - fit.h * kept[i].x;
    intercept = sum / n;
  } else {
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < n; ++i) {
      mx += kept[i].x;
      my += ys[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
      sxx += (kept[i].x - mx) * (kept[i].x - mx);
      sxy += (kept[i].x - mx) * (ys[i] - my);
    }
    if (sxx == 0) throw InputError("degenerate design matrix: all thresholds equal");
    fit.h = sxy / sxx;
    intercept = my - fit.h * mx;
  }
  fit.c0 = std::exp(intercept);

  auto log_rms = [&](double c0, double c2) {
    double sum = 0;
    for (std::size_t i = 0; i < n; ++i) {
      double level = c0 + c2 / kept[i].x;
      double predicted = std::log(level) + fit.h * kept[i].x;
      double observed = ys[i];
      sum += (observed - predicted) * (observed - predicted);
    }
    return std::sqrt(sum / n);
  };
  fit.residual = log_rms(fit.c0, 0);

  if (fit_correction) {
    // t_i = count_i x_i^(3/2) e^(-h x_i) ~ C0 + C2 / x_i, weighted by 1/t_i
    // so the objective matches relative error.
    double a11 = 0, a12 = 0, a22 = 0, b1 = 0, b2 = 0;
    for (std::size_t i = 0; i < n; ++i) {
      double t = std::exp(ys[i] - fit.h * kept[i].x);
      double w = 1.0 / (t * t);
      double u = 1.0 / kept[i].x;
      a11 += w;
      a12 += w * u;
      a22 += w * u * u;
      b1 += w * t;
      b2 += w * u * t;
    }
    double det = a11 * a22 - a12 * a12;
    if (det != 0) {
      double c0 = (b1 * a22 - b2 * a12) / det;
      double c2 = (a11 * b2 - a12 * b1) / det;
      if (c0 > 0) {
        fit.c0 = c0;
        fit.c2 = c2;
        fit.residual = log_rms(c0, c2);
      }
    }
  }
  return fit;
}

std::vector<CountSample> generate_synthetic(double h, double c0, const std::vector<double>& xs) {
  if (c0 <= 0) throw InputError("C0 must be positive");
  std::vector<CountSample> out;
  out.reserve(xs.size());
  for (double x : xs) {
    if (x <= 0) throw InputError("thresholds must be positive");
    double value = c0 * std::exp(h * x) / std::pow(x, AsymptoticFit::model_exponent);
    out.push_back({x, std::llround(value), false});
  }
  return out;
}

}  // namespace reidem
