#pragma once

#include <optional>

#include "reidem/twisted.hpp"

namespace reidem {

// Minimal cyclically reduced length of gamma * w * phi(gamma)^-1 over all
// conjugators with |gamma| <= radius. An upper bound on the class norm under
// the word-length proxy; non-increasing in radius.
int norm_proxy(const Word& w, const FreeEndomorphism& phi, int radius);

struct CountSample {
  double x = 0;
  long long count = 0;
  bool lower_bound_only = false;
  bool operator==(const CountSample&) const = default;
};

// Tw(x) under the word-length norm proxy for integer thresholds x = 0..x_max.
// Words of length <= enum_radius are partitioned by chains of one-letter
// twisted conjugations of length <= conj_radius (equivalently, conjugators of
// that length); unmerged classes may overcount, which sets lower_bound_only
// unless the partition is certifiably exact.
std::vector<CountSample> tw_count(const FreeEndomorphism& phi, int x_max, int enum_radius,
                                  int conj_radius, int threads = 1);

struct FitSample {
  double x = 0;
  double count = 0;
};

std::vector<FitSample> to_fit_samples(const std::vector<CountSample>& samples);

struct AsymptoticFit {
  static constexpr double model_exponent = 1.5;  // the fixed x^(-3/2) factor
  double h = 0;
  double c0 = 0;
  std::optional<double> c2;  // first even correction term, when requested
  double residual = 0;       // root mean square in log space
  int dropped_zero_count = 0;
  bool h_was_fixed = false;
};

// Least squares for count ~ C0 * e^(h x) / x^(3/2) in log space: fixed-h
// intercept fit when h_fixed is given, slope+intercept fit otherwise. Zero
// counts are dropped (and reported). With fit_correction, refines (C0, C2)
// for count ~ (C0 + C2/x) * e^(h x) / x^(3/2) by relative-error weighted
// least squares.
AsymptoticFit fit_asymptotic(const std::vector<FitSample>& samples,
                             std::optional<double> h_fixed = std::nullopt,
                             bool fit_correction = false);

// count = round(C0 * e^(h x) / x^(3/2)), half away from zero.
std::vector<CountSample> generate_synthetic(double h, double c0, const std::vector<double>& xs);

}  // namespace reidem
