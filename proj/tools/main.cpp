#include <cmath>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "reidem/counting.hpp"
#include "reidem/io.hpp"
#include "reidem/torus.hpp"
#include "reidem/twisted.hpp"
#include "reidem/witness.hpp"

namespace {

using namespace reidem;

struct RunConfig {
  std::string output = "csv";
  unsigned long long seed = 0;  // reserved; every subcommand is deterministic
  int threads = 1;
};

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    long long num = std::stoll(text.substr(0, slash));
    long long den = std::stoll(text.substr(slash + 1));
    if (den == 0) throw InputError("rational with zero denominator");
    return {num, den};
  }
  auto dot = text.find('.');
  if (dot != std::string::npos) {
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    std::size_t frac = text.size() - dot - 1;
    if (frac > 9) throw InputError("too many decimal places in rational");
    long long den = 1;
    for (std::size_t i = 0; i < frac; ++i) den *= 10;
    return {std::stoll(digits), den};
  }
  return {std::stoll(text), 1};
}

std::string format_double(double v) {
  if (v == static_cast<long long>(v)) return std::to_string(static_cast<long long>(v));
  std::ostringstream out;
  out.precision(17);
  out << v;
  return out.str();
}

Json verdict_json(const FreeConjugacyVerdict& v) {
  Json j;
  j["verdict"] = v.verdict == Verdict::Yes ? "yes" : v.verdict == Verdict::No ? "no" : "unknown";
  j["witness"] = v.verdict == Verdict::Yes ? format_word(v.witness) : "";
  j["invariant_x"] = invariant_to_json(v.invariant_x);
  j["invariant_y"] = invariant_to_json(v.invariant_y);
  j["radius"] = v.radius_searched;
  return j;
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_abelian(const std::string& matrix_path) {
  IntegerMatrix m = integer_matrix_from_json(load_json_file(matrix_path));
  if (m.rows() != m.cols()) throw InputError("matrix must be square");
  ReidemeisterCount r = reidemeister_abelian(m);
  SmithForm snf = smith_normal_form(IntegerMatrix::identity(m.rows()) - m);
  Json j;
  j["reidemeister"] = r.infinite ? Json("infinite") : integer_to_json(r.value);
  Json diag = Json::array();
  for (const Integer& d : snf.diag) diag.push_back(integer_to_json(d));
  j["snf_diag"] = diag;
  j["det_i_minus_m"] = integer_to_json(determinant(IntegerMatrix::identity(m.rows()) - m));
  print_json(j);
  return 0;
}

int cmd_finite(const std::string& group_path, const std::string& endo_path, bool reduce_flag) {
  FiniteGroup group = finite_group_from_json(load_json_file(group_path));
  FiniteEndomorphism phi = finite_endomorphism_from_json(load_json_file(endo_path), group);
  TwistedPartition part = reidemeister_finite(phi);
  Json j;
  j["reidemeister"] = part.count();
  j["classes"] = part.classes;
  if (reduce_flag) {
    NilpotentReductionReport rep = verify_nilpotent_reduction(phi);
    Json red;
    red["nilpotent_radical"] = rep.radical;
    red["quotient_order"] = rep.quotient_order;
    red["quotient_reidemeister"] = rep.r_quotient;
    red["equal"] = rep.equal;
    red["induced_injective"] = rep.induced_injective;
    j["reduction"] = red;
  }
  print_json(j);
  return 0;
}

int cmd_free_check(const std::string& endo_path, const std::string& x_text,
                   const std::string& y_text, int radius) {
  FreeEndomorphism phi = free_endomorphism_from_json(load_json_file(endo_path));
  Word x = parse_word(phi.alphabet(), x_text);
  Word y = parse_word(phi.alphabet(), y_text);
  print_json(verdict_json(twisted_conjugate_free(x, y, phi, radius)));
  return 0;
}

int cmd_torus_verify(const std::string& group_path, const std::string& endo_path) {
  FiniteGroup group = finite_group_from_json(load_json_file(group_path));
  FiniteEndomorphism phi = finite_endomorphism_from_json(load_json_file(endo_path), group);
  CosetBijectionReport rep = verify_coset_bijection(phi);
  Json j;
  j["m"] = rep.m;
  j["twisted_count"] = rep.twisted_count;
  j["coset_count"] = rep.coset_count;
  j["bijection_ok"] = rep.bijection_ok;
  print_json(j);
  return 0;
}

int cmd_witnesses(const std::string& endo_path, const std::string& u0_text,
                  const std::string& a_text, const std::string& b_text,
                  std::optional<std::string> c_text, std::optional<std::string> d_text, int k,
                  int n_max, int radius, int p_cap) {
  FreeEndomorphism phi = free_endomorphism_from_json(load_json_file(endo_path));
  const Alphabet& alphabet = phi.alphabet();
  Word u0 = parse_word(alphabet, u0_text);

  Word c, d;
  std::optional<bool> problem_case;
  if (c_text && d_text) {
    c = parse_word(alphabet, *c_text);
    d = parse_word(alphabet, *d_text);
  } else if (!c_text && !d_text) {
    CdChoice choice = choose_cd(u0, phi, parse_word(alphabet, a_text), parse_word(alphabet, b_text),
                                p_cap);
    c = choice.c;
    d = choice.d;
    problem_case = choice.problem_case;
  } else {
    throw InputError("--c and --d must be given together");
  }

  WitnessFamily family = generate_family(u0, c, d, phi, k, n_max);
  Certification cert = certify_family(family, phi, radius);

  Json j;
  j["u0"] = format_word(family.u0);
  j["c"] = format_word(family.c);
  j["d"] = format_word(family.d);
  j["k"] = family.k;
  Json reps = Json::array();
  for (const Word& w : family.reps) reps.push_back(format_word(w));
  j["reps"] = reps;
  Json rows = Json::array();
  for (int i = 0; i < cert.n; ++i) {
    Json row = Json::array();
    for (int jx = 0; jx < cert.n; ++jx) row.push_back(cert_entry_name(cert.at(i, jx)));
    rows.push_back(row);
  }
  j["certificates"] = rows;
  j["certified"] = cert.certified;
  if (problem_case) j["problem_case"] = *problem_case;
  print_json(j);
  return 0;
}

int cmd_count(const RunConfig& cfg, const std::string& endo_path, int x_max, int enum_radius,
              int conj_radius, bool fit_flag, std::optional<double> h_fixed) {
  FreeEndomorphism phi = free_endomorphism_from_json(load_json_file(endo_path));
  std::vector<CountSample> samples = tw_count(phi, x_max, enum_radius, conj_radius, cfg.threads);
  std::optional<AsymptoticFit> fit;
  if (fit_flag) fit = fit_asymptotic(to_fit_samples(samples), h_fixed);

  auto fit_json = [](const AsymptoticFit& f) {
    Json j;
    j["h"] = f.h;
    j["C0"] = f.c0;
    j["residual"] = f.residual;
    j["dropped_zero_count"] = f.dropped_zero_count;
    j["h_fixed"] = f.h_was_fixed;
    return j;
  };

  if (cfg.output == "csv") {
    std::cout << "x,count,lower_bound_only\n";
    for (const CountSample& s : samples) {
      std::cout << format_double(s.x) << "," << s.count << ","
                << (s.lower_bound_only ? "true" : "false") << "\n";
    }
    if (fit) print_json(fit_json(*fit));
  } else {
    Json j;
    Json rows = Json::array();
    for (const CountSample& s : samples) {
      Json row;
      row["x"] = s.x;
      row["count"] = s.count;
      row["lower_bound_only"] = s.lower_bound_only;
      rows.push_back(row);
    }
    j["samples"] = rows;
    if (fit) j["fit"] = fit_json(*fit);
    print_json(j);
  }
  return 0;
}

int cmd_nilpotent(const std::string& endo_path, const std::string& word_text, int cap) {
  FreeEndomorphism phi = free_endomorphism_from_json(load_json_file(endo_path));
  Word w = parse_word(phi.alphabet(), word_text);
  NilpotencyVerdict v = nilpotent_test_free(phi, w, cap);
  Json j;
  j["verdict"] = v.exponent ? "nilpotent" : "not_within_cap";
  if (v.exponent) j["exponent"] = *v.exponent;
  j["steps_completed"] = v.steps_completed;
  j["length_capped"] = v.length_capped;
  j["cap"] = cap;
  print_json(j);
  return 0;
}

int cmd_hyperbolicity(const RunConfig& cfg, const std::string& endo_path, int m,
                      const std::string& lambda_text, int radius) {
  FreeEndomorphism phi = free_endomorphism_from_json(load_json_file(endo_path));
  Rational lambda = parse_rational(lambda_text);
  HyperbolicityReport rep = hyperbolicity_witness(phi, m, lambda, radius, cfg.threads);
  Json j;
  j["holds"] = rep.holds;
  Json violators = Json::array();
  for (const Word& w : rep.violators) violators.push_back(format_word(w));
  j["violators"] = violators;
  j["words_checked"] = rep.words_checked;
  j["m"] = m;
  j["lambda"] = lambda_text;
  j["radius"] = radius;
  print_json(j);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Twisted conjugacy classes, Reidemeister numbers and mapping-torus checks"};
  app.require_subcommand(1);

  RunConfig cfg;
  app.add_option("--output", cfg.output, "Output format for sample tables")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--seed", cfg.seed, "Reserved; runs are fully deterministic");
  app.add_option("--threads", cfg.threads, "Worker threads for scans")->check(CLI::Range(1, 256));

  auto* abelian = app.add_subcommand("abelian", "R of a free-abelian action from its matrix");
  std::string matrix_path;
  abelian->add_option("matrix", matrix_path, "square integer matrix JSON")->required();

  auto* finite = app.add_subcommand("finite", "Twisted class partition of a finite group");
  std::string group_path, endo_path;
  bool reduce_flag = false;
  finite->add_option("group", group_path, "group JSON")->required();
  finite->add_option("endo", endo_path, "endomorphism JSON")->required();
  finite->add_flag("--reduce", reduce_flag, "also reduce by the nilpotent radical");

  auto* free_check = app.add_subcommand("free-check", "Twisted conjugacy in a free group");
  std::string fc_endo, fc_x, fc_y;
  int fc_radius = 4;
  free_check->add_option("endo", fc_endo, "endomorphism JSON")->required();
  free_check->add_option("-x", fc_x, "first word")->required();
  free_check->add_option("-y", fc_y, "second word")->required();
  free_check->add_option("--radius", fc_radius, "conjugator search radius");

  auto* torus = app.add_subcommand("torus-verify", "Coset conjugacy model of a finite torus");
  std::string tv_group, tv_endo;
  torus->add_option("group", tv_group, "group JSON")->required();
  torus->add_option("endo", tv_endo, "automorphism JSON")->required();

  auto* witnesses = app.add_subcommand("witnesses", "Coset witness family with certificates");
  std::string w_endo, w_u0 = "", w_a = "a", w_b = "b";
  std::optional<std::string> w_c, w_d;
  int w_k = 1, w_n_max = 20, w_radius = 2, w_p_cap = 8;
  witnesses->add_option("endo", w_endo, "automorphism JSON")->required();
  witnesses->add_option("--u0", w_u0, "coset base point word");
  witnesses->add_option("--a", w_a, "first candidate letter word");
  witnesses->add_option("--b", w_b, "second candidate letter word");
  witnesses->add_option("--c", w_c, "explicit c (skips selection)");
  witnesses->add_option("--d", w_d, "explicit d (skips selection)");
  witnesses->add_option("--k", w_k, "padding exponent");
  witnesses->add_option("--n-max", w_n_max, "largest family index");
  witnesses->add_option("--radius", w_radius, "certification search radius");
  witnesses->add_option("--p-cap", w_p_cap, "inversion trigger search cap");

  auto* count = app.add_subcommand("count", "Twisted class counting function and fit");
  count->set_help_flag("--help", "print help");  // frees -h for the rate flag below
  std::string cnt_endo;
  int cnt_x_max = 4, cnt_enum = 6, cnt_conj = 3;
  bool cnt_fit = false;
  std::optional<double> cnt_h;
  count->add_option("endo", cnt_endo, "endomorphism JSON")->required();
  count->add_option("--x-max", cnt_x_max, "largest integer threshold");
  count->add_option("--enum-radius", cnt_enum, "word enumeration radius");
  count->add_option("--conj-radius", cnt_conj, "merge chain length bound");
  count->add_flag("--fit", cnt_fit, "fit the asymptotic shape to the samples");
  count->add_option("--h", cnt_h, "fix the exponential rate during the fit");

  auto* nilpotent = app.add_subcommand("nilpotent", "Semidecide nilpotency of a word under an endomorphism");
  std::string n_endo, n_word;
  int n_cap = 64;
  nilpotent->add_option("endo", n_endo, "endomorphism JSON")->required();
  nilpotent->add_option("-w", n_word, "word to iterate")->required();
  nilpotent->add_option("--cap", n_cap, "iteration cap");

  auto* hyper = app.add_subcommand("hyperbolicity", "Bounded-radius hyperbolicity evidence");
  std::string h_endo, h_lambda = "2";
  int h_m = 1, h_radius = 4;
  hyper->add_option("endo", h_endo, "automorphism JSON")->required();
  hyper->add_option("--m", h_m, "power of the automorphism")->required();
  hyper->add_option("--lambda", h_lambda, "expansion factor, rational like 3/2")->required();
  hyper->add_option("--radius", h_radius, "ball radius to scan");

  // Global flags may appear before or after the subcommand name.
  for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (abelian->parsed()) return cmd_abelian(matrix_path);
    if (finite->parsed()) return cmd_finite(group_path, endo_path, reduce_flag);
    if (free_check->parsed()) return cmd_free_check(fc_endo, fc_x, fc_y, fc_radius);
    if (torus->parsed()) return cmd_torus_verify(tv_group, tv_endo);
    if (witnesses->parsed()) {
      return cmd_witnesses(w_endo, w_u0, w_a, w_b, w_c, w_d, w_k, w_n_max, w_radius, w_p_cap);
    }
    if (count->parsed()) return cmd_count(cfg, cnt_endo, cnt_x_max, cnt_enum, cnt_conj, cnt_fit, cnt_h);
    if (nilpotent->parsed()) return cmd_nilpotent(n_endo, n_word, n_cap);
    if (hyper->parsed()) return cmd_hyperbolicity(cfg, h_endo, h_m, h_lambda, h_radius);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const MathError& e) {
    std::cerr << "precondition error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
