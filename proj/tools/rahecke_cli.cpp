// rahecke: command-line front end.  Every subcommand prints one JSON document
// (keys sorted) to stdout or --out.  Exit codes: 0 ok, 1 bad input, 2 internal
// failure or a failing acceptance report.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "rahecke/acceptance.hpp"
#include "rahecke/ball.hpp"
#include "rahecke/coxeter.hpp"
#include "rahecke/growth.hpp"
#include "rahecke/hecke.hpp"
#include "rahecke/operator.hpp"
#include "rahecke/verify.hpp"

using namespace rahecke;
using nlohmann::json;

namespace {

struct RunConfig {
  std::string diagram_path;
  std::string q = "all=1";
  std::string mode = "exact";
  std::string word;
  std::string left, right, element;
  std::string epsilon;
  std::string suite;
  std::string sampling = "signed";
  std::string out;
  int radius = 6;
  int cutoff = 4;
  int length = 3;
  int power = 1;
  int trials = 20;
  int terms = 12;
  long bits = 64;
  std::uint64_t seed = 0;
  bool list_elements = false;
};

CoxeterDiagram load_diagram(const std::string& path) {
  if (path.empty()) throw ValidationError("--diagram is required");
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read diagram file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_diagram(ss.str());
}

template <class S>
AlgebraPtr<S> load_algebra(const CoxeterDiagram& d, const RunConfig& cfg) {
  return HeckeAlgebra<S>::make(d, MultiParameter::parse(d, cfg.q));
}

Elem load_word(const CoxeterDiagram& d, const std::string& word) {
  if (word.empty()) throw ValidationError("--word is required");
  return parse_elem(d, word);
}

json cmd_classify(const RunConfig& cfg) {
  auto d = load_diagram(cfg.diagram_path);
  auto q = MultiParameter::parse(d, cfg.q);
  json j = verdict_json(d, classify_simplicity(d, q, cfg.bits));
  j["diagram"] = d.to_json();
  j["q"] = q.to_json(d);
  return j;
}

json cmd_growth(const RunConfig& cfg) {
  auto d = load_diagram(cfg.diagram_path);
  auto q = MultiParameter::parse(d, cfg.q);
  json j = growth_json(d, q, cfg.bits);
  json series = json::array();
  for (const auto& a : growth_series(d, q, cfg.terms)) series.push_back(to_string(a));
  j["series"] = series;
  return j;
}

json cmd_nf(const RunConfig& cfg) {
  auto d = load_diagram(cfg.diagram_path);
  return format_elem(d, load_word(d, cfg.word));
}

template <class S>
json mul_in(const CoxeterDiagram& d, const RunConfig& cfg) {
  auto alg = load_algebra<S>(d, cfg);
  auto a = parse_element(alg, cfg.left);
  auto b = parse_element(alg, cfg.right);
  return {{"product", element_json(mul(a, b))}, {"mode", cfg.mode}};
}

json cmd_mul(const RunConfig& cfg) {
  auto d = load_diagram(cfg.diagram_path);
  if (cfg.left.empty() || cfg.right.empty()) throw ValidationError("mul needs --left and --right");
  return cfg.mode == "float" ? mul_in<double>(d, cfg) : mul_in<Rational>(d, cfg);
}

json cmd_ball(const RunConfig& cfg) {
  auto d = load_diagram(cfg.diagram_path);
  Ball ball(d, cfg.radius);
  json j;
  j["radius"] = cfg.radius;
  j["size"] = ball.size();
  j["sphere_sizes"] = ball.sphere_sizes();
  if (cfg.list_elements) {
    json elems = json::array();
    for (const auto& w : ball.elems()) elems.push_back(format_elem(d, w));
    j["elements"] = elems;
  }
  return j;
}

json cmd_char(const RunConfig& cfg) {
  auto d = load_diagram(cfg.diagram_path);
  auto alg = load_algebra<Rational>(d, cfg);
  json j;
  json bounded = json::array();
  for (const auto& e : character_list(d, alg->param())) bounded.push_back(e.str());
  j["bounded_characters"] = bounded;
  if (!cfg.epsilon.empty()) {
    auto eps = SignPattern::parse(cfg.epsilon, d.rank());
    j["epsilon"] = eps.str();
    if (!cfg.element.empty()) j["value"] = to_string(char_value(eps, parse_element(alg, cfg.element)));
  }
  return j;
}

json cmd_eproj(const RunConfig& cfg) {
  auto d = load_diagram(cfg.diagram_path);
  auto alg = load_algebra<Rational>(d, cfg);
  auto eps = cfg.epsilon.empty() ? SignPattern::all_plus(d.rank()) : SignPattern::parse(cfg.epsilon, d.rank());
  auto e = central_projection_partial(alg, eps, cfg.cutoff);
  auto diff = mul(e, e) - e;
  return {{"epsilon", eps.str()},
          {"cutoff", cfg.cutoff},
          {"element", element_json(e)},
          {"trace", to_string(trace(e))},
          {"idempotent_residual_sq", to_string(l2_norm_sq(diff))}};
}

json verify_suite(const RunConfig& cfg) {
  auto d = load_diagram(cfg.diagram_path);
  json j;
  j["suite"] = cfg.suite;
  j["radius"] = cfg.radius;
  if (cfg.suite == "action") {
    j["action"] = action_suite(make_ball(d, cfg.radius), cfg.length).to_json();
    j["projection_identities"] = projection_suite(make_ball(d, cfg.radius), load_algebra<Rational>(d, cfg), cfg.length).to_json();
    j["pass"] = j["action"]["pass"].get<bool>() && j["projection_identities"]["pass"].get<bool>();
  } else if (cfg.suite == "cliq") {
    auto ball = make_ball(d, cfg.radius);
    auto alg = load_algebra<Rational>(d, cfg);
    json cases = json::array();
    double worst = 0;
    for (const Elem& w : elements_up_to(*ball, cfg.length)) {
      double r = verify_cliq_identity(ball, alg, w);
      worst = std::max(worst, r);
      cases.push_back({{"w", format_elem(d, w)}, {"residual", r}});
    }
    j["cases"] = cases;
    j["max_residual"] = worst;
    j["pass"] = worst == 0;
  } else if (cfg.suite == "corollary") {
    auto r = verify_corollary_split(make_ball(d, cfg.radius), load_algebra<Rational>(d, cfg), load_word(d, cfg.word),
                                    cfg.power);
    j["g"] = format_elem(d, load_word(d, cfg.word));
    j["l"] = cfg.power;
    j["residual"] = r.residual;
    j["x_terms"] = r.x_terms;
    j["exactness_radius"] = r.exactness_radius;
    j["pass"] = r.residual == 0;
  } else if (cfg.suite == "positivity") {
    auto ball = make_ball(d, cfg.radius);
    auto alg = load_algebra<Rational>(d, cfg);
    std::vector<Elem> ws;
    if (cfg.word.empty()) {
      for (const Elem& w : elements_up_to(*ball, cfg.radius / 2))
        if (!w.is_identity()) ws.push_back(w);
    } else {
      ws.push_back(load_word(d, cfg.word));
    }
    json cases = json::array();
    bool pass = true;
    for (const Elem& w : ws) {
      auto win = positivity_window(ball, alg, w);
      pass = pass && win.within && win.exact_within.value_or(true);
      cases.push_back({{"w", format_elem(d, w)},
                       {"lo", win.lo},
                       {"hi", win.hi},
                       {"bound", {to_string(win.bound_lo), to_string(win.bound_hi)}},
                       {"within", win.within},
                       {"exact_within", win.exact_within.value_or(false)},
                       {"dimension", win.dimension}});
    }
    j["cases"] = cases;
    j["pass"] = pass;
  } else if (cfg.suite == "haagerup") {
    if (cfg.sampling != "signed" && cfg.sampling != "nonnegative")
      throw ValidationError("--sampling must be 'signed' or 'nonnegative'");
    auto mode = cfg.sampling == "signed" ? Sampling::Signed : Sampling::Nonnegative;
    auto ball = make_ball(d, cfg.radius);
    auto alg = load_algebra<double>(d, cfg);
    json rows = json::array();
    double c = 0;
    for (int l = 1; l <= cfg.length; ++l) {
      auto r = haagerup_ratio(ball, alg, l, cfg.trials, cfg.seed, mode);
      c = std::max(c, r.max_ratio);
      rows.push_back(r.to_json());
    }
    j["per_l"] = rows;
    j["fitted_C"] = c;
    j["sampling"] = cfg.sampling;
    j["seed"] = cfg.seed;
  } else if (cfg.suite == "qop") {
    auto q = MultiParameter::parse(d, cfg.q);
    for (Gen s = 1; s < d.rank(); ++s)
      if (q.q(s) != q.q(0)) throw ValidationError("the qop suite needs a single parameter value (use all=v)");
    auto ball = make_ball(d, cfg.radius);
    Elem u = cfg.word.empty() ? Elem() : load_word(d, cfg.word);
    auto r = q_operator(ball, u, q.q(0), cfg.cutoff);
    json diag = json::array();
    for (std::size_t v = 0; v < ball->size(); ++v) {
      Rational x = r.op.entry(v, v);
      if (x != 0) diag.push_back({format_elem(d, ball->elem(v)), to_string(x)});
    }
    j["u"] = format_elem(d, u);
    j["cutoff"] = cfg.cutoff;
    j["kappa_constant"] = r.kappa_constant;
    j["tail_bound"] = r.tail_bound;
    j["diagonal"] = diag;
  } else {
    throw ValidationError("unknown suite '" + cfg.suite + "'");
  }
  return j;
}

json cmd_report(const RunConfig& cfg, bool& all_pass) {
  json rows = json::array();
  all_pass = true;
  for (const auto& c : run_acceptance(cfg.seed, [](const Criterion& c) {
         std::fprintf(stderr, "[%s] %d %s\n", c.pass ? "PASS" : "FAIL", c.id, c.title.c_str());
       })) {
    rows.push_back(c.to_json());
    all_pass = all_pass && c.pass;
  }
  return {{"criteria", rows}, {"pass", all_pass}, {"seed", cfg.seed}};
}

void emit(const json& j, const std::string& out) {
  std::string text = j.dump(2) + "\n";
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) throw ValidationError("cannot write '" + out + "'");
  f << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Right-angled Hecke algebras: simplicity classifier and identity checks"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--out", cfg.out, "write the JSON report to this file");

  auto diagram = [&](CLI::App* sub) {
    sub->add_option("--diagram", cfg.diagram_path, "diagram JSON file")->required();
  };
  auto params = [&](CLI::App* sub) { sub->add_option("--q", cfg.q, "parameters, e.g. a=1/4,b=0.6 or all=1/4"); };

  auto* classify = app.add_subcommand("classify", "decide simplicity at a parameter");
  diagram(classify);
  params(classify);
  classify->add_option("--bits", cfg.bits, "dyadic precision of root isolation")->check(CLI::Range(8L, 4096L));

  auto* growth = app.add_subcommand("growth", "growth series, pole and rho");
  diagram(growth);
  params(growth);
  growth->add_option("--terms", cfg.terms, "number of series coefficients")->check(CLI::Range(0, 10000));
  growth->add_option("--bits", cfg.bits, "dyadic precision of root isolation")->check(CLI::Range(8L, 4096L));

  auto* nf = app.add_subcommand("nf", "normal form of a word");
  diagram(nf);
  nf->add_option("--word", cfg.word)->required();

  auto* mulc = app.add_subcommand("mul", "product of two Hecke elements");
  diagram(mulc);
  params(mulc);
  mulc->add_option("--left", cfg.left, "element literal, e.g. \"1*T(e) - 3/2*T(a)\"")->required();
  mulc->add_option("--right", cfg.right)->required();
  mulc->add_option("--mode", cfg.mode)->check(CLI::IsMember({"exact", "float"}));

  auto* ballc = app.add_subcommand("ball", "sphere sizes of a word-length ball");
  diagram(ballc);
  ballc->add_option("--radius", cfg.radius)->check(CLI::NonNegativeNumber);
  ballc->add_flag("--elements", cfg.list_elements, "list the elements");

  auto* charc = app.add_subcommand("char", "bounded characters and character values");
  diagram(charc);
  params(charc);
  charc->add_option("--epsilon", cfg.epsilon, "sign pattern, e.g. +-+");
  charc->add_option("--element", cfg.element, "element literal to evaluate");

  auto* eproj = app.add_subcommand("eproj", "partial sum of a central projection");
  diagram(eproj);
  params(eproj);
  eproj->add_option("--epsilon", cfg.epsilon, "sign pattern, default all +");
  eproj->add_option("--cutoff", cfg.cutoff)->check(CLI::NonNegativeNumber);

  auto* verify = app.add_subcommand("verify", "operator identity suites on a truncated ball");
  diagram(verify);
  params(verify);
  verify->add_option("--suite", cfg.suite)
      ->required()
      ->check(CLI::IsMember({"action", "cliq", "corollary", "positivity", "haagerup", "qop"}));
  verify->add_option("--radius", cfg.radius)->check(CLI::NonNegativeNumber);
  verify->add_option("--word", cfg.word, "element: g for corollary, w for positivity, u for qop");
  verify->add_option("--length", cfg.length, "max |w| (action, cliq) or max l (haagerup)")->check(CLI::NonNegativeNumber);
  verify->add_option("--power", cfg.power, "exponent l in the corollary")->check(CLI::PositiveNumber);
  verify->add_option("--cutoff", cfg.cutoff, "partial-sum cutoff for qop")->check(CLI::NonNegativeNumber);
  verify->add_option("--trials", cfg.trials, "samples per sphere (haagerup)")->check(CLI::PositiveNumber);
  verify->add_option("--sampling", cfg.sampling, "signed or nonnegative coefficients (haagerup)");
  verify->add_option("--seed", cfg.seed);

  auto* report = app.add_subcommand("report", "run the acceptance suite");
  report->add_option("--seed", cfg.seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    json j;
    int code = 0;
    if (*classify) j = cmd_classify(cfg);
    else if (*growth) j = cmd_growth(cfg);
    else if (*nf) j = cmd_nf(cfg);
    else if (*mulc) j = cmd_mul(cfg);
    else if (*ballc) j = cmd_ball(cfg);
    else if (*charc) j = cmd_char(cfg);
    else if (*eproj) j = cmd_eproj(cfg);
    else if (*verify) j = verify_suite(cfg);
    else if (*report) {
      bool pass = true;
      j = cmd_report(cfg, pass);
      code = pass ? 0 : 2;
    }
    emit(j, cfg.out);
    return code;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const ResourceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
