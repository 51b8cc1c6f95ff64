#include "sparsecc/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "sparsecc/asymptotics.hpp"
#include "sparsecc/census.hpp"
#include "sparsecc/errors.hpp"
#include "sparsecc/oracle.hpp"
#include "sparsecc/probability.hpp"
#include "sparsecc/simulator.hpp"

namespace sparsecc::cli {

namespace {

using json = nlohmann::ordered_json;

struct Context {
  std::string format = "json";
  bool approx = false;
  int status = kOk;  // exit code for a report that is printed but signals failure
};

json number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return std::strtod(buf, nullptr);
}

json exact(const Context& ctx, const Rational& q) {
  if (!ctx.approx) return to_string(q);
  json j;
  j["exact"] = to_string(q);
  j["approx"] = number(to_double(q));
  return j;
}

json exact_list(const Context& ctx, const std::vector<Rational>& v, std::size_t from = 0) {
  json arr = json::array();
  for (std::size_t i = from; i < v.size(); ++i) arr.push_back(exact(ctx, v[i]));
  return arr;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw invalid_input("not an integer: '" + item + "'");
    }
    if (used != item.size()) throw invalid_input("not an integer: '" + item + "'");
    out.push_back(v);
  }
  return out;
}

std::vector<int> parse_forbidden(const std::string& text) {
  if (text == "none" || text.empty()) return {};
  if (text == "c3") return {3};
  return parse_int_list(text);
}

std::map<std::string, std::string> parse_params(const std::string& text) {
  std::map<std::string, std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0)
      throw invalid_input("parameter '" + item + "' is not key=value");
    out[item.substr(0, eq)] = item.substr(eq + 1);
  }
  return out;
}

double param_double(const std::map<std::string, std::string>& p, const std::string& key) {
  const auto it = p.find(key);
  if (it == p.end()) throw invalid_input("missing parameter '" + key + "'");
  char* end = nullptr;
  const double v = std::strtod(it->second.c_str(), &end);
  if (end == it->second.c_str() || *end != '\0')
    throw invalid_input("parameter '" + key + "' is not a number");
  return v;
}

int param_int(const std::map<std::string, std::string>& p, const std::string& key) {
  const double v = param_double(p, key);
  if (v != std::floor(v) || std::fabs(v) > 1e9)
    throw invalid_input("parameter '" + key + "' must be an integer");
  return static_cast<int>(v);
}

json counts_of(const Context& ctx, const XExpr& e, int order) {
  const Series s = xexpr_eval(e, order);
  json arr = json::array();
  for (int n = 0; n <= order; ++n) arr.push_back(exact(ctx, s.labelled_count(n)));
  return arr;
}

json decomposition_of(const Context& ctx, const XExpr& e) {
  json arr = json::array();
  const auto& terms = e.laurent();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it)
    arr.push_back({{"t", it->first}, {"coeff", exact(ctx, it->second)}});
  return arr;
}

// Flattens a report into (path, scalar) pairs.
void flatten(const json& j, const std::string& path,
             std::vector<std::pair<std::string, std::string>>& rows) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items())
      flatten(value, path.empty() ? key : path + "." + key, rows);
  } else if (j.is_array()) {
    if (j.empty()) rows.emplace_back(path, "");
    for (std::size_t i = 0; i < j.size(); ++i)
      flatten(j[i], path + "[" + std::to_string(i) + "]", rows);
  } else if (j.is_string()) {
    rows.emplace_back(path, j.get<std::string>());
  } else {
    rows.emplace_back(path, j.dump());
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

void render(const Context& ctx, const json& report, std::ostream& out) {
  if (ctx.format == "json") {
    out << report.dump(2) << '\n';
    return;
  }
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(report, "", rows);
  if (ctx.format == "csv") {
    out << "key,value\n";
    for (const auto& [k, v] : rows) out << csv_field(k) << ',' << csv_field(v) << '\n';
  } else {
    for (const auto& [k, v] : rows) out << k << " = " << v << '\n';
  }
}

json echo_parameters(const CLI::App& sub) {
  json params = json::object();
  for (const CLI::Option* opt : sub.get_options()) {
    if (opt->get_name() == "--help" || opt->count() == 0) continue;
    std::string name = opt->get_name();
    while (!name.empty() && name.front() == '-') name.erase(name.begin());
    const auto& res = opt->results();
    if (opt->get_expected_max() == 0)
      params[name] = true;
    else if (res.size() == 1)
      params[name] = res.front();
    else
      params[name] = res;
  }
  return params;
}

// Subcommand bodies. Each returns the "results" object and may add notes.
using Body = std::function<json(Context&, json& notes)>;

}  // namespace

int dispatch(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact enumeration and simulation of sparse connected graphs", "sparsecc"};
  app.fallthrough();
  app.require_subcommand(1, 1);
  Context ctx;
  app.add_option("--format", ctx.format, "Report format")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_flag("--approx", ctx.approx, "Print a float next to every exact rational");

  std::map<const CLI::App*, Body> bodies;

  // constants
  {
    auto* sub = app.add_subcommand("constants", "Wright-type constants b_k, c_k, c'_k");
    auto kmax = std::make_shared<int>(12);
    auto r = std::make_shared<int>(0);
    sub->add_option("--kmax", *kmax)->check(CLI::Range(1, 200));
    sub->add_option("--polygons", *r, "number r of forbidden polygons for c'^xi")
        ->check(CLI::Range(0, 50));
    bodies[sub] = [kmax, r](const Context& c, json& notes) {
      const auto tab = census::wright_constants(*kmax, *r);
      json res;
      res["b"] = exact_list(c, tab.b, 1);
      res["c"] = exact_list(c, tab.c, 1);
      res["cprime"] = exact_list(c, tab.cprime, 1);
      res["cprime_xi"] = exact_list(c, tab.cprime_xi, 1);
      json d = json::array();
      const auto dk = asymptotics::wright_d(*kmax);
      for (std::size_t k = 1; k < dk.size(); ++k) d.push_back(number(dk[k]));
      res["d"] = d;
      notes.push_back("c' and c'^xi agree between both recurrence routes");
      return res;
    };
  }

  // egf
  {
    auto* sub = app.add_subcommand("egf", "Closed-form exponential generating functions");
    auto name = std::make_shared<std::string>();
    auto order = std::make_shared<int>(12);
    auto decompose = std::make_shared<bool>(false);
    auto polygons = std::make_shared<std::string>("3");
    sub->add_option("--name", *name)->required()->check(
        CLI::IsMember(census::closed_form_names()));
    sub->add_option("--order", *order)->check(CLI::Range(0, 400));
    sub->add_flag("--decompose", *decompose, "List coefficients in the tree-polynomial basis");
    sub->add_option("--polygons", *polygons, "Polygon lengths for the *_xi forms");
    bodies[sub] = [=](const Context& c, json&) {
      const XExpr e = census::closed_form(*name, parse_int_list(*polygons));
      json res;
      res["expression"] = to_string(e);
      res["excess"] = e.excess();
      res["counts"] = counts_of(c, e, *order);
      if (*decompose) {
        res["decomposition"] = decomposition_of(c, e);
        res["log_coeff"] = exact(c, e.log_coeff());
      }
      return res;
    };
  }

  // wk
  {
    auto* sub = app.add_subcommand("wk", "W_k from the excess recurrence");
    auto k = std::make_shared<int>(1);
    auto model = std::make_shared<std::string>("graph");
    auto order = std::make_shared<int>(12);
    sub->add_option("--k", *k)->required()->check(CLI::Range(1, 30));
    sub->add_option("--model", *model)->check(CLI::IsMember({"graph", "multigraph"}));
    sub->add_option("--order", *order)->check(CLI::Range(0, 200));
    bodies[sub] = [=](const Context& c, json& notes) {
      const Model m = parse_model(*model);
      const XExpr w = census::compute_wk(*k, m).back();
      const Series s = xexpr_eval(w, *order);
      const auto table = oracle::connected_counts(m, std::max(*order, 1), *k);
      json counts = json::array();
      for (int n = 0; n <= *order; ++n) {
        const Rational v = s.labelled_count(n);
        if (v != table.at(n, *k))
          throw consistency_failure("W_" + std::to_string(*k) + " disagrees with the oracle at n = " +
                                    std::to_string(n));
        counts.push_back(exact(c, v));
      }
      const auto [lead, next] = census::leading_coefficients(w, *k);
      json res;
      res["expression"] = to_string(w);
      res["leading"] = exact(c, lead);
      res["second"] = exact(c, next);
      res["decomposition"] = decomposition_of(c, w);
      res["counts"] = counts;
      notes.push_back("counts match the exponential-formula oracle up to n = " +
                      std::to_string(*order));
      return res;
    };
  }

  // oracle
  {
    auto* sub = app.add_subcommand("oracle", "Connected counts c(n, n+k) by the exponential formula");
    auto n = std::make_shared<int>(10);
    auto k = std::make_shared<int>(0);
    auto model = std::make_shared<std::string>("graph");
    sub->add_option("--n", *n)->required()->check(CLI::Range(0, 400));
    sub->add_option("--k", *k)->required()->check(CLI::Range(-1, 100));
    sub->add_option("--model", *model)->check(CLI::IsMember({"graph", "multigraph"}));
    bodies[sub] = [=](const Context& c, json&) {
      const auto table = oracle::connected_counts(parse_model(*model), std::max(*n, 1), *k);
      json res;
      res["value"] = exact(c, table.at(*n, *k));
      json rows = json::array();
      for (int i = 0; i <= *n; ++i) rows.push_back(exact(c, table.at(i, *k)));
      res["counts"] = rows;
      return res;
    };
  }

  // brute
  {
    auto* sub = app.add_subcommand("brute", "Brute-force census over labelled (multi)graphs");
    auto n = std::make_shared<int>(4);
    auto m = std::make_shared<int>(4);
    auto pred = std::make_shared<std::string>("connected");
    auto model = std::make_shared<std::string>("graph");
    auto workers = std::make_shared<int>(1);
    sub->add_option("--n", *n)->required()->check(CLI::Range(1, 9));
    sub->add_option("--m", *m)->required()->check(CLI::Range(0, 36));
    sub->add_option("--pred", *pred)->required();
    sub->add_option("--model", *model)->check(CLI::IsMember({"graph", "multigraph"}));
    sub->add_option("--workers", *workers)->check(CLI::Range(1, 256));
    bodies[sub] = [=](const Context& c, json& notes) {
      const auto p = oracle::parse_predicate(*pred);
      oracle::BruteOptions opt;
      opt.workers = *workers;
      const Rational v = parse_model(*model) == Model::graph
                             ? oracle::brute_census(*n, *m, p, opt)
                             : oracle::brute_census_multigraph(*n, *m, p, opt);
      json res;
      res["predicate"] = p.describe();
      res["value"] = exact(c, v);
      notes.push_back("exhaustive enumeration");
      return res;
    };
  }

  // residual
  {
    auto* sub = app.add_subcommand("residual", "Residual of the excess recurrence");
    auto k = std::make_shared<int>(0);
    auto forbidden = std::make_shared<std::string>("c3");
    auto model = std::make_shared<std::string>("graph");
    auto order = std::make_shared<int>(25);
    sub->add_option("--k", *k)->required()->check(CLI::Range(0, 30));
    sub->add_option("--forbidden", *forbidden, "c3, none, or a list of polygon lengths");
    sub->add_option("--model", *model)->check(CLI::IsMember({"graph", "multigraph"}));
    sub->add_option("--order", *order)->check(CLI::Range(1, 200));
    bodies[sub] = [=](Context& c, json& notes) {
      const Series r = census::recurrence_residual(*k, parse_forbidden(*forbidden),
                                                   parse_model(*model), *order);
      json res;
      res["zero"] = r.is_zero();
      json nonzero = json::array();
      for (int n = 0; n <= r.order(); ++n)
        if (r[n] != 0) nonzero.push_back({{"n", n}, {"coeff", exact(c, r[n])}});
      res["nonzero"] = nonzero;
      if (!r.is_zero()) {
        notes.push_back("nonzero residual");
        c.status = kConsistency;
      }
      return res;
    };
  }

  // ineq
  {
    auto* sub = app.add_subcommand("ineq", "Coefficientwise inequality checks");
    auto which = std::make_shared<std::string>("wright");
    auto k = std::make_shared<int>(1);
    auto order = std::make_shared<int>(40);
    auto epsilon = std::make_shared<std::string>("1/2");
    auto r = std::make_shared<int>(1);
    auto polygons = std::make_shared<std::string>("3");
    sub->add_option("--which", *which)->required()->check(
        CLI::IsMember({"wright", "sbound", "jbound", "constants", "vanishing"}));
    sub->add_option("--k", *k)->required()->check(CLI::Range(0, 50));
    sub->add_option("--order", *order)->check(CLI::Range(1, 200));
    sub->add_option("--epsilon", *epsilon, "rational slack for sbound/jbound");
    sub->add_option("--r", *r, "number of polygons for the constants band")
        ->check(CLI::Range(0, 50));
    sub->add_option("--polygons", *polygons, "c3, none, or a list (wright only)");
    bodies[sub] = [=](const Context& c, json&) {
      census::InequalityParams params;
      params.epsilon = parse_rational(*epsilon);
      params.r = *r;
      params.polygons = parse_forbidden(*polygons);
      const auto rep = census::inequality_check(census::parse_inequality(*which), *k, *order, params);
      json res;
      res["holds"] = rep.holds;
      res["checked"] = rep.checked;
      res["first_violation"] = rep.first_violation ? json(*rep.first_violation) : json(nullptr);
      res["detail"] = rep.detail;
      res["minimal_epsilon"] =
          rep.minimal_epsilon ? exact(c, *rep.minimal_epsilon) : json(nullptr);
      return res;
    };
  }

  // asympt
  {
    auto* sub = app.add_subcommand("asympt", "Asymptotic estimates against exact values");
    auto what = std::make_shared<std::string>("tn-saddle");
    auto params = std::make_shared<std::string>();
    sub->add_option("--what", *what)->required()->check(
        CLI::IsMember({"tn-saddle", "tn-fixed", "c", "driver", "singular"}));
    sub->add_option("--params", *params, "key=value list, e.g. n=100,a=0.09,beta=0");
    bodies[sub] = [=](const Context&, json& notes) {
      const auto p = parse_params(*params);
      json res;
      auto compare = [&](double estimate, std::optional<double> exact_log) {
        res["log_estimate"] = number(estimate);
        if (exact_log) {
          res["log_exact"] = number(*exact_log);
          res["ratio"] = number(std::exp(estimate - *exact_log));
        }
      };
      if (*what == "tn-saddle") {
        const int n = param_int(p, "n");
        if (n < 1) throw invalid_input("n must be >= 1");
        const double a = p.count("an") ? param_double(p, "an") / n : param_double(p, "a");
        const double beta = p.count("beta") ? param_double(p, "beta") : 0.0;
        if (!(a > 0 && a < 1)) throw invalid_input("a must lie in (0, 1)");
        const double y = a * n + beta;
        std::optional<double> ex;
        if (std::fabs(y - std::round(y)) < 1e-9)
          ex = asymptotics::log_tree_polynomial(n, std::lround(y));
        compare(asymptotics::tn_saddle(n, a, beta), ex);
        res["y"] = number(y);
      } else if (*what == "tn-fixed") {
        const int n = param_int(p, "n");
        const double y = param_double(p, "y");
        if (n < 1 || !(y > 0)) throw invalid_input("need n >= 1 and y > 0");
        std::optional<double> ex;
        if (y == std::floor(y)) ex = asymptotics::log_tree_polynomial(n, static_cast<long>(y));
        compare(asymptotics::tn_fixed(n, y), ex);
      } else if (*what == "c") {
        const int n = param_int(p, "n");
        const int k = param_int(p, "k");
        if (n < 1 || k < 1) throw invalid_input("need n >= 1 and k >= 1");
        std::optional<double> ex;
        if (k <= 8) {
          const XExpr w = census::compute_wk(k).back();
          ex = log_abs(asymptotics::labelled_count(w, n));
          notes.push_back("exact value from W_k in the tree-polynomial basis");
        }
        compare(asymptotics::c_asymptotic(n, k), ex);
      } else if (*what == "driver") {
        const int n = param_int(p, "n");
        const int k = p.count("k") ? param_int(p, "k")
                                   : static_cast<int>(std::floor(std::pow(n, 0.2)));
        if (n < 1 || k < 1) throw invalid_input("need n >= 1 and k >= 1");
        const double lr = std::log(static_cast<double>(k)) +
                          asymptotics::log_tree_polynomial(n, 3L * k - 1) -
                          asymptotics::log_tree_polynomial(n, 3L * k);
        res["k"] = k;
        res["value"] = number(std::exp(lr));
      } else {
        const int terms = p.count("terms") ? param_int(p, "terms") : 4;
        const auto rep = asymptotics::singular_expansion_check(terms);
        json rows = json::array();
        for (const auto& row : rep.rows) {
          json scaled = json::array();
          for (double v : row.scaled) scaled.push_back(number(v));
          rows.push_back({{"delta", number(row.delta)},
                          {"t_series", number(row.t_series)},
                          {"t_newton", number(row.t_newton)},
                          {"scaled", scaled}});
        }
        res["rows"] = rows;
        res["second_coefficient"] = number(rep.second_coefficient);
        res["max_series_newton_gap"] = number(rep.max_series_newton_gap);
      }
      return res;
    };
  }

  // prob
  {
    auto* sub = app.add_subcommand("prob", "Limiting component-profile probabilities");
    auto profile = std::make_shared<std::string>();
    auto theta = std::make_shared<std::string>();
    auto deduct = std::make_shared<std::vector<std::string>>();
    auto max_excess = std::make_shared<int>(-1);
    sub->add_option("--profile", *profile, "r1,r2,...: components of excess 1, 2, ...");
    sub->add_option("--theta", *theta, "forbidden polygon lengths");
    sub->add_option("--deduct", *deduct, "k:cH, remove a contractible family")->take_all();
    sub->add_option("--max-excess", *max_excess,
                    "all components of excess <= 0 or <= 1, instead of a profile")
        ->check(CLI::Range(0, 1));
    bodies[sub] = [=](const Context& c, json&) {
      const auto th = parse_int_list(*theta);
      json res;
      if (*max_excess >= 0) {
        if (!profile->empty() || !deduct->empty())
          throw invalid_input("--max-excess cannot be combined with --profile or --deduct");
        res["value"] = number(probability::low_complexity_probability(*max_excess, th));
        return res;
      }
      std::vector<probability::Deduction> ds;
      for (const auto& d : *deduct) {
        const auto colon = d.find(':');
        if (colon == std::string::npos) throw invalid_input("deduction '" + d + "' is not k:cH");
        const auto ks = parse_int_list(d.substr(0, colon));
        if (ks.size() != 1) throw invalid_input("deduction '" + d + "' is not k:cH");
        ds.push_back({ks[0], parse_rational(d.substr(colon + 1))});
      }
      const auto pp = probability::profile_probability({parse_int_list(*profile)}, th, ds);
      res["exact"] = exact(c, pp.exact);
      res["polygon_sum"] = exact(c, pp.polygon_sum);
      res["value"] = number(pp.value);
      return res;
    };
  }

  // simulate
  {
    auto* sub = app.add_subcommand("simulate", "Monte Carlo estimates for the random graph process");
    auto n = std::make_shared<long>(10000);
    auto m = std::make_shared<long>(-1);
    auto mu = std::make_shared<double>(0);
    auto model = std::make_shared<std::string>("uniform");
    auto trials = std::make_shared<long>(1000);
    auto seed = std::make_shared<std::uint64_t>(1);
    auto events = std::make_shared<std::vector<std::string>>();
    auto workers = std::make_shared<int>(1);
    sub->add_option("--n", *n)->required()->check(CLI::Range(1L, 100'000'000L));
    auto* m_opt = sub->add_option("--m", *m, "edges; defaults to floor(n/2)")
                      ->check(CLI::NonNegativeNumber);
    sub->add_option("--mu", *mu, "edges = round(n/2 (1 + mu n^(-1/3)))")->excludes(m_opt);
    sub->add_option("--model", *model)->check(
        CLI::IsMember({"uniform", "permutation", "graph", "multigraph"}));
    sub->add_option("--trials", *trials)->check(CLI::Range(1L, 100'000'000L));
    sub->add_option("--seed", *seed);
    sub->add_option("--event", *events, "event expression; repeatable");
    sub->add_option("--workers", *workers)->check(CLI::Range(1, 256));
    bodies[sub] = [=](const Context& c, json& notes) {
      simulator::ProcessConfig cfg;
      cfg.n = *n;
      if (*m >= 0)
        cfg.m = *m;
      else if (*mu != 0)
        cfg.m = probability::edge_count(*n, *mu);
      else
        cfg.m = *n / 2;
      cfg.model = simulator::parse_process_model(*model);
      cfg.trials = *trials;
      cfg.seed = *seed;
      cfg.workers = *workers;
      std::vector<simulator::Event> evs;
      for (const auto& e : *events) evs.push_back(simulator::parse_event(e));
      if (evs.empty()) evs.push_back(simulator::parse_event("any"));
      const auto est = simulator::run_trials(cfg, evs);
      json res;
      res["n"] = cfg.n;
      res["m"] = cfg.m;
      res["model"] = simulator::to_string(cfg.model);
      json arr = json::array();
      for (const auto& e : est)
        arr.push_back({{"event", e.event},
                       {"p_hat", number(e.p_hat)},
                       {"stderr", number(e.stderr_)},
                       {"hits", e.hits},
                       {"trials", e.trials},
                       {"discarded", e.discarded}});
      res["estimates"] = arr;
      notes.push_back("seed " + std::to_string(cfg.seed));
      (void)c;
      return res;
    };
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kOk;
    }
    err << "sparsecc: " << e.what() << '\n';
    return kUsage;
  }

  const CLI::App* chosen = app.get_subcommands().front();
  json report;
  report["command"] = chosen->get_name();
  report["parameters"] = echo_parameters(*chosen);
  json notes = json::array();
  try {
    report["results"] = bodies.at(chosen)(ctx, notes);
  } catch (const invalid_input& e) {
    err << "sparsecc: invalid input: " << e.what() << '\n';
    return kUsage;
  } catch (const resource_limit& e) {
    err << "sparsecc: resource limit: " << e.what() << '\n';
    return kResource;
  } catch (const consistency_failure& e) {
    err << "sparsecc: consistency failure: " << e.what() << '\n';
    return kConsistency;
  } catch (const std::exception& e) {
    err << "sparsecc: error: " << e.what() << '\n';
    return kInternal;
  }
  report["notes"] = notes;
  render(ctx, report, out);
  if (ctx.status != kOk) err << "sparsecc: consistency failure reported above\n";
  return ctx.status;
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<std::string> storage;
  storage.reserve(args.size() + 1);
  storage.emplace_back("sparsecc");
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());
  argv.push_back(nullptr);
  return dispatch(static_cast<int>(storage.size()), argv.data(), out, err);
}

}  // namespace sparsecc::cli
