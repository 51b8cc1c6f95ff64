#include "sparsecc/census.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <tuple>

#include "sparsecc/errors.hpp"
#include "sparsecc/kernel_census.hpp"
#include "sparsecc/oracle.hpp"

namespace sparsecc::census {

using sparsecc::to_string;

namespace {

std::vector<Rational> poly(std::initializer_list<long> num, long den) {
  std::vector<Rational> p;
  for (long v : num) p.push_back(rat(v, den));
  return p;
}

void check_equal(const std::vector<Rational>& a, const std::vector<Rational>& b,
                 const char* what, int from) {
  for (std::size_t k = from; k < a.size(); ++k)
    if (a[k] != b[k])
      throw consistency_failure(std::string(what) + ": routes disagree at k = " +
                                std::to_string(k) + " (" + to_string(a[k]) + " vs " +
                                to_string(b[k]) + ")");
}

// sum_{t=1}^{k-1} t (3k - 3t - 1) b_t x_{k-t}
Rational second_order_sum(int k, const std::vector<Rational>& b,
                          const std::vector<Rational>& x) {
  Rational s = 0;
  for (int t = 1; t <= k - 1; ++t) s += Rational(t * (3 * k - 3 * t - 1)) * b[t] * x[k - t];
  return s;
}

XExpr polygon_sum(const std::vector<int>& polygons) {
  XExpr e(0);
  for (int p : polygons) {
    if (p < 3) throw invalid_input("forbidden polygon length must be >= 3");
    e += XExpr::t_power(p, rat(1, 2 * p));
  }
  return e;
}

std::vector<int> normalized(std::vector<int> polygons) {
  std::sort(polygons.begin(), polygons.end());
  if (std::adjacent_find(polygons.begin(), polygons.end()) != polygons.end())
    throw invalid_input("duplicate forbidden polygon");
  for (int p : polygons)
    if (p < 3) throw invalid_input("forbidden polygon length must be >= 3");
  return polygons;
}

// Smallest n with C(n,2) >= n + k.
int smallest_graph_order(int k) {
  int n = 1;
  while (n * (n - 1) / 2 < n + k) ++n;
  return n;
}

XExpr point(const XExpr& e) { return theta_z(e); }

// (excess + theta_z) e
XExpr edge_point(const XExpr& e, int excess) {
  XExpr r = theta_z(e);
  if (excess != 0) r += e * Rational(excess);
  return r;
}

}  // namespace

ConstantTable wright_constants(int kmax, int r) {
  if (kmax < 1) throw invalid_input("wright_constants: kmax must be >= 1");
  if (r < 0) throw invalid_input("wright_constants: polygon count must be >= 0");
  ConstantTable tab;
  tab.kmax = kmax;
  tab.r = r;
  const std::size_t size = kmax + 2;  // b_{kmax+1} is needed by c_{kmax}
  std::vector<Rational> b(size, Rational(0)), calB(size, Rational(0));
  b[0] = rat(1, 2);
  b[1] = rat(5, 24);
  for (int k = 1; k + 1 < static_cast<int>(size); ++k) {
    for (int t = 1; t <= k - 1; ++t) calB[k] += Rational(t * (k - t)) * b[t] * b[k - t];
    b[k + 1] = (Rational(3 * k * (k + 1)) * b[k] + 3 * calB[k]) / (2 * (k + 1));
  }

  const std::size_t n = kmax + 1;
  std::vector<Rational> c(n, Rational(0)), cp(n, Rational(0)), cp_raw(n, Rational(0)),
      cx(n, Rational(0)), cx_raw(n, Rational(0));
  c[1] = rat(19, 24);
  cp[1] = cp_raw[1] = rat(25, 24);
  cx[1] = cx_raw[1] = rat(19 + 6 * r, 24);
  for (int k = 1; k + 1 <= kmax; ++k) {
    const Rational lead = Rational(8 * (k + 1)) * b[k + 1];
    const Rational mid = Rational((3 * k + 2) * (3 * k - 1));
    const Rational den = 2 * (3 * k + 2);
    c[k + 1] = (lead + Rational(3 * k) * b[k] + mid * c[k] + 6 * second_order_sum(k, b, c)) / den;
    cp[k + 1] = c[k + 1] + rat(3, 2) * k * b[k];
    cp_raw[k + 1] =
        (lead + Rational(6 * k) * b[k] + mid * cp_raw[k] + 6 * second_order_sum(k, b, cp_raw)) / den;
    cx[k + 1] = c[k + 1] + rat(3, 2) * r * k * b[k];
    cx_raw[k + 1] = (lead + Rational(3 * k * (r + 1)) * b[k] + mid * cx_raw[k] +
                     6 * second_order_sum(k, b, cx_raw)) /
                    den;
  }
  check_equal(cp, cp_raw, "triangle-free second coefficient", 1);
  check_equal(cx, cx_raw, "polygon-free second coefficient", 1);

  b.resize(n);
  calB.resize(n);
  tab.b = std::move(b);
  tab.c = std::move(c);
  tab.cprime = std::move(cp);
  tab.cprime_xi = std::move(cx);
  tab.calB = std::move(calB);
  return tab;
}

std::vector<std::string> closed_form_names() {
  return {"W-1",   "W0",    "W0_multi", "W0_C3", "W0_C3_multi", "W0_xi", "W0_xi_multi",
          "W1",    "W1_C3", "S1_C3",    "J1_C3", "W2_C3",       "S2_C3", "J2_C3"};
}

XExpr closed_form(std::string_view name, const std::vector<int>& polygons) {
  const XExpr half_log = XExpr::log_term(rat(1, 2));
  const XExpr tree_corr = XExpr::t_polynomial(poly({0, -2, -1}, 4));  // -T/2 - T^2/4
  const XExpr triangle = XExpr::t_power(3, rat(1, 6));
  if (name == "W-1") return XExpr::t_polynomial(poly({0, 2, -1}, 2), -1);
  if (name == "W0") return half_log + tree_corr;
  if (name == "W0_multi") return half_log;
  if (name == "W0_C3") return half_log + tree_corr - triangle;
  if (name == "W0_C3_multi") return half_log - triangle;
  if (name == "W0_xi") return half_log + tree_corr - polygon_sum(normalized(polygons));
  if (name == "W0_xi_multi") return half_log - polygon_sum(normalized(polygons));
  if (name == "W1") return XExpr::t_rational(poly({0, 0, 0, 0, 6, -1}, 24), 3, 1);
  if (name == "W1_C3") return XExpr::t_rational(poly({0, 0, 0, 0, 0, 2, 6, -3}, 24), 3, 1);
  if (name == "S1_C3") return XExpr::t_rational(poly({0, 0, 0, 0, 0, 2, -1}, 4), 2, 1);
  if (name == "J1_C3") return XExpr::t_power(4, rat(1, 4), 1);
  if (name == "W2_C3")
    return XExpr::t_rational(poly({0, 0, 0, 0, 0, 0, 7, 36, -18, -40, 40, -10}, 48), 6, 2);
  if (name == "S2_C3")
    return XExpr::t_rational(poly({0, 0, 0, 0, 0, 0, 48, 18, -140, 119, -30}, 48), 5, 2);
  if (name == "J2_C3") return XExpr::t_rational(poly({0, 0, 0, 0, 0, 2, 5, -4}, 6), 2, 2);
  throw invalid_input("unknown closed form '" + std::string(name) + "'");
}

XExpr unicyclic(Model model, const std::vector<int>& polygons) {
  if (polygons.empty()) return closed_form(model == Model::graph ? "W0" : "W0_multi");
  return closed_form(model == Model::graph ? "W0_xi" : "W0_xi_multi", polygons);
}

XExpr contractible_family(const Graph& h) {
  if (!is_connected(h)) throw invalid_input("contractible_family: H must be connected");
  const auto adj = h.adjacency();
  for (const auto& nb : adj)
    if (nb.size() < 3) throw invalid_input("contractible_family: H needs minimum degree 3");
  const Rational c = Rational(1) / Rational(automorphism_count(h));
  std::vector<Rational> p(h.n + 1, Rational(0));
  p[h.n] = c;
  return XExpr::t_rational(p, h.edge_count(), h.excess());
}

Series partition_gf(int parts, bool distinct, int order) {
  if (parts < 1) throw invalid_input("partition_gf: parts must be >= 1");
  const int lowest = distinct ? parts * (parts + 1) / 2 : parts;
  Series den = Series::constant(order, 1);
  for (int j = 1; j <= parts; ++j)
    den = den * (Series::constant(order, 1) - Series::monomial(order, j, 1));
  return Series::monomial(order, lowest, 1) * inverse(den);
}

Integer count_partitions(int n, int parts, bool distinct) {
  // Parts listed in nonincreasing (strictly decreasing when distinct) order.
  std::map<std::tuple<int, int, int>, Integer> memo;
  std::function<Integer(int, int, int)> count = [&](int rest, int k, int cap) -> Integer {
    if (k == 0) return rest == 0 ? 1 : 0;
    if (rest <= 0 || cap <= 0) return 0;
    auto key = std::make_tuple(rest, k, cap);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    Integer total = 0;
    for (int first = std::min(cap, rest); first >= 1; --first)
      total += count(rest - first, k - 1, distinct ? first - 1 : first);
    memo.emplace(key, total);
    return total;
  };
  if (n < 0 || parts < 0) return 0;
  return count(n, parts, n);
}

Series smooth_bicyclic_partition(int order) {
  const Series one = Series::constant(order, 1);
  auto z = [&](int j) { return Series::monomial(order, j, 1); };
  auto over = [&](std::initializer_list<int> factors) {
    Series d = one;
    for (int j : factors) d = d * (one - z(j));
    return inverse(d);
  };
  Series sum = z(2) * (partition_gf(3, true, order) + partition_gf(2, true, order)) * rat(1, 2);
  sum += z(5) * over({3}) * rat(1, 12);
  sum += (z(4) * over({2}) + z(5) * over({1, 2}) - z(5) * over({3})) * rat(1, 4);
  sum += z(6) * over({1, 1, 2}) * rat(1, 4);
  sum += z(5) * over({1, 2}) * rat(1, 8);

  const Series closed = (z(4) * 6 - z(5)) * over({1, 1, 1}) * rat(1, 24);
  for (int n = 0; n <= order; ++n)
    if (sum[n] != closed[n])
      throw consistency_failure("smooth bicyclic partition sum differs from closed form at z^" +
                                std::to_string(n));
  return sum;
}

Series substitute_tree(const Series& ogf, int order) {
  const Series t = cayley_tree_series(order);
  Series result(order), power = Series::constant(order, 1);
  const int top = std::min(order, ogf.order());
  for (int j = 0; j <= top; ++j) {
    if (j > 0) power = power * t;
    if (ogf[j] != 0) result += power * ogf[j];
  }
  return result;
}

std::vector<XExpr> compute_wk(int kmax, Model model) {
  if (kmax < 1) throw invalid_input("compute_wk: kmax must be >= 1");
  auto pin_orders = [&](int k) {
    if (model == Model::multigraph) return std::vector<int>{1, 2};
    const int n = smallest_graph_order(k);
    return std::vector<int>{n, n + 1};
  };
  const auto table = oracle::connected_counts(model, pin_orders(kmax).back(), kmax);
  auto pins = [&](int k) {
    std::vector<Pin> p;
    for (int n : pin_orders(k)) p.push_back({n, table.at(n, k)});
    return p;
  };

  const XExpr w0_pointed = point(unicyclic(model));
  std::vector<XExpr> ws;
  XExpr rhs = point(w0_pointed) + w0_pointed * w0_pointed;
  if (model == Model::graph) rhs -= w0_pointed * Rational(3);
  ws.push_back(delta_invert(1, rhs.with_excess(1), pins(1)));
  for (int k = 1; k < kmax; ++k) {
    std::vector<XExpr> lower(ws.begin(), ws.begin() + (k - 1));
    XExpr step = omega_apply(k, w0_pointed, ws[k - 1], model);
    if (k >= 2) step += lambda_sum(lower);
    ws.push_back(delta_invert(k + 1, step.with_excess(k + 1), pins(k + 1)));
  }
  return ws;
}

ForbiddenFamily forbidden_family(int k, const std::vector<int>& polygons) {
  const auto ps = normalized(polygons);
  ForbiddenFamily f;
  f.excess = k;
  f.juxtaposition = XExpr(k);
  if (k < -1) throw invalid_input("forbidden_family: excess must be >= -1");
  if (k == -1) {
    f.free = closed_form("W-1");
    return f;
  }
  if (k == 0) {
    f.free = ps.empty() ? closed_form("W0") : closed_form("W0_xi", ps);
    return f;
  }
  if (ps == std::vector<int>{3} && k <= 2) {
    const std::string suffix = std::to_string(k) + "_C3";
    f.free = closed_form("W" + suffix);
    f.single.emplace_back(3, closed_form("S" + suffix));
    f.juxtaposition = closed_form("J" + suffix);
    return f;
  }
  const auto kc = oracle::kernel_census(k, ps);
  f.free = kc.free;
  for (int p : ps) {
    auto it = kc.single.find(p);
    f.single.emplace_back(p, it == kc.single.end() ? XExpr(k) : it->second);
  }
  f.juxtaposition = kc.juxtaposition;
  return f;
}

Series recurrence_residual(int k, const std::vector<int>& polygons, Model model, int order) {
  if (k < 0) throw invalid_input("recurrence_residual: k must be >= 0");
  std::vector<XExpr> w;  // w[p + 1] = W_p for -1 <= p <= k + 1
  XExpr forbidden_terms(k + 1);
  if (polygons.empty()) {
    w.push_back(closed_form("W-1"));
    w.push_back(unicyclic(model));
    for (const auto& wk : compute_wk(k + 1, model)) w.push_back(wk);
  } else {
    if (model != Model::graph)
      throw invalid_input("recurrence_residual: forbidden polygons need the graph model");
    for (int p = -1; p <= k + 1; ++p) w.push_back(forbidden_family(p, polygons).free);
    const auto top = forbidden_family(k + 1, polygons);
    for (const auto& [p, s] : top.single) forbidden_terms += s * Rational(p);
    forbidden_terms += top.juxtaposition;
  }
  auto W = [&](int p) -> const XExpr& { return w[p + 1]; };

  XExpr lhs = edge_point(W(k + 1), k + 1) + forbidden_terms;

  const XExpr& wk = W(k);
  const XExpr d1 = point(wk);
  XExpr rhs = point(d1) * rat(1, 2);
  if (model == Model::graph) {
    rhs -= d1 * rat(1, 2);
    rhs -= edge_point(wk, k);
  }
  rhs = rhs.with_excess(k + 1);
  for (int p = -1; 2 * p <= k; ++p) {
    const int q = k - p;
    XExpr term = point(W(p)) * point(W(q));
    if (p == q) term *= rat(1, 2);
    rhs += term.with_excess(k + 1);
  }
  return xexpr_eval(lhs - rhs, order);
}

Inequality parse_inequality(std::string_view name) {
  if (name == "wright") return Inequality::wright;
  if (name == "sbound") return Inequality::sbound;
  if (name == "jbound") return Inequality::jbound;
  if (name == "constants") return Inequality::constants;
  if (name == "vanishing") return Inequality::vanishing;
  throw invalid_input("unknown inequality '" + std::string(name) + "'");
}

std::string to_string(Inequality which) {
  switch (which) {
    case Inequality::wright: return "wright";
    case Inequality::sbound: return "sbound";
    case Inequality::jbound: return "jbound";
    case Inequality::constants: return "constants";
    case Inequality::vanishing: return "vanishing";
  }
  return "?";
}

namespace {

// value <= (base + eps) * bound for every n; records the smallest eps.
void bound_check(InequalityReport& rep, const Series& value, const Series& bound,
                 const Rational& base, const Rational& eps) {
  std::optional<Rational> worst;
  bool unbounded = false;
  for (int n = 0; n <= value.order(); ++n) {
    ++rep.checked;
    if (value[n] > (base + eps) * bound[n] && !rep.first_violation) rep.first_violation = n;
    if (value[n] <= 0) continue;
    if (bound[n] <= 0) {
      unbounded = true;
      continue;
    }
    Rational need = value[n] / bound[n] - base;
    if (!worst || need > *worst) worst = need;
  }
  rep.holds = !rep.first_violation;
  if (!unbounded) rep.minimal_epsilon = worst ? *worst : Rational(-base);
}

}  // namespace

InequalityReport inequality_check(Inequality which, int k, int order,
                                  const InequalityParams& params) {
  InequalityReport rep;
  rep.which = which;
  rep.k = k;
  rep.order = order;
  if (k < 1) throw invalid_input("inequality_check: k must be >= 1");
  switch (which) {
    case Inequality::wright: {
      const bool plain = params.polygons.empty();
      const XExpr wk = plain ? compute_wk(k).back() : forbidden_family(k, params.polygons).free;
      const auto tab = wright_constants(k, static_cast<int>(params.polygons.size()));
      const Rational second = plain ? tab.c[k] : tab.cprime_xi[k];
      const XExpr upper = XExpr::x_power(3 * k, tab.b[k], k);
      const XExpr lower = upper - XExpr::x_power(3 * k - 1, second, k);
      const Series w = xexpr_eval(wk, order), up = xexpr_eval(upper, order),
                   lo = xexpr_eval(lower, order);
      for (int n = 0; n <= order; ++n) {
        ++rep.checked;
        if (!(lo[n] <= w[n] && w[n] <= up[n])) {
          rep.first_violation = n;
          rep.detail = "n = " + std::to_string(n) + ": " + to_string(lo[n] * factorial(n)) +
                       " <= " + to_string(w[n] * factorial(n)) + " <= " +
                       to_string(up[n] * factorial(n)) + " fails";
          break;
        }
      }
      rep.holds = !rep.first_violation;
      break;
    }
    case Inequality::sbound: {
      const auto tab = wright_constants(k);
      const auto fam = forbidden_family(k + 1, {3});
      const Series s = xexpr_eval(fam.single.front().second, order);
      const Series bound = xexpr_eval(XExpr::x_power(3 * k + 2, k * tab.b[k], k + 1), order);
      bound_check(rep, s, bound, rat(3, 2), params.epsilon);
      break;
    }
    case Inequality::jbound: {
      if (k < 2) throw invalid_input("jbound needs k >= 2");
      const auto tab = wright_constants(k);
      const auto fam = forbidden_family(k + 1, {3});
      const Series j = xexpr_eval(fam.juxtaposition, order);
      const Series bound =
          xexpr_eval(XExpr::x_power(3 * k - 1, (k - 1) * tab.b[k - 1], k + 1), order);
      bound_check(rep, j, bound, Rational(6), params.epsilon);
      break;
    }
    case Inequality::constants: {
      const auto tab = wright_constants(k, params.r);
      for (int j = 1; j <= k; ++j) {
        ++rep.checked;
        const Rational low = j * tab.b[j];
        const Rational high = rat(19 + 6 * params.r, 5) * low;
        if (!(low <= tab.cprime_xi[j] && tab.cprime_xi[j] <= high)) {
          rep.first_violation = j;
          rep.detail = "k = " + std::to_string(j) + ": " + to_string(tab.cprime_xi[j]) +
                       " outside [" + to_string(low) + ", " + to_string(high) + "]";
          break;
        }
      }
      rep.holds = !rep.first_violation;
      break;
    }
    case Inequality::vanishing: {
      const Series w = xexpr_eval(compute_wk(k).back(), order);
      // n < 3/2 + sqrt(2k + 9/4)  <=>  n(n - 3) < 2k
      for (int n = 0; n <= order && n * (n - 3) < 2 * k; ++n) {
        ++rep.checked;
        if (w[n] != 0) {
          rep.first_violation = n;
          rep.detail = "n = " + std::to_string(n) + ": coefficient " +
                       to_string(w.labelled_count(n));
          break;
        }
      }
      rep.holds = !rep.first_violation;
      break;
    }
  }
  return rep;
}

std::pair<Rational, Rational> leading_coefficients(const XExpr& e, int k) {
  if (auto top = e.top(); top && *top > 3 * k)
    throw invalid_input("leading_coefficients: term X^-" + std::to_string(*top) +
                        " above X^-" + std::to_string(3 * k));
  return {e.coeff(3 * k), e.coeff(3 * k - 1)};
}

}  // namespace sparsecc::census
