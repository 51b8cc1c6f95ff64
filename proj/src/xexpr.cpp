#include "sparsecc/xexpr.hpp"

#include <sstream>

#include "sparsecc/errors.hpp"

namespace sparsecc {

namespace {

void require_no_log(const XExpr& e, const char* what) {
  if (e.log_coeff() != 0)
    throw invalid_input(std::string(what) + ": logarithmic term not allowed");
}

}  // namespace

XExpr XExpr::x_power(long t, const Rational& c, int excess) {
  XExpr e(excess);
  e.add_term(t, c);
  return e;
}

XExpr XExpr::log_term(const Rational& c, int excess) {
  XExpr e(excess);
  e.log_coeff_ = c;
  return e;
}

XExpr XExpr::t_power(int j, const Rational& c, int excess) {
  if (j < 0) throw invalid_input("negative power of T is not in the ring");
  XExpr e(excess);
  // (1 - X)^j
  for (int i = 0; i <= j; ++i) {
    Rational term = c * Rational(binomial(j, i));
    if (i % 2) term = -term;
    e.add_term(-i, term);
  }
  return e;
}

XExpr XExpr::t_polynomial(const std::vector<Rational>& p, int excess) {
  XExpr e(excess);
  for (std::size_t j = 0; j < p.size(); ++j)
    if (p[j] != 0) e += t_power(static_cast<int>(j), p[j], excess);
  return e;
}

XExpr XExpr::t_rational(const std::vector<Rational>& p, int d, int excess) {
  XExpr num = t_polynomial(p, excess);
  XExpr e(excess);
  for (const auto& [t, c] : num.laurent_) e.add_term(t + d, c);
  return e;
}

XExpr XExpr::with_excess(int excess) const {
  XExpr e = *this;
  e.excess_ = excess;
  return e;
}

Rational XExpr::coeff(long t) const {
  auto it = laurent_.find(t);
  return it == laurent_.end() ? Rational(0) : it->second;
}

bool XExpr::is_constant() const {
  return log_coeff_ == 0 &&
         (laurent_.empty() || (laurent_.size() == 1 && laurent_.begin()->first == 0));
}

std::optional<long> XExpr::top() const {
  if (laurent_.empty()) return std::nullopt;
  return laurent_.rbegin()->first;
}

std::optional<long> XExpr::bottom() const {
  if (laurent_.empty()) return std::nullopt;
  return laurent_.begin()->first;
}

std::vector<Rational> XExpr::to_t_polynomial() const {
  require_no_log(*this, "to_t_polynomial");
  if (auto t = top(); t && *t > 0)
    throw invalid_input("to_t_polynomial: negative powers of X present");
  // X^i = (1 - T)^i
  const long degree = laurent_.empty() ? 0 : -*bottom();
  std::vector<Rational> p(degree + 1, Rational(0));
  for (const auto& [t, c] : laurent_) {
    const long i = -t;
    for (long j = 0; j <= i; ++j) {
      Rational term = c * Rational(binomial(i, j));
      if (j % 2) term = -term;
      p[j] += term;
    }
  }
  while (p.size() > 1 && p.back() == 0) p.pop_back();
  return p;
}

void XExpr::add_term(long t, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = laurent_.try_emplace(t, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) laurent_.erase(it);
  }
}

void XExpr::merge(const XExpr& other, int sign) {
  if (other.is_zero()) return;
  if (is_zero()) {
    excess_ = other.excess_;
  } else if (excess_ != other.excess_) {
    throw invalid_input("adding expressions of different excess");
  }
  for (const auto& [t, c] : other.laurent_) add_term(t, sign > 0 ? c : Rational(-c));
  if (sign > 0)
    log_coeff_ += other.log_coeff_;
  else
    log_coeff_ -= other.log_coeff_;
}

XExpr& XExpr::operator+=(const XExpr& other) {
  merge(other, +1);
  return *this;
}

XExpr& XExpr::operator-=(const XExpr& other) {
  merge(other, -1);
  return *this;
}

XExpr& XExpr::operator*=(const Rational& s) {
  if (s == 0) {
    laurent_.clear();
    log_coeff_ = 0;
    return *this;
  }
  for (auto& entry : laurent_) entry.second *= s;
  log_coeff_ *= s;
  return *this;
}

XExpr operator*(const XExpr& a, const XExpr& b) {
  const bool a_log = a.log_coeff_ != 0;
  const bool b_log = b.log_coeff_ != 0;
  if ((a_log && !b.is_constant()) || (b_log && !a.is_constant()))
    throw invalid_input("product involving a logarithmic term");
  XExpr r(a.excess_ + b.excess_);
  if (a_log) r.log_coeff_ = a.log_coeff_ * b.coeff(0);
  if (b_log) r.log_coeff_ = b.log_coeff_ * a.coeff(0);
  for (const auto& [ta, ca] : a.laurent_)
    for (const auto& [tb, cb] : b.laurent_) r.add_term(ta + tb, ca * cb);
  return r;
}

std::string to_string(const XExpr& e) {
  std::ostringstream out;
  bool first = true;
  auto emit = [&](const Rational& c, const std::string& basis) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    out << to_string(mag);
    if (!basis.empty()) out << '*' << basis;
  };
  for (auto it = e.laurent().rbegin(); it != e.laurent().rend(); ++it) {
    const long power = -it->first;
    emit(it->second, power == 0 ? "" : "X^" + std::to_string(power));
  }
  if (e.log_coeff() != 0) emit(e.log_coeff(), "ln(1/X)");
  if (first) out << '0';
  return out.str();
}

Series xexpr_eval(const XExpr& e, int order) {
  Series result(order);
  if (e.is_zero()) return result;
  const Series x = Series::constant(order, 1) - cayley_tree_series(order);
  const Series m = inverse(x);
  if (auto top = e.top(); top && *top > 0) {
    Series p = Series::constant(order, 1);
    for (long t = 1; t <= *top; ++t) {
      p = p * m;
      if (Rational c = e.coeff(t); c != 0) result += p * c;
    }
  }
  if (auto bottom = e.bottom(); bottom && *bottom <= 0) {
    Series p = Series::constant(order, 1);
    for (long t = 0; t >= *bottom; --t) {
      if (t < 0) p = p * x;
      if (Rational c = e.coeff(t); c != 0) result += p * c;
    }
  }
  if (e.log_coeff() != 0) result += log(m) * e.log_coeff();
  return result;
}

XExpr theta_z(const XExpr& e) {
  XExpr r(e.excess());
  for (const auto& [t, c] : e.laurent()) {
    if (t == 0) continue;
    // t T X^(-t-2) = t X^(-t-2) - t X^(-t-1)
    r.add_term(t + 2, c * t);
    r.add_term(t + 1, -c * t);
  }
  if (e.log_coeff() != 0) {
    r.add_term(2, e.log_coeff());
    r.add_term(1, -e.log_coeff());
  }
  return r;
}

XExpr theta_t(const XExpr& e) {
  XExpr r(e.excess());
  for (const auto& [t, c] : e.laurent()) {
    if (t == 0) continue;
    // t T X^(-t-1) = t X^(-t-1) - t X^(-t)
    r.add_term(t + 1, c * t);
    r.add_term(t, -c * t);
  }
  if (e.log_coeff() != 0) {
    r.add_term(1, e.log_coeff());
    r.add_term(0, -e.log_coeff());
  }
  return r;
}

XExpr divide_by_t(const XExpr& e, int j) {
  require_no_log(e, "divide_by_t");
  XExpr current = e;
  for (int step = 0; step < j; ++step) {
    if (current.is_zero()) return current;
    // current = X^(-top) P(X); divide P by (1 - X).
    const long top = *current.top();
    const long degree = top - *current.bottom();
    XExpr q(current.excess());
    Rational carry = 0;
    for (long i = 0; i < degree; ++i) {
      carry += current.coeff(top - i);
      q.add_term(top - i, carry);
    }
    if (current.coeff(top - degree) + carry != 0)
      throw invalid_input("divide_by_t: expression is not divisible by T");
    current = q;
  }
  return current;
}

XExpr delta_apply(int k, const XExpr& e) {
  require_no_log(e, "delta_apply");
  XExpr r(e.excess());
  for (const auto& [t, c] : e.laurent()) {
    if (t != 0) r.add_term(t + 1, c * (2 * t));
    r.add_term(t, c * (2 * (k - t)));
  }
  return r;
}

XExpr delta_invert(int k, const XExpr& rhs, const std::vector<Pin>& pins) {
  if (k < 1) throw invalid_input("delta_invert: k must be >= 1");
  require_no_log(rhs, "delta_invert");
  XExpr w(k);
  // X^(-t) with t >= 1 only reaches t and t+1, so the negative-power part
  // solves top-down; the equation at X^(-1) is left over as a consistency
  // condition.
  if (auto top = rhs.top(); top && *top >= 1) {
    Rational above = 0;  // a_u for the u being processed
    for (long u = *top; u >= 2; --u) {
      Rational a = (rhs.coeff(u) - Rational(2 * (k - u)) * above) / (2 * (u - 1));
      w.add_term(u - 1, a);
      above = a;
    }
    if (Rational(2 * (k - 1)) * above != rhs.coeff(1))
      throw consistency_failure("delta_invert: right side not in the image of Delta_" +
                                std::to_string(k));
  }
  // X^s with s >= 0 maps to 2(k+s) X^s - 2s X^(s-1); solve from the top power.
  if (auto bottom = rhs.bottom(); bottom && *bottom <= 0) {
    Rational above = 0;
    for (long s = -*bottom; s >= 0; --s) {
      Rational a = (rhs.coeff(-s) + Rational(2 * (s + 1)) * above) / (2 * (k + s));
      w.add_term(-s, a);
      above = a;
    }
  }
  if (!(delta_apply(k, w) == rhs.with_excess(k)))
    throw consistency_failure("delta_invert: back-substitution residual is nonzero");
  if (!pins.empty()) {
    int order = 0;
    for (const auto& pin : pins) order = std::max(order, pin.n);
    const Series s = xexpr_eval(w, order);
    for (const auto& pin : pins) {
      if (s.labelled_count(pin.n) != pin.value)
        throw consistency_failure("delta_invert: pin mismatch at n = " +
                                  std::to_string(pin.n) + " (symbolic " +
                                  to_string(s.labelled_count(pin.n)) + ", oracle " +
                                  to_string(pin.value) + ")");
    }
  }
  return w;
}

XExpr omega_apply(int k, const XExpr& base_pointed, const XExpr& e, Model model) {
  require_no_log(e, "omega_apply");
  require_no_log(base_pointed, "omega_apply");
  const XExpr d1 = theta_z(e);
  XExpr r = theta_z(d1);
  if (model == Model::graph) {
    r -= d1 * Rational(3);
    r -= e * Rational(2 * k);
  }
  r += base_pointed * d1 * Rational(2);
  return r;
}

XExpr lambda_sum(const std::vector<XExpr>& ws) {
  const int k = static_cast<int>(ws.size()) + 1;
  std::vector<XExpr> pointed;
  for (int t = 1; t <= k - 1; ++t) {
    const XExpr& w = ws[t - 1];
    if (w.excess() != t)
      throw invalid_input("lambda_sum: entry " + std::to_string(t) + " has excess " +
                          std::to_string(w.excess()));
    require_no_log(w, "lambda_sum");
    pointed.push_back(theta_z(w));
  }
  XExpr r(k);
  for (int t = 1; t <= k - 1; ++t) r += pointed[t - 1] * pointed[k - t - 1];
  return r;
}

Composition compose_serial(const XExpr& f_smooth, const Configuration& h,
                           bool with_path) {
  XExpr r = divide_by_t(theta_t(f_smooth) * theta_t(h.egf), 1);
  if (with_path) r = r * XExpr::x_power(1);
  return {r.with_excess(f_smooth.excess() + h.egf.excess() + 1), h.two_connected};
}

Composition compose_parallel(const XExpr& f_smooth, const Configuration& h) {
  // Edge pointing on w^k f(wz) is (k + theta).
  auto edge_pointed = [](const XExpr& e) {
    XExpr r = theta_t(e);
    if (e.excess() != 0) r += e * Rational(e.excess());
    return r;
  };
  XExpr r = divide_by_t(edge_pointed(f_smooth) * edge_pointed(h.egf), 2) * Rational(2);
  return {r.with_excess(f_smooth.excess() + h.egf.excess() + 1), h.two_connected};
}

}  // namespace sparsecc
