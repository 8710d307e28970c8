#include "abound/chebyshev.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace abound {

namespace {

constexpr int kMaxTableDegree = 64;

// Row m holds the monomial coefficients of V_m.
const std::vector<std::vector<double>>& v_table() {
  static const std::vector<std::vector<double>> table = [] {
    std::vector<std::vector<double>> t(kMaxTableDegree + 1);
    t[0] = {1.0};
    t[1] = {0.0, 1.0};
    for (int m = 2; m <= kMaxTableDegree; ++m) {
      std::vector<double> row(m + 1, 0.0);
      for (int i = 0; i < m; ++i) row[i + 1] += t[m - 1][i];
      for (int i = 0; i < m - 1; ++i) row[i] -= t[m - 2][i];
      t[m] = std::move(row);
    }
    return t;
  }();
  return table;
}

// Row i holds the V-basis coefficients of x^i (x V_j = V_{j+1} + V_{j-1}).
const std::vector<std::vector<double>>& power_table() {
  static const std::vector<std::vector<double>> table = [] {
    std::vector<std::vector<double>> t(kMaxTableDegree + 1);
    t[0] = {1.0};
    for (int i = 0; i < kMaxTableDegree; ++i) {
      std::vector<double> row(i + 2, 0.0);
      for (int j = 0; j <= i; ++j) {
        row[j + 1] += t[i][j];
        if (j >= 1) row[j - 1] += t[i][j];
      }
      t[i + 1] = std::move(row);
    }
    return t;
  }();
  return table;
}

void check_table_degree(std::size_t degree) {
  if (degree > static_cast<std::size_t>(kMaxTableDegree)) {
    throw std::invalid_argument("basis conversion limited to degree " +
                                std::to_string(kMaxTableDegree));
  }
}

int sign_of(double v) { return (v > 0) - (v < 0); }

constexpr double kRootWidth = 1e-12;

double bisect(const MonoPoly& p, double lo, double hi, int sign_lo) {
  while (hi - lo > kRootWidth) {
    double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    int s = sign_of(p(mid));
    if (s == 0) return mid;
    if (s == sign_lo) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

void sort_unique(std::vector<double>& xs) {
  std::sort(xs.begin(), xs.end());
  std::vector<double> out;
  out.reserve(xs.size());
  for (double x : xs) {
    if (out.empty() || x - out.back() > kRootWidth) out.push_back(x);
  }
  xs = std::move(out);
}

// Roots of p in [a, b].  The roots of p' split [a, b] into pieces on which p
// is monotone, so each piece holds at most one sign change.  Critical points
// where |p| is below its evaluation error are kept as (even) roots.
std::vector<double> roots_impl(const MonoPoly& p, double a, double b,
                               std::vector<double>* critical_out) {
  std::vector<double> roots;
  if (critical_out) critical_out->clear();
  if (p.is_zero() || p.degree() == 0) return roots;
  if (p.degree() == 1) {
    double r = -p.coeff(0) / p.coeff(1);
    if (r >= a && r <= b) roots.push_back(r);
    return roots;
  }

  std::vector<double> crit = roots_impl(p.derivative(), a, b, nullptr);
  std::vector<double> breaks;
  breaks.reserve(crit.size() + 2);
  breaks.push_back(a);
  for (double c : crit) {
    if (c > a && c < b) breaks.push_back(c);
  }
  breaks.push_back(b);

  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    double lo = breaks[i];
    double hi = breaks[i + 1];
    double flo = p(lo);
    double fhi = p(hi);
    if (flo == 0.0) {
      roots.push_back(lo);
      continue;
    }
    if (sign_of(flo) * sign_of(fhi) < 0) roots.push_back(bisect(p, lo, hi, sign_of(flo)));
  }
  if (p(b) == 0.0) roots.push_back(b);
  for (double c : crit) {
    if (std::abs(p(c)) <= p.eval_error_bound(c)) roots.push_back(c);
  }
  sort_unique(roots);
  if (critical_out) *critical_out = std::move(crit);
  return roots;
}

}  // namespace

// ---------------------------------------------------------------- ChebCombo

ChebCombo::ChebCombo(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

ChebCombo ChebCombo::basis(std::size_t j) {
  std::vector<double> c(j + 1, 0.0);
  c[j] = 1.0;
  return ChebCombo(std::move(c));
}

void ChebCombo::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0.0) coeffs_.pop_back();
}

bool ChebCombo::all_nonnegative() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](double c) { return c >= 0.0; });
}

double ChebCombo::operator()(double x) const noexcept {
  double b1 = 0.0;
  double b2 = 0.0;
  for (std::size_t j = coeffs_.size(); j-- > 0;) {
    double b0 = coeffs_[j] + x * b1 - b2;
    b2 = b1;
    b1 = b0;
  }
  return b1;
}

// ---------------------------------------------------------------- MonoPoly

MonoPoly::MonoPoly(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

void MonoPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0.0) coeffs_.pop_back();
}

double MonoPoly::operator()(double x) const noexcept {
  double acc = 0.0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  return acc;
}

double MonoPoly::eval_error_bound(double x) const noexcept {
  double ax = std::abs(x);
  double acc = 0.0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * ax + std::abs(coeffs_[i]);
  double n = static_cast<double>(coeffs_.size());
  return (2.0 * n + 1.0) * std::numeric_limits<double>::epsilon() * acc;
}

MonoPoly MonoPoly::derivative() const {
  if (coeffs_.size() <= 1) return MonoPoly();
  std::vector<double> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<double>(i);
  return MonoPoly(std::move(d));
}

MonoPoly MonoPoly::operator*(const MonoPoly& other) const {
  if (is_zero() || other.is_zero()) return MonoPoly();
  std::vector<double> out(coeffs_.size() + other.coeffs_.size() - 1, 0.0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * other.coeffs_[j];
  }
  return MonoPoly(std::move(out));
}

MonoPoly MonoPoly::divide_linear(double root, double* remainder) const {
  if (coeffs_.empty()) {
    if (remainder) *remainder = 0.0;
    return MonoPoly();
  }
  std::vector<double> q(coeffs_.size() - 1, 0.0);
  double carry = 0.0;
  for (std::size_t i = coeffs_.size(); i-- > 1;) {
    carry = coeffs_[i] + carry * root;
    q[i - 1] = carry;
  }
  if (remainder) *remainder = coeffs_[0] + carry * root;
  return MonoPoly(std::move(q));
}

// ---------------------------------------------------------------- free functions

double v_eval(int m, double x) {
  if (m < 0) throw std::invalid_argument("v_eval: m must be nonnegative");
  if (m == 0) return 1.0;
  double prev = 1.0;
  double cur = x;
  for (int j = 1; j < m; ++j) {
    double next = x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double alpha(int m) {
  if (m < 1) throw std::invalid_argument("alpha: m must be >= 1");
  return 2.0 * std::cos(std::numbers::pi / static_cast<double>(m + 1));
}

const std::vector<double>& v_monomial(int m) {
  if (m < 0) throw std::invalid_argument("v_monomial: m must be nonnegative");
  check_table_degree(static_cast<std::size_t>(m));
  return v_table()[m];
}

MonoPoly to_mono(const ChebCombo& c) {
  if (c.is_zero()) return MonoPoly();
  check_table_degree(c.degree());
  const auto& table = v_table();
  std::vector<double> out(c.degree() + 1, 0.0);
  for (std::size_t j = 0; j <= c.degree(); ++j) {
    double cj = c.coeff(j);
    if (cj == 0.0) continue;
    const auto& row = table[j];
    for (std::size_t i = 0; i < row.size(); ++i) out[i] += cj * row[i];
  }
  return MonoPoly(std::move(out));
}

ChebCombo from_mono(const MonoPoly& p) {
  if (p.is_zero()) return ChebCombo();
  check_table_degree(p.degree());
  const auto& table = power_table();
  std::vector<double> out(p.degree() + 1, 0.0);
  for (std::size_t i = 0; i <= p.degree(); ++i) {
    double pi = p.coeff(i);
    if (pi == 0.0) continue;
    const auto& row = table[i];
    for (std::size_t j = 0; j < row.size(); ++j) out[j] += pi * row[j];
  }
  return ChebCombo(std::move(out));
}

std::vector<double> real_roots(const MonoPoly& p, double a, double b) {
  if (a > b) throw std::invalid_argument("real_roots: empty interval");
  return roots_impl(p, a, b, nullptr);
}

SupResult sup_on_interval(const MonoPoly& p, double a, double b) {
  if (!(a <= b)) throw std::invalid_argument("sup_on_interval: requires a <= b");
  if (p.is_zero()) return {a, 0.0};

  std::vector<double> candidates{a, b};
  if (p.degree() >= 2) {
    MonoPoly dp = p.derivative();
    std::vector<double> second;
    std::vector<double> first = roots_impl(dp, a, b, &second);
    candidates.insert(candidates.end(), first.begin(), first.end());
    candidates.insert(candidates.end(), second.begin(), second.end());
  }

  MonoPoly dp = p.derivative();
  SupResult best{a, -std::numeric_limits<double>::infinity()};
  for (double x : candidates) {
    if (x < a || x > b) continue;
    // Horner error plus the slack from locating a critical point to kRootWidth.
    double v = p(x) + p.eval_error_bound(x) + std::abs(dp(x)) * kRootWidth;
    if (v > best.max) best = {x, v};
  }
  return best;
}

}  // namespace abound
