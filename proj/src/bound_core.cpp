#include "abound/bound_core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "abound/errors.hpp"

namespace abound {

namespace {

constexpr double kWiden = 1e-9;
constexpr double kMarginS = 1e-6;
constexpr int kGoldenIterations = 60;

double widen_up(double v) { return v + kWiden * std::abs(v); }
double widen_down(double v) { return v - kWiden * std::abs(v); }

// Coefficients that vanish analytically come out as +-1e-17 or so.
std::vector<double> snap_tiny(std::vector<double> c) {
  double scale = 0.0;
  for (double v : c) scale = std::max(scale, std::abs(v));
  for (double& v : c) {
    if (std::abs(v) <= 1e-12 * scale) v = 0.0;
  }
  return c;
}

void check_degree_and_threshold(int k, double z) {
  if (k < 3) throw std::invalid_argument("k must be >= 3");
  if (!(z < 2.0 * std::sqrt(static_cast<double>(k - 1)))) {
    throw std::invalid_argument("z must be < 2 sqrt(k-1)");
  }
}

// n <= (M2 - M1') / (c0 - M1') with M1' = max(M1, 0) is valid in both the
// M1 <= 0 case (plain M2 / c0) and the M1 > 0 case (downshift form).
double finish_bound(double M1, double M2, double c0, bool clamp_m1_at_zero) {
  double m1 = widen_up(M1);
  if (clamp_m1_at_zero) m1 = std::max(m1, 0.0);
  double m2 = widen_up(M2);
  double cz = widen_down(c0);
  double denom = cz - m1;
  if (!(denom > 0.0)) {
    throw InfeasibleCertificate("c0 - M1 is not positive after rounding");
  }
  double bound = (m2 - m1) / denom;
  return std::nextafter(bound, std::numeric_limits<double>::infinity());
}

}  // namespace

std::string_view to_string(Method m) {
  switch (m) {
    case Method::linear: return "linear";
    case Method::two_term: return "two_term";
    case Method::nterm: return "nterm";
    case Method::machine: return "machine";
    case Method::downshift: return "downshift";
  }
  return "downshift";
}

Method method_from_string(std::string_view s) {
  if (s == "linear") return Method::linear;
  if (s == "two_term" || s == "two-term") return Method::two_term;
  if (s == "nterm") return Method::nterm;
  if (s == "machine") return Method::machine;
  if (s == "downshift") return Method::downshift;
  throw std::invalid_argument("unknown method: " + std::string(s));
}

IntervalSplit::IntervalSplit(int k, double z) {
  if (k < 3) throw std::invalid_argument("k must be >= 3");
  double root = std::sqrt(static_cast<double>(k - 1));
  L = static_cast<double>(k) / root;
  z_scaled = z / root;
  if (!(z_scaled >= -L && z_scaled < L)) {
    throw std::invalid_argument("z must satisfy -k <= z < k");
  }
}

long integer_vertex_bound(double bound) {
  double r = std::round(bound);
  if (std::abs(bound - r) <= 1e-9) return static_cast<long>(r);
  return static_cast<long>(std::floor(bound));
}

ChebCombo f_big(int m) {
  if (m < 1) throw std::invalid_argument("f_big: m must be >= 1");
  std::vector<double> c(2 * m + 1, 0.0);
  for (int j = 0; j <= m; ++j) c[2 * j] = 1.0;
  return ChebCombo(std::move(c));
}

ChebCombo f_hat(int m) {
  if (m < 1) throw std::invalid_argument("f_hat: m must be >= 1");
  double a = alpha(m);
  std::vector<double> odd_v(m);   // V_{2i+1}(alpha_m)
  std::vector<double> even_v(m);  // V_{2i}(alpha_m)
  for (int i = 0; i < m; ++i) {
    odd_v[i] = v_eval(2 * i + 1, a);
    even_v[i] = v_eval(2 * i, a);
  }
  std::vector<double> c(2 * m, 0.0);
  for (int j = 0; j < m; ++j) {
    double se = 0.0;
    double so = 0.0;
    for (int i = 0; i <= m - 1 - j; ++i) {
      se += odd_v[i];
      so += even_v[i];
    }
    c[2 * j] = se;
    c[2 * j + 1] = so;
  }
  return ChebCombo(snap_tiny(std::move(c)));
}

ChebCombo y_poly(int m) {
  if (m < 1) throw std::invalid_argument("y_poly: m must be >= 1");
  MonoPoly vm(v_monomial(m));
  MonoPoly square = vm * vm;
  double remainder = 0.0;
  MonoPoly q = square.divide_linear(alpha(m), &remainder);
  double scale = square.eval_error_bound(alpha(m)) / std::numeric_limits<double>::epsilon();
  if (std::abs(remainder) > 1e-8 * std::max(1.0, scale)) {
    throw std::logic_error("y_poly: alpha_m is not a root of V_m (remainder " +
                           std::to_string(std::abs(remainder)) + ")");
  }
  ChebCombo y = from_mono(q);
  return ChebCombo(snap_tiny(std::vector<double>(y.coeffs().begin(), y.coeffs().end())));
}

ChebCombo shift_expand(const ChebCombo& c, double s) {
  if (!(s > 0.0)) throw std::invalid_argument("shift_expand: s must be > 0");
  if (!c.all_nonnegative()) {
    throw std::invalid_argument("shift_expand: coefficients must be nonnegative");
  }
  if (c.is_zero()) return ChebCombo();

  // eps[j][i]: coefficient of V_i(x) in V_j(x + s).
  // gap[j][i] = eps[j][i+1] - eps[j-1][i] >= 0.  Writing the recurrence in
  // terms of gap keeps every step a sum of nonnegative terms.
  const std::size_t n = c.degree();
  std::vector<std::vector<double>> eps(n + 1);
  std::vector<std::vector<double>> gap(n + 1);
  eps[0] = {1.0};
  gap[0] = {};
  if (n >= 1) {
    eps[1] = {s, 1.0};
    gap[1] = {0.0};
  }
  for (std::size_t j = 2; j <= n; ++j) {
    const auto& prev = eps[j - 1];
    const auto& prev_gap = gap[j - 1];
    std::vector<double> e(j + 1, 0.0);
    e[0] = s * prev[0] + prev_gap[0];
    for (std::size_t i = 1; i < j - 1; ++i) e[i] = prev[i - 1] + s * prev[i] + prev_gap[i];
    e[j - 1] = prev[j - 2] + s * prev[j - 1];
    e[j] = 1.0;

    std::vector<double> g(j, 0.0);
    for (std::size_t i = 0; i + 1 < j; ++i) {
      double next_gap = (i + 1 < prev_gap.size()) ? prev_gap[i + 1] : 0.0;
      g[i] = next_gap + s * prev[i + 1];
    }
    g[j - 1] = 0.0;
    eps[j] = std::move(e);
    gap[j] = std::move(g);
  }

  std::vector<double> out(n + 1, 0.0);
  for (std::size_t j = 0; j <= n; ++j) {
    double cj = c.coeff(j);
    if (cj == 0.0) continue;
    for (std::size_t i = 0; i <= j; ++i) out[i] += cj * eps[j][i];
  }
  return ChebCombo(std::move(out));
}

BoundCertificate bound_from_function(const ChebCombo& f, int k, double z, Method method) {
  check_degree_and_threshold(k, z);
  if (!f.all_nonnegative()) {
    throw std::invalid_argument("bound_from_function: coefficients must be nonnegative");
  }
  IntervalSplit split(k, z);
  MonoPoly p = to_mono(f);
  SupResult s1 = sup_on_interval(p, -split.L, split.z_scaled);
  SupResult s2 = sup_on_interval(p, split.z_scaled, split.L);
  double c0 = f.coeff(0);
  if (!(s1.max - c0 < 0.0)) {
    throw InfeasibleCertificate("f - c0 is not strictly negative on [-L, z/sqrt(k-1)] (sup " +
                                std::to_string(s1.max - c0) + ")");
  }

  BoundCertificate cert;
  cert.k = k;
  cert.z = z;
  cert.method = method;
  cert.f = f;
  cert.M1 = s1.max;
  cert.M2 = s2.max;
  cert.c0 = c0;
  cert.vertex_bound = finish_bound(cert.M1, cert.M2, cert.c0, false);
  cert.vertex_bound_int = integer_vertex_bound(cert.vertex_bound);
  return cert;
}

int m_min(int k, double z) {
  check_degree_and_threshold(k, z);
  double ratio = z / (2.0 * std::sqrt(static_cast<double>(k - 1)));
  ratio = std::clamp(ratio, -1.0, 1.0);
  double t = std::numbers::pi / std::acos(ratio);
  double ceil_t = std::ceil(t);
  int m = static_cast<int>(ceil_t) - 1;
  if (ceil_t == t) ++m;  // an exact integer leaves no gap below alpha_m
  m = std::max(m, 1);
  // alpha_m is only known to rounding, so strictness is checked with a gap.
  constexpr double kGap = 1e-12;
  double z_scaled = z / std::sqrt(static_cast<double>(k - 1));
  while (!(z_scaled < alpha(m) - kGap)) ++m;
  while (m > 1 && z_scaled < alpha(m - 1) - kGap) --m;
  return m;
}

BoundCertificate machine_bound(int k, double z, std::optional<int> m, std::optional<double> s) {
  check_degree_and_threshold(k, z);
  IntervalSplit split(k, z);
  int order = m ? *m : m_min(k, z);
  if (order < 1) throw std::invalid_argument("machine_bound: m must be >= 1");
  double width = alpha(order) - split.z_scaled;
  if (!(width > 0.0)) {
    throw std::invalid_argument("machine_bound: z/sqrt(k-1) must be below alpha_m for m = " +
                                std::to_string(order));
  }
  if (s && !(*s > 0.0 && *s < width)) {
    throw std::invalid_argument("machine_bound: s must lie in (0, " + std::to_string(width) + ")");
  }

  ChebCombo fh = f_hat(order);
  auto objective = [&](double shift) {
    double c0 = shift_expand(fh, shift).coeff(0);
    return fh(split.L + shift) / c0;
  };

  double shift = 0.0;
  if (s) {
    shift = *s;
  } else {
    double lo = kMarginS;
    double hi = width - kMarginS;
    if (!(hi > lo)) {
      shift = 0.5 * width;
    } else {
      // Golden-section search; the best sampled point wins, so no convexity
      // assumption is needed for correctness.
      const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
      double best_s = lo;
      double best_v = objective(lo);
      auto consider = [&](double x, double v) {
        if (v < best_v) {
          best_v = v;
          best_s = x;
        }
      };
      consider(hi, objective(hi));
      double a = lo;
      double b = hi;
      double x1 = b - inv_phi * (b - a);
      double x2 = a + inv_phi * (b - a);
      double f1 = objective(x1);
      double f2 = objective(x2);
      consider(x1, f1);
      consider(x2, f2);
      for (int it = 0; it < kGoldenIterations; ++it) {
        if (f1 <= f2) {
          b = x2;
          x2 = x1;
          f2 = f1;
          x1 = b - inv_phi * (b - a);
          f1 = objective(x1);
          consider(x1, f1);
        } else {
          a = x1;
          x1 = x2;
          f1 = f2;
          x2 = a + inv_phi * (b - a);
          f2 = objective(x2);
          consider(x2, f2);
        }
      }
      shift = best_s;
    }
  }

  ChebCombo f = shift_expand(fh, shift);
  MonoPoly p = to_mono(f);
  SupResult s1 = sup_on_interval(p, -split.L, split.z_scaled);
  SupResult s2 = sup_on_interval(p, split.z_scaled, split.L);
  double c0 = f.coeff(0);
  if (!(s1.max - c0 < 0.0)) {
    throw InfeasibleCertificate("shifted certificate is not negative enough on I1");
  }

  BoundCertificate cert;
  cert.k = k;
  cert.z = z;
  cert.method = Method::machine;
  cert.f = f;
  cert.s = shift;
  cert.m = order;
  cert.M1 = s1.max;
  cert.M2 = s2.max;
  cert.c0 = c0;
  cert.vertex_bound = finish_bound(cert.M1, cert.M2, cert.c0, true);
  cert.vertex_bound_int = integer_vertex_bound(cert.vertex_bound);
  return cert;
}

BoundCertificate linear_bound(int k, double z) {
  if (!(z < 0.0)) throw std::invalid_argument("linear_bound: requires z < 0");
  return bound_from_function(ChebCombo::basis(1), k, z, Method::linear);
}

SigmaRange two_term_sigma_range(int k, double z) {
  double kk = static_cast<double>(k);
  double root = std::sqrt(kk - 1.0);
  double zs = z / root;
  // f(-L) < 0.
  SigmaRange r{0.0, kk * root / (kk * kk - kk + 1.0)};
  // f(z_scaled) < 0, i.e. sigma (zs^2 - 1) < -zs.  f is convex, so the two
  // endpoints decide negativity on the whole interval.
  double q = zs * zs - 1.0;
  if (q < 0.0) {
    r.lo = std::max(r.lo, -zs / q);
  } else if (q > 0.0) {
    r.hi = std::min(r.hi, -zs / q);
  } else if (zs > 0.0) {
    r.hi = r.lo;
  }
  return r;
}

BoundCertificate two_term_bound(int k, double z, std::optional<double> sigma) {
  check_degree_and_threshold(k, z);
  double kk = static_cast<double>(k);
  if (!(z < (kk - 1.0) / kk)) {
    throw std::invalid_argument("two_term_bound: requires z < (k-1)/k");
  }
  double sig = sigma ? *sigma : std::sqrt(kk - 1.0) / (kk - z);
  SigmaRange range = two_term_sigma_range(k, z);
  if (!range.contains(sig)) {
    throw std::invalid_argument("two_term_bound: sigma " + std::to_string(sig) +
                                " outside admissible range (" + std::to_string(range.lo) + ", " +
                                std::to_string(range.hi) + ")");
  }
  return bound_from_function(ChebCombo({0.0, 1.0, sig}), k, z, Method::two_term);
}

}  // namespace abound
