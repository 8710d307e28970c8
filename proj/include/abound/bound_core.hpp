#pragma once

// Vertex bounds for k-regular graphs with second eigenvalue mu_1 <= z.
//
// Let nu be the uniform measure on the rescaled spectrum mu_j / sqrt(k-1),
// which lives on [-L, L] with L = k / sqrt(k-1).  The trace formula gives
// int V_j dnu >= 0 for every j.  For f = sum c_j V_j with c_j >= 0 and
// f - c_0 < 0 on I1 = [-L, z/sqrt(k-1)], splitting the integral gives
//
//     nu(I2) >= (c_0 - M1) / (M2 - M1),   M_i = sup_{I_i} f,
//
// and nu(I2) = 1/n whenever mu_1 <= z, so n <= (M2 - M1) / (c_0 - M1).

#include <optional>
#include <string>
#include <string_view>

#include "abound/chebyshev.hpp"

namespace abound {

enum class Method { linear, two_term, nterm, machine, downshift };

std::string_view to_string(Method m);
Method method_from_string(std::string_view s);

struct BoundCertificate {
  int k = 0;
  double z = 0.0;
  Method method = Method::downshift;
  ChebCombo f;
  std::optional<double> s;
  std::optional<int> m;
  double M1 = 0.0;
  double M2 = 0.0;
  double c0 = 0.0;
  double vertex_bound = 0.0;
  long vertex_bound_int = 0;

  /// Lower bound on the spectral mass above z, (c0 - M1) / (M2 - M1).
  double mass_lower_bound() const { return 1.0 / vertex_bound; }

  friend bool operator==(const BoundCertificate&, const BoundCertificate&) = default;
};

/// The split [-L, z_scaled] | [z_scaled, L] of the rescaled spectrum range.
struct IntervalSplit {
  double L;
  double z_scaled;

  /// Throws std::invalid_argument unless k >= 3 and -L <= z_scaled < L.
  IntervalSplit(int k, double z);
};

/// sum_{j=0}^m V_{2j}, which equals V_m^2.
ChebCombo f_big(int m);

/// F_m / (x - alpha_m) from the closed-form coefficient sums.
ChebCombo f_hat(int m);

/// V_m^2 / (x - alpha_m) by synthetic division in the monomial basis.
ChebCombo y_poly(int m);

/// The combination g with g(x) = c(x + s).  Requires s > 0 and c >= 0
/// coefficientwise; the result is nonnegative with a positive constant term.
ChebCombo shift_expand(const ChebCombo& c, double s);

/// Certifies a vertex bound from any nonnegative V-combination.  Throws
/// InfeasibleCertificate when f - c_0 is not strictly negative on I1.
BoundCertificate bound_from_function(const ChebCombo& f, int k, double z,
                                     Method method = Method::downshift);

/// Least m with z / sqrt(k-1) < alpha_m.
int m_min(int k, double z);

/// Shifted F-hat certificate, bound F-hat_m(L + s) / c_0(s).  When s is
/// absent it is chosen by golden-section search on the admissible interval.
BoundCertificate machine_bound(int k, double z, std::optional<int> m = std::nullopt,
                               std::optional<double> s = std::nullopt);

/// Certificate V_1, bound (z - k) / z.  Requires z < 0.
BoundCertificate linear_bound(int k, double z);

struct SigmaRange {
  double lo;
  double hi;
  bool contains(double sigma) const { return sigma > lo && sigma < hi; }
};

/// Open interval of sigma for which V_1 + sigma V_2 is negative on I1.
SigmaRange two_term_sigma_range(int k, double z);

/// Certificate V_1 + sigma V_2; default sigma = sqrt(k-1) / (k - z).
/// Requires z < (k-1)/k.
BoundCertificate two_term_bound(int k, double z, std::optional<double> sigma = std::nullopt);

/// Integer vertex bound from a real one: floor, except that values within
/// 1e-9 of an integer keep that integer.
long integer_vertex_bound(double bound);

}  // namespace abound
