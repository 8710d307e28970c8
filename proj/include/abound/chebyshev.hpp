#pragma once

// Rescaled second-kind Chebyshev polynomials V_m(x) = U_m(x/2).
//
// V_0 = 1, V_1 = x, V_{j+1} = x V_j - V_{j-1}.  The roots of V_m are
// 2cos(l*pi/(m+1)), l = 1..m, and every V_m has integer monomial
// coefficients, which is what keeps basis changes exact.

#include <cstddef>
#include <span>
#include <vector>

namespace abound {

class MonoPoly;

/// Finite combination sum_j c_j V_j(x).
class ChebCombo {
 public:
  ChebCombo() = default;
  explicit ChebCombo(std::vector<double> coeffs);

  /// The basis vector V_j.
  static ChebCombo basis(std::size_t j);

  std::span<const double> coeffs() const noexcept { return coeffs_; }
  double coeff(std::size_t j) const noexcept {
    return j < coeffs_.size() ? coeffs_[j] : 0.0;
  }
  /// Degree of the combination; the zero combination reports 0.
  std::size_t degree() const noexcept {
    return coeffs_.empty() ? 0 : coeffs_.size() - 1;
  }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool all_nonnegative() const noexcept;

  /// Clenshaw evaluation.
  double operator()(double x) const noexcept;

  friend bool operator==(const ChebCombo&, const ChebCombo&) = default;

 private:
  void trim();
  std::vector<double> coeffs_;
};

/// Polynomial in the monomial basis, increasing powers.
class MonoPoly {
 public:
  MonoPoly() = default;
  explicit MonoPoly(std::vector<double> coeffs);

  std::span<const double> coeffs() const noexcept { return coeffs_; }
  double coeff(std::size_t i) const noexcept {
    return i < coeffs_.size() ? coeffs_[i] : 0.0;
  }
  std::size_t degree() const noexcept {
    return coeffs_.empty() ? 0 : coeffs_.size() - 1;
  }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  double operator()(double x) const noexcept;
  /// Running error bound of Horner's rule at x (Higham, 5.7).
  double eval_error_bound(double x) const noexcept;

  MonoPoly derivative() const;
  MonoPoly operator*(const MonoPoly& other) const;

  /// Divides by (x - root).  Returns the quotient, remainder in *remainder.
  MonoPoly divide_linear(double root, double* remainder) const;

  friend bool operator==(const MonoPoly&, const MonoPoly&) = default;

 private:
  void trim();
  std::vector<double> coeffs_;
};

/// V_m(x) by the three-term recurrence.
double v_eval(int m, double x);

/// Largest root of V_m, 2cos(pi/(m+1)).  Requires m >= 1.
double alpha(int m);

/// Integer monomial coefficients of V_m.
const std::vector<double>& v_monomial(int m);

MonoPoly to_mono(const ChebCombo& c);
ChebCombo from_mono(const MonoPoly& p);

/// Sorted real roots of p in [a, b] (odd and even multiplicity alike, as far
/// as sign changes and derivative critical points reveal them).
std::vector<double> real_roots(const MonoPoly& p, double a, double b);

struct SupResult {
  double argmax;
  double max;
};

/// Maximum of p on [a, b], widened upward by the Horner error bound so it is
/// safe to use as an upper bound.  Throws std::invalid_argument if a > b.
SupResult sup_on_interval(const MonoPoly& p, double a, double b);

}  // namespace abound
