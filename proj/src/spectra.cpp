#include "abound/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "abound/chebyshev.hpp"
#include "abound/errors.hpp"

namespace abound {

namespace {

double off_diagonal_norm(const SymMatrix& m) {
  double s = 0.0;
  for (int i = 0; i < m.n; ++i) {
    for (int j = 0; j < m.n; ++j) {
      if (i != j) s += m(i, j) * m(i, j);
    }
  }
  return std::sqrt(s);
}

int require_regular(const Graph& g) {
  std::optional<int> k = is_regular(g);
  if (!k) throw NotRegular("graph is not regular");
  return *k;
}

}  // namespace

EigenDecomposition jacobi_eigen(SymMatrix m, double tol, int max_sweeps) {
  const int n = m.n;
  EigenDecomposition out;
  out.vectors.n = n;
  out.vectors.a.assign(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) out.vectors(i, i) = 1.0;
  SymMatrix& q = out.vectors;

  out.off_norm = off_diagonal_norm(m);
  while (out.off_norm >= tol && out.sweeps < max_sweeps) {
    ++out.sweeps;
    for (int p = 0; p < n - 1; ++p) {
      for (int r = p + 1; r < n; ++r) {
        double apr = m(p, r);
        if (apr == 0.0) continue;
        // Rotation angle from the stable tan formula.
        double theta = (m(r, r) - m(p, p)) / (2.0 * apr);
        double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;
        for (int i = 0; i < n; ++i) {
          double mip = m(i, p);
          double mir = m(i, r);
          m(i, p) = c * mip - s * mir;
          m(i, r) = s * mip + c * mir;
        }
        for (int j = 0; j < n; ++j) {
          double mpj = m(p, j);
          double mrj = m(r, j);
          m(p, j) = c * mpj - s * mrj;
          m(r, j) = s * mpj + c * mrj;
        }
        m(p, r) = 0.0;
        m(r, p) = 0.0;
        for (int i = 0; i < n; ++i) {
          double qip = q(i, p);
          double qir = q(i, r);
          q(i, p) = c * qip - s * qir;
          q(i, r) = s * qip + c * qir;
        }
      }
    }
    out.off_norm = off_diagonal_norm(m);
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return m(a, a) > m(b, b); });
  SymMatrix sorted{n, std::vector<double>(static_cast<std::size_t>(n) * n)};
  out.values.resize(n);
  for (int j = 0; j < n; ++j) {
    out.values[j] = m(order[j], order[j]);
    for (int i = 0; i < n; ++i) sorted(i, j) = q(i, order[j]);
  }
  out.vectors = std::move(sorted);
  return out;
}

SymMatrix adjacency_matrix(const Graph& g) {
  SymMatrix m{g.n(), std::vector<double>(static_cast<std::size_t>(g.n()) * g.n(), 0.0)};
  for (auto [u, v] : g.edges()) {
    m(u, v) = 1.0;
    m(v, u) = 1.0;
  }
  return m;
}

Spectrum adjacency_spectrum(const Graph& g) {
  Spectrum s;
  s.values = jacobi_eigen(adjacency_matrix(g)).values;
  return s;
}

double mu1(const Graph& g) {
  if (!is_connected(g)) throw DisconnectedGraph("mu1 needs a connected graph");
  if (g.n() < 2) throw std::invalid_argument("mu1 needs at least two vertices");
  return adjacency_spectrum(g).values[1];
}

bool is_connected(const Graph& g) {
  if (g.n() == 0) return true;
  std::vector<char> seen(g.n(), 0);
  std::vector<int> queue{0};
  seen[0] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (int w : g.neighbors(queue[head])) {
      if (!seen[w]) {
        seen[w] = 1;
        queue.push_back(w);
      }
    }
  }
  return queue.size() == static_cast<std::size_t>(g.n());
}

std::optional<int> is_regular(const Graph& g) {
  if (g.n() == 0) return std::nullopt;
  int k = g.degree(0);
  for (int v = 1; v < g.n(); ++v) {
    if (g.degree(v) != k) return std::nullopt;
  }
  return k;
}

std::vector<double> trace_formula_check(const Graph& g, int m_max) {
  const int k = require_regular(g);
  if (m_max < 0) throw std::invalid_argument("m_max must be >= 0");
  const int n = g.n();
  __extension__ typedef __int128 Big;
  const auto sz = static_cast<std::size_t>(n) * n;
  std::vector<Big> prev(sz, 0);
  std::vector<Big> cur(sz, 0);
  for (int i = 0; i < n; ++i) prev[static_cast<std::size_t>(i) * n + i] = 1;
  for (auto [u, v] : g.edges()) {
    cur[static_cast<std::size_t>(u) * n + v] = 1;
    cur[static_cast<std::size_t>(v) * n + u] = 1;
  }
  std::vector<std::vector<int>> nbrs(n);
  for (int v = 0; v < n; ++v) nbrs[v] = g.neighbors(v);

  auto trace = [&](const std::vector<Big>& p) {
    Big t = 0;
    for (int i = 0; i < n; ++i) t += p[static_cast<std::size_t>(i) * n + i];
    return static_cast<double>(t);
  };

  std::vector<double> out;
  out.push_back(trace(prev));
  if (m_max >= 1) out.push_back(trace(cur));
  std::vector<Big> next(sz);
  for (int m = 1; m < m_max; ++m) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        Big acc = 0;
        for (int w : nbrs[i]) acc += cur[static_cast<std::size_t>(w) * n + j];
        next[static_cast<std::size_t>(i) * n + j] =
            acc - static_cast<Big>(k - 1) * prev[static_cast<std::size_t>(i) * n + j];
      }
    }
    std::swap(prev, cur);
    std::swap(cur, next);
    out.push_back(trace(cur));
  }
  return out;
}

std::vector<double> spectral_measure_moments(const Graph& g, int m_max) {
  const int k = require_regular(g);
  if (m_max < 0) throw std::invalid_argument("m_max must be >= 0");
  if (k < 2) throw std::invalid_argument("spectral measure needs degree >= 2");
  Spectrum s = adjacency_spectrum(g);
  const double root = std::sqrt(static_cast<double>(k - 1));
  std::vector<double> out(m_max + 1, 0.0);
  for (double mu : s.values) {
    double x = mu / root;
    double prev = 1.0;
    double cur = x;
    out[0] += 1.0;
    if (m_max >= 1) out[1] += cur;
    for (int m = 2; m <= m_max; ++m) {
      double next = x * cur - prev;
      prev = cur;
      cur = next;
      out[m] += cur;
    }
  }
  for (double& v : out) v /= static_cast<double>(g.n());
  return out;
}

std::vector<std::pair<double, int>> group_multiplicities(const std::vector<double>& values,
                                                         double gap) {
  std::vector<std::pair<double, int>> out;
  double sum = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0 && std::abs(values[i] - values[i - 1]) < gap) {
      sum += values[i];
      ++out.back().second;
      out.back().first = sum / out.back().second;
    } else {
      sum = values[i];
      out.emplace_back(values[i], 1);
    }
  }
  return out;
}

std::string format_spectrum(const std::vector<double>& values, int precision) {
  std::ostringstream os;
  os.precision(precision);
  bool first = true;
  for (auto [v, mult] : group_multiplicities(values)) {
    if (!first) os << ", ";
    first = false;
    double shown = std::abs(v) < 1e-9 ? 0.0 : v;
    os << shown;
    if (mult > 1) os << "x" << mult;
  }
  return os.str();
}

}  // namespace abound
