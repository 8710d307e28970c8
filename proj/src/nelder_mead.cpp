#include "abound/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace abound {

namespace {

using Point = std::vector<double>;

struct Vertex {
  Point x;
  double f;
};

Point affine(const Point& a, const Point& b, double t) {
  // a + t (b - a)
  Point out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + t * (b[i] - a[i]);
  return out;
}

double diameter(const std::vector<Vertex>& s) {
  double d = 0.0;
  for (std::size_t v = 1; v < s.size(); ++v) {
    for (std::size_t i = 0; i < s[0].x.size(); ++i) d = std::max(d, std::abs(s[v].x[i] - s[0].x[i]));
  }
  return d;
}

}  // namespace

NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                             std::vector<double> x0, const NelderMeadOptions& opts) {
  if (x0.empty()) throw std::invalid_argument("nelder_mead: empty start point");
  const std::size_t n = x0.size();
  const double dn = static_cast<double>(n);
  const double rho = 1.0;
  const double chi = 1.0 + 2.0 / dn;
  const double gamma = 0.75 - 0.5 / dn;
  const double sigma = 1.0 - 1.0 / dn;

  NelderMeadResult res;
  auto eval = [&](const Point& x) {
    ++res.evaluations;
    double v = f(x);
    return std::isnan(v) ? HUGE_VAL : v;
  };

  auto build = [&](const Point& base, double step) {
    std::vector<Vertex> s;
    s.push_back({base, eval(base)});
    for (std::size_t i = 0; i < n; ++i) {
      Point p = base;
      p[i] += step;
      s.push_back({p, eval(p)});
    }
    return s;
  };

  std::vector<Vertex> simplex = build(x0, opts.initial_step);
  auto order = [&] {
    std::stable_sort(simplex.begin(), simplex.end(),
                     [](const Vertex& a, const Vertex& b) { return a.f < b.f; });
  };
  order();
  double step = opts.initial_step;
  double best_at_rebuild = simplex[0].f;

  while (res.iterations < opts.max_iters) {
    ++res.iterations;
    Vertex& worst = simplex[n];
    const Vertex& second = simplex[n - 1];

    Point centroid(n, 0.0);
    for (std::size_t v = 0; v < n; ++v) {
      for (std::size_t i = 0; i < n; ++i) centroid[i] += simplex[v].x[i] / dn;
    }

    Point xr = affine(centroid, worst.x, -rho);
    double fr = eval(xr);
    if (fr < simplex[0].f) {
      Point xe = affine(centroid, worst.x, -rho * chi);
      double fe = eval(xe);
      if (fe < fr) {
        worst = {std::move(xe), fe};
      } else {
        worst = {std::move(xr), fr};
      }
    } else if (fr < second.f) {
      worst = {std::move(xr), fr};
    } else {
      bool outside = fr < worst.f;
      Point xc = outside ? affine(centroid, xr, gamma) : affine(centroid, worst.x, gamma);
      double fc = eval(xc);
      if (fc < std::min(fr, worst.f)) {
        worst = {std::move(xc), fc};
      } else {
        for (std::size_t v = 1; v <= n; ++v) {
          simplex[v].x = affine(simplex[0].x, simplex[v].x, sigma);
          simplex[v].f = eval(simplex[v].x);
        }
      }
    }
    order();

    bool collapsed = (simplex[n].f - simplex[0].f) <= opts.f_tol * (1.0 + std::abs(simplex[0].f)) &&
                     diameter(simplex) <= opts.x_tol;
    if (collapsed) {
      if (!opts.restart_on_collapse) break;
      if (!(simplex[0].f < best_at_rebuild) && step < opts.initial_step) break;
      best_at_rebuild = simplex[0].f;
      step = std::max(step * 0.5, 1e-3);
      simplex = build(simplex[0].x, step);
      order();
    }
  }

  res.x = simplex[0].x;
  res.value = simplex[0].f;
  return res;
}

}  // namespace abound
