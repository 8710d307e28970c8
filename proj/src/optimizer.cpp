#include "abound/optimizer.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <thread>

#include "abound/errors.hpp"
#include "abound/nelder_mead.hpp"

namespace abound {

namespace {

constexpr double kPenalty = 1e6;
constexpr double kLogClamp = 40.0;
constexpr double kPadLog = -12.0;

struct Candidate {
  std::vector<double> alpha;  // alpha_1..alpha_N, unit norm
  double value = std::numeric_limits<double>::infinity();
  bool feasible = false;
};

std::vector<double> normalized_exp(const std::vector<double>& t) {
  std::vector<double> a(t.size());
  double norm = 0.0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    a[i] = std::exp(std::clamp(t[i], -kLogClamp, kLogClamp));
    norm += a[i] * a[i];
  }
  norm = std::sqrt(norm);
  for (double& v : a) v /= norm;
  return a;
}

ChebCombo combo_from_alpha(const std::vector<double>& alpha) {
  std::vector<double> c(alpha.size() + 1, 0.0);
  std::copy(alpha.begin(), alpha.end(), c.begin() + 1);
  return ChebCombo(std::move(c));
}

class Objective {
 public:
  Objective(int k, double z, double margin) : split_(k, z), margin_(margin) {}

  // Minimized quantity: the vertex bound (M2 - M1) / (-M1) when feasible,
  // otherwise a penalty growing with sup_{I1} f.
  double operator()(const std::vector<double>& alpha, bool* feasible = nullptr) const {
    MonoPoly p = to_mono(combo_from_alpha(alpha));
    double m1 = sup_on_interval(p, -split_.L, split_.z_scaled).max;
    bool ok = m1 <= -margin_;
    if (feasible) *feasible = ok;
    if (!ok) return kPenalty * (1.0 + m1 + margin_);
    double m2 = sup_on_interval(p, split_.z_scaled, split_.L).max;
    return (m2 - m1) / (-m1);
  }

 private:
  IntervalSplit split_;
  double margin_;
};

// Log coordinates of a nonnegative coefficient vector; zeros become small.
std::vector<double> to_log(const std::vector<double>& alpha) {
  double scale = 0.0;
  for (double a : alpha) scale = std::max(scale, a);
  std::vector<double> t(alpha.size());
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    t[i] = alpha[i] > scale * std::exp(kPadLog) ? std::log(alpha[i] / scale) : kPadLog;
  }
  return t;
}

std::vector<double> tail_coeffs(const ChebCombo& f, int terms) {
  std::vector<double> a(terms, 0.0);
  for (int j = 1; j <= terms; ++j) a[j - 1] = f.coeff(j);
  return a;
}

// Deterministic starting points built from the closed-form certificates.
std::vector<std::vector<double>> structured_seeds(int k, double z, int terms) {
  std::vector<std::vector<double>> seeds;
  std::vector<double> lin(terms, 0.0);
  lin[0] = 1.0;
  seeds.push_back(to_log(lin));
  if (terms >= 2) {
    std::vector<double> two(terms, 0.0);
    two[0] = 1.0;
    two[1] = std::sqrt(k - 1.0) / (k - z);
    if (two[1] > 0.0) seeds.push_back(to_log(two));
  }
  for (int m = 1; 2 * m - 1 <= terms; ++m) {
    try {
      BoundCertificate c = machine_bound(k, z, m);
      seeds.push_back(to_log(tail_coeffs(c.f, terms)));
    } catch (const std::exception&) {
    }
  }
  return seeds;
}

std::vector<double> random_seed(std::uint64_t seed, int index, int terms) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index)};
  std::mt19937_64 rng(seq);
  std::uniform_real_distribution<double> dist(-4.0, 0.0);
  std::vector<double> t(terms);
  for (double& v : t) v = dist(rng);
  return t;
}

Candidate run_restart(const Objective& obj, std::vector<double> t0, int max_iters) {
  auto fn = [&](const std::vector<double>& t) { return obj(normalized_exp(t)); };
  NelderMeadOptions opts;
  opts.max_iters = max_iters;
  NelderMeadResult r = nelder_mead(fn, std::move(t0), opts);
  Candidate c;
  c.alpha = normalized_exp(r.x);
  c.value = obj(c.alpha, &c.feasible);
  return c;
}

}  // namespace

void OptimizerConfig::validate() const {
  if (terms < 1) throw std::invalid_argument("terms must be >= 1");
  if (restarts < 1) throw std::invalid_argument("restarts must be >= 1");
  if (max_iters < 1) throw std::invalid_argument("max_iters must be >= 1");
  if (!(feasibility_margin >= 0.0)) throw std::invalid_argument("feasibility_margin must be >= 0");
  if (threads < 0) throw std::invalid_argument("threads must be >= 0");
}

BoundCertificate optimize_nterm(int k, double z, const OptimizerConfig& cfg) {
  cfg.validate();
  if (k < 3) throw std::invalid_argument("k must be >= 3");
  if (!(z < 2.0 * std::sqrt(static_cast<double>(k - 1)))) {
    throw std::invalid_argument("z must be < 2 sqrt(k-1)");
  }
  Objective obj(k, z, cfg.feasibility_margin);

  std::vector<std::vector<double>> starts = structured_seeds(k, z, cfg.terms);
  if (static_cast<int>(starts.size()) > cfg.restarts) starts.resize(cfg.restarts);
  for (int i = static_cast<int>(starts.size()); i < cfg.restarts; ++i) {
    starts.push_back(random_seed(cfg.seed, i, cfg.terms));
  }

  std::vector<Candidate> results(starts.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < starts.size(); i = next++) {
      results[i] = run_restart(obj, starts[i], cfg.max_iters);
    }
  };
  unsigned nthreads = cfg.threads > 0 ? static_cast<unsigned>(cfg.threads)
                                      : std::max(1u, std::thread::hardware_concurrency());
  nthreads = std::min<unsigned>(nthreads, static_cast<unsigned>(starts.size()));
  if (nthreads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < nthreads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  // Lowest restart index wins ties, so the answer matches a sequential run.
  std::vector<std::size_t> order(results.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return results[a].value < results[b].value;
  });
  for (std::size_t i : order) {
    if (!results[i].feasible) break;
    try {
      return bound_from_function(combo_from_alpha(results[i].alpha), k, z, Method::nterm);
    } catch (const InfeasibleCertificate&) {
    }
  }
  throw NoFeasiblePoint("no restart found a certificate negative on [-L, z/sqrt(k-1)] with " +
                        std::to_string(cfg.terms) + " terms");
}

std::vector<TableEntry> table_bounds(int k, const std::vector<double>& z_list,
                                     const OptimizerConfig& cfg) {
  std::vector<TableEntry> out;
  for (double z : z_list) {
    TableEntry e;
    e.z = z;
    auto attempt = [&](const char* name, auto&& fn) {
      try {
        BoundCertificate c = fn();
        if (!e.best || c.vertex_bound < e.best->vertex_bound) e.best = std::move(c);
      } catch (const std::exception& ex) {
        e.errors.push_back(std::string(name) + ": " + ex.what());
      }
    };
    if (z < 0.0) attempt("linear", [&] { return linear_bound(k, z); });
    if (z < (k - 1.0) / k) attempt("two_term", [&] { return two_term_bound(k, z); });
    attempt("machine", [&] { return machine_bound(k, z); });
    attempt("nterm", [&] { return optimize_nterm(k, z, cfg); });
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace abound
