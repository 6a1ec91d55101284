// Copyright 2026 The famq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "famq/optim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <string>

#include "famq/errors.hpp"

namespace famq {
namespace {

struct BudgetExhausted {};

// Counts calls, enforces the budget and remembers the best point.
class CountingObjective {
 public:
  CountingObjective(const CostFunction& cost, int max_calls) : cost_(cost), max_calls_(max_calls) {}

  double operator()(const Eigen::VectorXd& x) {
    if (result_.calls_used >= max_calls_) throw BudgetExhausted{};
    const double f = cost_(x);
    ++result_.calls_used;
    if (result_.trace.empty() || f < result_.best_cost) {
      result_.best_cost = f;
      result_.best_params = x;
      result_.trace.push_back({result_.calls_used, f});
    }
    return f;
  }

  OptResult& result() { return result_; }

 private:
  const CostFunction& cost_;
  int max_calls_;
  OptResult result_;
};

void check_bounds(const Bounds& b) {
  if (b.lower.size() != b.upper.size() || b.lower.size() == 0) throw DimensionError("malformed bounds");
  for (Eigen::Index i = 0; i < b.size(); ++i) {
    if (!std::isfinite(b.lower[i]) || !std::isfinite(b.upper[i]) || b.lower[i] > b.upper[i]) {
      throw RangeError("bounds must be finite with lower <= upper");
    }
  }
}

// Runs `body` until it returns or the budget runs out.
template <typename Body>
OptResult run_budgeted(const CostFunction& cost, const Budget& budget, Body&& body) {
  budget.validate();
  CountingObjective objective(cost, budget.max_calls);
  int iterations = 0;
  try {
    body(objective, iterations);
  } catch (const BudgetExhausted&) {
  }
  OptResult out = std::move(objective.result());
  out.iterations = iterations;
  return out;
}

}  // namespace

void Budget::validate() const {
  if (max_calls < 1 || max_iterations < 1) throw RangeError("budget limits must be positive");
}

OptResult particle_swarm(const CostFunction& cost, const Bounds& bounds, const Budget& budget, std::uint64_t seed,
                         const PsoOptions& options) {
  check_bounds(bounds);
  if (options.swarm_size < 1) throw RangeError("swarm needs at least one particle");
  return run_budgeted(cost, budget, [&](CountingObjective& f, int& iterations) {
    const Eigen::Index dim = bounds.size();
    const int swarm = options.swarm_size;
    const Eigen::VectorXd width = bounds.upper - bounds.lower;
    const Eigen::VectorXd vmax = options.velocity_clamp * width;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0, 1);
    auto draw = [&](Eigen::Index n) { return Eigen::VectorXd(Eigen::VectorXd::NullaryExpr(n, [&] { return unit(rng); })); };

    std::vector<Eigen::VectorXd> x(swarm), v(swarm), pbest(swarm);
    std::vector<double> pbest_f(swarm, std::numeric_limits<double>::infinity());
    for (int i = 0; i < swarm; ++i) {
      x[i] = bounds.lower + width.cwiseProduct(draw(dim));
      v[i] = vmax.cwiseProduct(2 * draw(dim) - Eigen::VectorXd::Ones(dim));
    }
    Eigen::VectorXd gbest;
    double gbest_f = std::numeric_limits<double>::infinity();
    auto evaluate = [&](int i) {
      const double fi = f(x[i]);
      if (fi < pbest_f[i]) {
        pbest_f[i] = fi;
        pbest[i] = x[i];
      }
      if (fi < gbest_f) {
        gbest_f = fi;
        gbest = x[i];
      }
    };
    for (int i = 0; i < swarm; ++i) evaluate(i);

    // Inertia falls linearly across the iterations the budget can pay for.
    const int planned = std::max(1, std::min(budget.max_iterations, budget.max_calls / swarm - 1));
    for (iterations = 0; iterations < budget.max_iterations;) {
      const double t = planned > 1 ? std::min(1.0, static_cast<double>(iterations) / (planned - 1)) : 1.0;
      const double w = options.inertia_start + (options.inertia_end - options.inertia_start) * t;
      ++iterations;
      for (int i = 0; i < swarm; ++i) {
        v[i] = w * v[i] + options.cognitive * draw(dim).cwiseProduct(pbest[i] - x[i]) +
               options.social * draw(dim).cwiseProduct(gbest - x[i]);
        v[i] = v[i].cwiseMax(-vmax).cwiseMin(vmax);
        x[i] += v[i];
        for (Eigen::Index d = 0; d < dim; ++d) {
          if (x[i][d] > bounds.upper[d]) {
            x[i][d] = 2 * bounds.upper[d] - x[i][d];
            v[i][d] = -v[i][d];
          } else if (x[i][d] < bounds.lower[d]) {
            x[i][d] = 2 * bounds.lower[d] - x[i][d];
            v[i][d] = -v[i][d];
          }
          x[i][d] = std::clamp(x[i][d], bounds.lower[d], bounds.upper[d]);
        }
        evaluate(i);
      }
    }
  });
}

OptResult nelder_mead(const CostFunction& cost, const Eigen::VectorXd& x0, const Budget& budget,
                      const NelderMeadOptions& options) {
  if (x0.size() == 0) throw DimensionError("empty starting point");
  return run_budgeted(cost, budget, [&](CountingObjective& f, int& iterations) {
    const Eigen::Index n = x0.size();
    const double dn = static_cast<double>(n);
    // Dimension-adaptive coefficients; the classic ones in one dimension.
    const double reflect = 1;
    const double expand = n > 1 ? 1 + 2 / dn : 2;
    const double contract = n > 1 ? 0.75 - 1 / (2 * dn) : 0.5;
    const double shrink = n > 1 ? 1 - 1 / dn : 0.5;

    std::vector<Eigen::VectorXd> pts(n + 1, x0);
    for (Eigen::Index i = 0; i < n; ++i) pts[i + 1][i] += options.initial_step;
    std::vector<double> fs(n + 1);
    for (Eigen::Index i = 0; i <= n; ++i) fs[i] = f(pts[i]);

    std::vector<std::size_t> order(n + 1);
    for (; iterations < budget.max_iterations; ++iterations) {
      std::iota(order.begin(), order.end(), 0);
      std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return fs[a] < fs[b]; });
      std::vector<Eigen::VectorXd> sp(n + 1);
      std::vector<double> sf(n + 1);
      for (Eigen::Index i = 0; i <= n; ++i) {
        sp[i] = pts[order[i]];
        sf[i] = fs[order[i]];
      }
      pts.swap(sp);
      fs.swap(sf);

      double x_spread = 0;
      for (Eigen::Index i = 1; i <= n; ++i) x_spread = std::max(x_spread, (pts[i] - pts[0]).cwiseAbs().maxCoeff());
      if (fs[n] - fs[0] <= options.f_tolerance && x_spread <= options.x_tolerance) break;

      Eigen::VectorXd centroid = Eigen::VectorXd::Zero(n);
      for (Eigen::Index i = 0; i < n; ++i) centroid += pts[i];
      centroid /= dn;

      const Eigen::VectorXd xr = centroid + reflect * (centroid - pts[n]);
      const double fr = f(xr);
      if (fr < fs[0]) {
        const Eigen::VectorXd xe = centroid + expand * (xr - centroid);
        const double fe = f(xe);
        if (fe < fr) {
          pts[n] = xe;
          fs[n] = fe;
        } else {
          pts[n] = xr;
          fs[n] = fr;
        }
        continue;
      }
      if (fr < fs[n - 1]) {
        pts[n] = xr;
        fs[n] = fr;
        continue;
      }
      const bool outside = fr < fs[n];
      const Eigen::VectorXd xc = outside ? Eigen::VectorXd(centroid + contract * (xr - centroid))
                                         : Eigen::VectorXd(centroid + contract * (pts[n] - centroid));
      const double fc = f(xc);
      if (outside ? fc <= fr : fc < fs[n]) {
        pts[n] = xc;
        fs[n] = fc;
        continue;
      }
      for (Eigen::Index i = 1; i <= n; ++i) {
        pts[i] = pts[0] + shrink * (pts[i] - pts[0]);
        fs[i] = f(pts[i]);
      }
    }
  });
}

Eigen::VectorXd finite_difference_gradient(const CostFunction& cost, const Eigen::VectorXd& x, double step) {
  Eigen::VectorXd g(x.size());
  Eigen::VectorXd probe = x;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    probe[i] = x[i] + step;
    const double up = cost(probe);
    probe[i] = x[i] - step;
    const double down = cost(probe);
    probe[i] = x[i];
    g[i] = (up - down) / (2 * step);
  }
  return g;
}

OptResult bfgs(const CostFunction& cost, const Eigen::VectorXd& x0, const Budget& budget, const BfgsOptions& options) {
  if (x0.size() == 0) throw DimensionError("empty starting point");
  if (!(options.fd_step > 0)) throw RangeError("finite-difference step must be positive");
  return run_budgeted(cost, budget, [&](CountingObjective& f, int& iterations) {
    const Eigen::Index n = x0.size();
    const CostFunction counted = [&f](const Eigen::VectorXd& x) { return f(x); };
    Eigen::VectorXd x = x0;
    double fx = f(x);
    Eigen::VectorXd g = finite_difference_gradient(counted, x, options.fd_step);
    Eigen::MatrixXd h = Eigen::MatrixXd::Identity(n, n);
    bool scaled = false;
    for (; iterations < budget.max_iterations; ++iterations) {
      if (g.norm() <= options.gradient_tolerance) break;
      Eigen::VectorXd d = -h * g;
      if (g.dot(d) >= 0) {
        h.setIdentity();
        d = -g;
      }
      const double slope = g.dot(d);
      double alpha = 1;
      Eigen::VectorXd x_new;
      double f_new = 0;
      bool accepted = false;
      for (int tries = 0; tries < 50; ++tries, alpha *= 0.5) {
        x_new = x + alpha * d;
        f_new = f(x_new);
        if (f_new <= fx + 1e-4 * alpha * slope) {
          accepted = true;
          break;
        }
      }
      if (!accepted) break;
      const Eigen::VectorXd g_new = finite_difference_gradient(counted, x_new, options.fd_step);
      const Eigen::VectorXd s = x_new - x;
      const Eigen::VectorXd y = g_new - g;
      const double sy = s.dot(y);
      if (sy > 1e-16) {
        if (!scaled) {
          h *= sy / y.squaredNorm();
          scaled = true;
        }
        const double rho = 1 / sy;
        const Eigen::MatrixXd left = Eigen::MatrixXd::Identity(n, n) - rho * s * y.transpose();
        h = left * h * left.transpose() + rho * s * s.transpose();
      }
      x = x_new;
      fx = f_new;
      g = g_new;
    }
  });
}

std::string_view to_string(OptimizerKind kind) {
  switch (kind) {
    case OptimizerKind::particle_swarm:
      return "pso";
    case OptimizerKind::nelder_mead:
      return "nelder_mead";
    case OptimizerKind::bfgs:
      return "bfgs";
  }
  return "?";
}

OptimizerKind parse_optimizer(std::string_view name) {
  for (auto k : {OptimizerKind::particle_swarm, OptimizerKind::nelder_mead, OptimizerKind::bfgs}) {
    if (name == to_string(k)) return k;
  }
  throw ConfigError("unknown optimizer '" + std::string(name) + "'");
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 over a combination of both words.
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Eigen::VectorXd uniform_start(const Bounds& bounds, std::uint64_t seed) {
  check_bounds(bounds);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0, 1);
  Eigen::VectorXd x(bounds.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) x[i] = bounds.lower[i] + (bounds.upper[i] - bounds.lower[i]) * unit(rng);
  return x;
}

OptResult run_repetition(const OptimizerConfig& config, const ColdStartPlan& plan, int rep,
                         const CostFunction& cost) {
  const std::uint64_t seed = derive_seed(plan.seed, static_cast<std::uint64_t>(rep));
  switch (config.kind) {
    case OptimizerKind::particle_swarm:
      return particle_swarm(cost, plan.bounds, config.budget, seed, config.pso);
    case OptimizerKind::nelder_mead:
      return nelder_mead(cost, uniform_start(plan.bounds, seed), config.budget, config.nelder_mead);
    case OptimizerKind::bfgs:
      return bfgs(cost, uniform_start(plan.bounds, seed), config.budget, config.bfgs);
  }
  throw ConfigError("unknown optimizer");
}

ColdStartResult run_cold_starts(const OptimizerConfig& config, const ColdStartPlan& plan, const CostFunction& cost) {
  if (plan.repetitions < 1) throw RangeError("need at least one repetition");
  ColdStartResult out;
  for (int rep = 0; rep < plan.repetitions; ++rep) {
    out.all.push_back(run_repetition(config, plan, rep, cost));
    if (rep == 0 || out.all.back().best_cost < out.best.best_cost) out.best = out.all.back();
  }
  return out;
}

}  // namespace famq
