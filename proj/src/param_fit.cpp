#include "iosim/param_fit.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "iosim/parallel.hpp"

namespace iosim {

namespace {

cplx table_value_clamped(const YsTable& t, double f) {
  if (t.covers(f)) return t.at(f);
  return f < t.freq_hz.front() ? t.value.front() : t.value.back();
}

// Flat parameter vector: 9 log10 scalars, then (re, im) per ys1 knot, then
// (re, im) per ys2 knot.
struct FitSpace {
  std::vector<double> knots;
  FitBounds bounds;

  std::size_t size() const { return 9 + 4 * knots.size(); }

  std::vector<double> pack(const CircuitParams& p) const {
    std::vector<double> x;
    x.reserve(size());
    for (double v : {p.r1, p.r2, p.r3, p.l1, p.l2, p.l3, p.c1, p.c2, p.c3}) {
      x.push_back(std::log10(v));
    }
    for (const YsTable* t : {&p.ys1, &p.ys2}) {
      for (double f : knots) {
        const cplx y = table_value_clamped(*t, f);
        x.push_back(y.real());
        x.push_back(y.imag());
      }
    }
    return x;
  }

  CircuitParams unpack(const std::vector<double>& x,
                       const CircuitParams& proto) const {
    CircuitParams p = proto;
    p.r1 = std::pow(10.0, x[0]);
    p.r2 = std::pow(10.0, x[1]);
    p.r3 = std::pow(10.0, x[2]);
    p.l1 = std::pow(10.0, x[3]);
    p.l2 = std::pow(10.0, x[4]);
    p.l3 = std::pow(10.0, x[5]);
    p.c1 = std::pow(10.0, x[6]);
    p.c2 = std::pow(10.0, x[7]);
    p.c3 = std::pow(10.0, x[8]);
    YsTable* tables[2] = {&p.ys1, &p.ys2};
    std::size_t i = 9;
    for (YsTable* t : tables) {
      t->freq_hz = knots;
      t->value.clear();
      for (std::size_t k = 0; k < knots.size(); ++k) {
        t->value.emplace_back(x[i], x[i + 1]);
        i += 2;
      }
    }
    return p;
  }

  FitInterval interval(std::size_t i) const {
    if (i < 3) {
      return {std::log10(bounds.resistance.lo), std::log10(bounds.resistance.hi)};
    }
    if (i < 6) {
      return {std::log10(bounds.inductance.lo), std::log10(bounds.inductance.hi)};
    }
    if (i < 9) {
      return {std::log10(bounds.capacitance.lo),
              std::log10(bounds.capacitance.hi)};
    }
    return (i - 9) % 2 == 0 ? bounds.ys_real : bounds.ys_imag;
  }

  double initial_step(std::size_t i, double value) const {
    if (i < 9) return 0.05; // log10 decades
    return std::max(0.1 * std::abs(value), 0.01);
  }
};

struct Cost {
  const FitTarget* target;
  const FitSpace* space;
  const CircuitParams* proto;
  double ridge;
  double weight_sum; // over both coefficients

  double operator()(const std::vector<double>& x, long& evals) const {
    ++evals;
    const CircuitParams p = space->unpack(x, *proto);
    double acc = 0.0;
    for (const FitPoint& pt : target->points) {
      const ScatterResponse r = evaluate_params(p, pt.state, pt.freq_hz);
      acc += pt.weight * (std::norm(r.gamma_r - pt.gamma_r) +
                          std::norm(r.gamma_t - pt.gamma_t));
    }
    double pen = 0.0;
    for (const YsTable* t : {&p.ys1, &p.ys2}) {
      for (std::size_t k = 1; k < t->value.size(); ++k) {
        pen += std::norm(t->value[k] - t->value[k - 1]);
      }
    }
    return acc / weight_sum + ridge * pen;
  }
};

struct StartResult {
  std::vector<double> x;
  double cost = 0.0;
  int sweeps = 0;
};

StartResult descend(std::vector<double> x, const FitSpace& space,
                    const Cost& cost, long budget) {
  long evals = 0;
  double best = cost(x, evals);
  std::vector<double> step(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    step[i] = space.initial_step(i, x[i]);
  }
  int sweeps = 0;
  while (evals < budget && best > 1e-24) {
    bool any = false;
    for (std::size_t i = 0; i < x.size() && evals < budget; ++i) {
      const FitInterval iv = space.interval(i);
      const double saved = x[i];
      double cand_x = saved;
      double cand_c = best;
      for (double dir : {1.0, -1.0}) {
        const double trial = std::clamp(saved + dir * step[i], iv.lo, iv.hi);
        if (trial == saved) continue;
        x[i] = trial;
        const double c = cost(x, evals);
        if (c < cand_c) {
          cand_c = c;
          cand_x = trial;
        }
        if (evals >= budget) break;
      }
      if (cand_c < best) {
        best = cand_c;
        x[i] = cand_x;
        step[i] *= 1.6;
        any = true;
      } else {
        x[i] = saved;
        step[i] *= 0.5;
      }
    }
    ++sweeps;
    if (!any) {
      const double biggest = *std::max_element(step.begin(), step.end());
      if (biggest < 1e-12) break;
    }
  }
  return {std::move(x), best, sweeps};
}

} // namespace

void FitTarget::validate() const {
  std::set<std::vector<double>> freqs;
  std::vector<ElementState> states;
  double wsum = 0.0;
  for (const FitPoint& p : points) {
    if (!(p.freq_hz > 0.0)) throw ConfigError("fit target: frequency must be > 0");
    if (!std::isfinite(p.weight) || p.weight < 0.0) {
      throw ConfigError("fit target: weights must be finite and >= 0");
    }
    wsum += p.weight;
    freqs.insert({p.freq_hz});
    if (std::none_of(states.begin(), states.end(), [&](const ElementState& s) {
          return s.upper == p.state.upper && s.lower == p.state.lower;
        })) {
      states.push_back(p.state);
    }
  }
  if (states.size() < 2 || freqs.size() < 5) {
    throw ConfigError("fit target: need at least 2 states x 5 frequencies");
  }
  if (wsum <= 0.0) throw ConfigError("fit target: all weights are zero");
}

std::vector<double> FitTarget::frequencies() const {
  std::set<double> f;
  for (const FitPoint& p : points) f.insert(p.freq_hz);
  return {f.begin(), f.end()};
}

void FitBounds::validate() const {
  for (const FitInterval* iv :
       {&resistance, &inductance, &capacitance, &ys_real, &ys_imag}) {
    if (!(iv->lo <= iv->hi)) throw ConfigError("fit bounds: empty interval");
  }
  if (resistance.lo <= 0.0 || inductance.lo <= 0.0 || capacitance.lo <= 0.0) {
    throw ConfigError("fit bounds: r/l/c lower bounds must be positive");
  }
}

double fit_residual(const CircuitParams& params, const FitTarget& target) {
  double acc = 0.0, wsum = 0.0;
  for (const FitPoint& p : target.points) {
    const ScatterResponse r = evaluate_params(params, p.state, p.freq_hz);
    acc += p.weight * (std::norm(r.gamma_r - p.gamma_r) +
                       std::norm(r.gamma_t - p.gamma_t));
    wsum += 2.0 * p.weight;
  }
  if (wsum <= 0.0) throw ConfigError("fit residual: all weights are zero");
  return std::sqrt(acc / wsum);
}

FitResult fit_params(const FitTarget& target, const CircuitParams& init,
                     const FitOptions& options) {
  target.validate();
  options.bounds.validate();
  if (options.starts < 1) throw ConfigError("fit: starts must be >= 1");

  FitSpace space{target.frequencies(), options.bounds};
  const std::vector<double> x0 = space.pack(init);
  for (std::size_t i = 0; i < x0.size(); ++i) {
    if (!space.interval(i).contains(x0[i])) {
      throw ConfigError("fit: init parameter outside bounds");
    }
  }

  double wsum = 0.0;
  for (const FitPoint& p : target.points) wsum += 2.0 * p.weight;
  const Cost cost{&target, &space, &init, options.ridge, wsum};

  if (options.budget < 1) {
    FitResult r{init, fit_residual(init, target), 0, false};
    return r;
  }

  const int starts = options.starts;
  const long per_start = std::max<long>(1, options.budget / starts);
  std::vector<StartResult> results(starts);
  parallel_for(static_cast<std::size_t>(starts), [&](std::size_t s) {
    std::vector<double> x = x0;
    if (s > 0) {
      std::mt19937_64 rng(options.seed ^ (0x9e3779b97f4a7c15ULL * (s + 1)));
      std::uniform_real_distribution<double> mult(0.5, 2.0);
      for (std::size_t i = 0; i < x.size(); ++i) {
        const FitInterval iv = space.interval(i);
        const double m = mult(rng);
        // log-space coordinates shift by log10(m); linear ones scale.
        const double moved = i < 9 ? x[i] + std::log10(m) : x[i] * m;
        x[i] = std::clamp(moved, iv.lo, iv.hi);
      }
    }
    results[s] = descend(std::move(x), space, cost, per_start);
  });

  const StartResult* best = &results[0];
  for (const StartResult& r : results) {
    if (r.cost < best->cost || (r.cost == best->cost && r.x < best->x)) {
      best = &r;
    }
  }

  FitResult out;
  out.params = space.unpack(best->x, init);
  out.residual = fit_residual(out.params, target);
  // never report worse than the starting point
  const double init_res = fit_residual(init, target);
  if (init_res < out.residual) {
    out.params = init;
    out.residual = init_res;
  }
  out.iterations = best->sweeps;
  out.converged = out.residual <= options.converge_tol;
  return out;
}

} // namespace iosim
