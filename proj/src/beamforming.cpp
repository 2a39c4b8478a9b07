#include "iosim/beamforming.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "iosim/parallel.hpp"

namespace iosim {

namespace {

constexpr double kPowerSlack = 1e-9;

// J x J complex linear solve, returns false on a (near-)singular pivot.
bool invert(std::vector<cplx>& a, std::size_t n, std::vector<cplx>& inv) {
  inv.assign(n * n, cplx{0.0, 0.0});
  for (std::size_t i = 0; i < n; ++i) inv[i * n + i] = 1.0;
  double scale = 0.0;
  for (const cplx& x : a) scale = std::max(scale, std::abs(x));
  if (scale <= 0.0) return false;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(a[r * n + col]) > std::abs(a[piv * n + col])) piv = r;
    }
    if (std::abs(a[piv * n + col]) < 1e-12 * scale) return false;
    if (piv != col) {
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(a[piv * n + c], a[col * n + c]);
        std::swap(inv[piv * n + c], inv[col * n + c]);
      }
    }
    const cplx d = a[col * n + col];
    for (std::size_t c = 0; c < n; ++c) {
      a[col * n + c] /= d;
      inv[col * n + c] /= d;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const cplx f = a[r * n + col];
      if (f == cplx{0.0, 0.0}) continue;
      for (std::size_t c = 0; c < n; ++c) {
        a[r * n + c] -= f * a[col * n + c];
        inv[r * n + c] -= f * inv[col * n + c];
      }
    }
  }
  return true;
}

struct Score {
  double objective = 0.0;
  double violation = 0.0;

  bool feasible() const { return violation <= 0.0; }
};

// feasible beats infeasible; then objective; infeasible compares violation
// first (smaller is better)
bool better(const Score& a, const Score& b) {
  if (a.feasible() != b.feasible()) return a.feasible();
  if (a.feasible()) return a.objective > b.objective;
  if (a.violation != b.violation) return a.violation < b.violation;
  return a.objective > b.objective;
}

struct Evaluator {
  const ProblemSpec* spec;

  Solution eval(const std::vector<std::uint8_t>& s) const {
    Solution sol;
    sol.s = s;
    const std::vector<cplx> h = assemble_channel(spec->channels, s);
    sol.v = digital_beamformer(h, spec->channels.num_tx, spec->channels.num_rx,
                               spec->budget, &sol.zf_fallback);
    sol.report = sinr_and_rate(sol.v, h, spec->channels.num_tx,
                               spec->channels.num_rx, spec->budget,
                               spec->interference);
    sol.objective_value = spec->objective == Objective::MinRate
                              ? sol.report.min_rate
                              : sol.report.sum_rate;
    sol.violations = feasibility_check(sol, *spec);
    sol.feasible = sol.violations.empty();
    return sol;
  }

  Score score(const Solution& sol) const {
    double tv = 0.0;
    for (const Violation& v : sol.violations) tv += v.margin;
    return {sol.objective_value, tv};
  }
};

bool lex_less(const std::vector<std::uint8_t>& a,
              const std::vector<std::uint8_t>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

} // namespace

void ProblemSpec::validate() const {
  channels.validate();
  budget.validate();
  if (!(gamma0 > 0.0)) throw ConfigError("problem: gamma0 must be > 0");
  if (channels.num_tx < 1 || channels.num_rx < 1) {
    throw ConfigError("problem: need at least one tx and one rx");
  }
}

std::vector<cplx> digital_beamformer(const std::vector<cplx>& h,
                                     std::size_t num_tx, std::size_t num_rx,
                                     const LinkBudget& budget,
                                     bool* used_fallback) {
  budget.validate();
  if (h.size() != num_tx * num_rx) {
    throw ShapeError("digital_beamformer: channel must be K x J");
  }
  if (num_rx > num_tx) {
    throw CapabilityError(
        "digital_beamformer: zero-forcing needs J <= K transmit antennas");
  }
  const std::size_t K = num_tx, J = num_rx;
  // Gram matrix of H (J x K, H[j][k] = h[k*J+j])
  std::vector<cplx> gram(J * J);
  for (std::size_t i = 0; i < J; ++i) {
    for (std::size_t j = 0; j < J; ++j) {
      cplx acc{0.0, 0.0};
      for (std::size_t k = 0; k < K; ++k) {
        acc += h[k * J + i] * std::conj(h[k * J + j]);
      }
      gram[i * J + j] = acc;
    }
  }
  std::vector<cplx> ginv;
  std::vector<cplx> v(K * J);
  bool fallback = false;
  std::vector<cplx> gram_copy = gram;
  if (invert(gram_copy, J, ginv)) {
    // V0 = H^H G^{-1}
    for (std::size_t k = 0; k < K; ++k) {
      for (std::size_t j = 0; j < J; ++j) {
        cplx acc{0.0, 0.0};
        for (std::size_t i = 0; i < J; ++i) {
          acc += std::conj(h[k * J + i]) * ginv[i * J + j];
        }
        v[k * J + j] = acc;
      }
    }
  } else {
    fallback = true; // matched filter
    for (std::size_t k = 0; k < K; ++k) {
      for (std::size_t j = 0; j < J; ++j) {
        v[k * J + j] = std::conj(h[k * J + j]);
      }
    }
  }
  double max_row = 0.0;
  for (std::size_t k = 0; k < K; ++k) {
    double p = 0.0;
    for (std::size_t j = 0; j < J; ++j) p += std::norm(v[k * J + j]);
    max_row = std::max(max_row, p);
  }
  if (max_row > 0.0) {
    const double scale = std::sqrt(budget.p_t / max_row);
    for (cplx& x : v) x *= scale;
  }
  if (used_fallback) *used_fallback = fallback;
  return v;
}

std::vector<Violation> feasibility_check(const Solution& sol,
                                         const ProblemSpec& spec) {
  std::vector<Violation> out;
  for (std::size_t m = 0; m < sol.s.size(); ++m) {
    if (sol.s[m] > 1) {
      out.push_back({"state", m, static_cast<double>(sol.s[m])});
    }
  }
  const std::size_t K = spec.channels.num_tx, J = spec.channels.num_rx;
  for (std::size_t k = 0; k < K; ++k) {
    double p = 0.0;
    for (std::size_t j = 0; j < J; ++j) p += std::norm(sol.v[k * J + j]);
    if (p > spec.budget.p_t * (1.0 + kPowerSlack)) {
      out.push_back({"power", k, p - spec.budget.p_t});
    }
  }
  for (std::size_t j = 0; j < sol.report.sinr.size(); ++j) {
    if (sol.report.sinr[j] < spec.gamma0) {
      out.push_back({"sinr", j, spec.gamma0 - sol.report.sinr[j]});
    }
  }
  return out;
}

Solution exhaustive_ios(const ProblemSpec& spec) {
  spec.validate();
  const std::size_t M = spec.channels.num_groups;
  if (M > 30) {
    throw CapabilityError(
        "exhaustive search space exceeds 2^30 configurations; use the "
        "alternating or annealing solver");
  }
  const Evaluator ev{&spec};
  const std::uint64_t total = 1ULL << M;
  const std::size_t chunks =
      std::min<std::uint64_t>(total, 64);
  std::vector<Solution> chunk_best(chunks);
  std::vector<bool> chunk_has(chunks, false);
  parallel_for(chunks, [&](std::size_t c) {
    const std::uint64_t lo = total * c / chunks;
    const std::uint64_t hi = total * (c + 1) / chunks;
    Solution best;
    Score best_score;
    bool has = false;
    for (std::uint64_t mask = lo; mask < hi; ++mask) {
      std::vector<std::uint8_t> s(M);
      for (std::size_t m = 0; m < M; ++m) s[m] = (mask >> m) & 1ULL;
      Solution cand = ev.eval(s);
      const Score sc = ev.score(cand);
      if (!has || better(sc, best_score) ||
          (!better(best_score, sc) && lex_less(cand.s, best.s))) {
        best = std::move(cand);
        best_score = sc;
        has = true;
      }
    }
    chunk_best[c] = std::move(best);
    chunk_has[c] = has;
  });
  Solution best;
  Score best_score;
  bool has = false;
  for (std::size_t c = 0; c < chunks; ++c) {
    if (!chunk_has[c]) continue;
    const Score sc = ev.score(chunk_best[c]);
    if (!has || better(sc, best_score) ||
        (!better(best_score, sc) && lex_less(chunk_best[c].s, best.s))) {
      best = chunk_best[c];
      best_score = sc;
      has = true;
    }
  }
  best.trace = {best.objective_value};
  return best;
}

Solution alternating_opt(const ProblemSpec& spec) {
  spec.validate();
  const std::size_t M = spec.channels.num_groups;
  const Evaluator ev{&spec};
  std::vector<std::uint8_t> s = spec.initial_s.empty()
                                    ? std::vector<std::uint8_t>(M, 0)
                                    : spec.initial_s;
  if (s.size() != M) throw ConfigError("problem: initial state length mismatch");
  Solution cur = ev.eval(s);
  Score cur_score = ev.score(cur);
  std::vector<double> trace{cur.objective_value};
  for (int it = 0; it < spec.max_iterations; ++it) {
    int best_flip = -1;
    Solution best_cand;
    Score best_cand_score;
    for (std::size_t m = 0; m < M; ++m) {
      std::vector<std::uint8_t> t = cur.s;
      t[m] ^= 1;
      Solution cand = ev.eval(t);
      const Score sc = ev.score(cand);
      if (better(sc, cur_score) &&
          (best_flip < 0 || better(sc, best_cand_score))) {
        best_flip = static_cast<int>(m);
        best_cand = std::move(cand);
        best_cand_score = sc;
      }
    }
    if (best_flip < 0) break;
    cur = std::move(best_cand);
    cur_score = best_cand_score;
    trace.push_back(cur.objective_value);
  }
  cur.trace = std::move(trace);
  return cur;
}

Solution annealing_opt(const ProblemSpec& spec) {
  spec.validate();
  const std::size_t M = spec.channels.num_groups;
  const Evaluator ev{&spec};
  std::mt19937_64 rng(spec.seed);
  std::uniform_int_distribution<std::size_t> pick(0, M - 1);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  std::vector<std::uint8_t> s = spec.initial_s.empty()
                                    ? std::vector<std::uint8_t>(M, 0)
                                    : spec.initial_s;
  if (s.size() != M) throw ConfigError("problem: initial state length mismatch");
  Solution cur = ev.eval(s);
  Score cur_score = ev.score(cur);
  Solution best = cur;
  Score best_score = cur_score;
  std::vector<double> trace{cur.objective_value};
  double t = spec.annealing.t0;
  for (int step = 0; step < spec.annealing.steps; ++step) {
    std::vector<std::uint8_t> cand_s = cur.s;
    cand_s[pick(rng)] ^= 1;
    Solution cand = ev.eval(cand_s);
    const Score sc = ev.score(cand);
    // penalized scalar for the acceptance rule
    const double cur_val = cur_score.objective - 1e6 * cur_score.violation;
    const double cand_val = sc.objective - 1e6 * sc.violation;
    const double delta = cand_val - cur_val;
    bool accept = delta > 0.0;
    if (!accept && t > 0.0) accept = unit(rng) < std::exp(delta / t);
    if (accept) {
      cur = std::move(cand);
      cur_score = sc;
      trace.push_back(cur.objective_value);
      if (better(cur_score, best_score) ||
          (!better(best_score, cur_score) && lex_less(cur.s, best.s))) {
        best = cur;
        best_score = cur_score;
      }
    }
    t *= spec.annealing.cooling;
  }
  best.trace = std::move(trace);
  return best;
}

Solution solve(const ProblemSpec& spec) {
  switch (spec.solver) {
    case SolverKind::Exhaustive: return exhaustive_ios(spec);
    case SolverKind::Alternating: return alternating_opt(spec);
    case SolverKind::Annealing: return annealing_opt(spec);
  }
  throw ConfigError("problem: unknown solver");
}

} // namespace iosim
