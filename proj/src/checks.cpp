// Copyright 2026 The isoqubit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "isoqubit/checks.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

#include "isoqubit/codes.hpp"
#include "isoqubit/entropy.hpp"
#include "isoqubit/hiding.hpp"
#include "isoqubit/net.hpp"
#include "isoqubit/otm.hpp"
#include "isoqubit/random.hpp"
#include "isoqubit/strategy.hpp"

namespace isoqubit {

namespace {

template <typename... Args>
std::string fmt(const char* f, Args... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

struct MeanSe {
  double mean = 0.0;
  double se = 0.0;
};

MeanSe mean_se(const std::vector<double>& xs) {
  MeanSe r;
  const auto n = static_cast<double>(xs.size());
  for (double x : xs) r.mean += x;
  r.mean /= n;
  double ss = 0.0;
  for (double x : xs) ss += (x - r.mean) * (x - r.mean);
  r.se = std::sqrt(ss / (n - 1.0) / n);
  return r;
}

CheckResult constants() {
  const double pe = channel_error_probability();
  const double cap = 1.0 - binary_entropy(pe);
  CheckResult r{1, "constants", false, "", 0.0};
  r.passed = std::abs(pe - 0.146446609) <= 1e-8 && std::abs(cap - 0.399118) <= 1e-5;
  r.detail = fmt("p_e=%.10f 1-h(p_e)=%.7f", pe, cap);
  return r;
}

CheckResult uncertainty(std::uint64_t seed) {
  Rng rng(seed);
  double worst = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 10000; ++i) {
    worst = std::min(worst, uncertainty_check(random_qubit_state(rng).projector()));
  }
  return {2, "uncertainty relation", worst >= 1.0 - 1e-9,
          fmt("min H(R0)+H(R1) over 10000 states = %.12f", worst), 0.0};
}

CheckResult fourth_moment(std::uint64_t seed) {
  Rng rng(seed);
  double max_diff = 0.0;
  double max_val = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const QubitState psi = random_qubit_state(rng);
    const double brute = fourth_moment_avg(psi);
    max_diff = std::max(max_diff, std::abs(brute - fourth_moment_closed_form(psi)));
    max_val = std::max(max_val, brute);
  }
  return {3, "fourth moment", max_diff <= 1e-12 && max_val <= 0.375 + 1e-12,
          fmt("max |brute-closed|=%.3g max value=%.15f", max_diff, max_val), 0.0};
}

CheckResult gram_statistics(std::uint64_t seed) {
  std::vector<double> xs;
  for (std::uint64_t i = 0; i < 200; ++i) {
    Rng rng(derive_seed(seed, i));
    const auto e = sample_ensemble(4, 10, rng);
    const double f = gram_frobenius(ensemble_states(e));
    xs.push_back(f * f);
  }
  const auto ms = mean_se(xs);
  const double target = 16.0 * 15.0 / 1024.0;
  return {4, "gram statistics", std::abs(ms.mean - target) <= 3.0 * ms.se,
          fmt("mean ||G-I||_F^2=%.6f target=%.6f se=%.6f", ms.mean, target, ms.se), 0.0};
}

CheckResult pgm_bound(std::uint64_t seed) {
  int bound_ok = 0, info_checked = 0, info_ok = 0;
  double worst_gap = std::numeric_limits<double>::infinity();
  for (std::uint64_t i = 0; i < 100; ++i) {
    Rng rng(derive_seed(seed, i));
    const auto states = ensemble_states(sample_ensemble(3, 10, rng));
    const PgmSuccess s = pgm_success(states);
    bound_ok += s.probability >= s.gram_bound - 1e-12 ? 1 : 0;
    worst_gap = std::min(worst_gap, s.probability - s.gram_bound);
    const double eps = std::max(0.0, 1.0 - s.probability);
    if (success_to_info_precondition(eps, 3)) {
      ++info_checked;
      const double info = mutual_information(pgm_joint(states));
      info_ok += info >= success_to_info_bound(eps, 3) - 1e-9 ? 1 : 0;
    }
  }
  return {5, "pgm bound", bound_ok == 100 && info_ok == info_checked,
          fmt("success>=gram bound on %d/100 (min gap %.4f); info bound held on %d/%d "
              "instances meeting the precondition",
              bound_ok, worst_gap, info_ok, info_checked),
          0.0};
}

CheckResult computational_leakage(std::uint64_t seed) {
  const int n = 10, nb = 6;
  const StrategyTree comp = computational_strategy(n);
  std::vector<double> xs;
  double max_oracle_diff = 0.0;
  for (std::uint64_t i = 0; i < 50; ++i) {
    Rng rng(derive_seed(seed, i));
    const auto e = sample_ensemble(nb, n, rng);
    const GameStats g = discrimination_game(e, comp);
    // Outcome is deterministic on |0>, |1> and uniform on |+>, |->.
    double mixed = 0.0;
    for (AlphaCode c : e.codes()) mixed += (c == AlphaCode::k01 || c == AlphaCode::k10) ? 1 : 0;
    const double oracle = mixed / static_cast<double>(e.rows());
    max_oracle_diff = std::max(max_oracle_diff, std::abs(oracle - g.conditional_entropy));
    xs.push_back(g.conditional_entropy);
  }
  const auto ms = mean_se(xs);
  return {6, "computational leakage",
          std::abs(ms.mean - n / 2.0) <= 3.0 * ms.se && max_oracle_diff <= 1e-9,
          fmt("mean H(Z|U)=%.4f target=%.1f se=%.4f max oracle diff=%.2g", ms.mean, n / 2.0, ms.se,
              max_oracle_diff),
          0.0};
}

CheckResult discretization(std::uint64_t seed) {
  bool ok = true;
  std::string detail;
  for (double eps : {0.05, 0.01}) {
    const MeasurementNet net = build_net_2outcome(eps);
    const double penalty = discretization_penalty(2, 2, eps);
    double worst = 0.0;
    for (std::uint64_t i = 0; i < 100; ++i) {
      Rng rng(derive_seed(seed, i));
      const auto states = ensemble_states(sample_ensemble(2, 2, rng));
      const Distribution prior = Distribution::uniform(states.size());
      const StrategyTree s = random_strategy(2, 2, rng);
      const StrategyTree d = discretize_strategy(s, net);
      const double delta = std::abs(game_information(s, states, prior).information -
                                    game_information(d, states, prior).information);
      worst = std::max(worst, delta);
    }
    ok = ok && worst <= penalty;
    detail += fmt("eps=%.2f max|dI|=%.5f penalty=%.5f; ", eps, worst, penalty);
  }
  detail.resize(detail.size() - 2);
  return {7, "discretization", ok, detail, 0.0};
}

CheckResult exhaustive(std::uint64_t seed) {
  Rng rng(seed);
  const auto states = ensemble_states(sample_ensemble(2, 2, rng));
  const Distribution prior = Distribution::uniform(states.size());
  const MeasurementNet net = build_net_2outcome(0.2);
  double best = 0.0;
  std::uint64_t trees = 0;
  enumerate_strategies(2, net, 2, 1e7, [&](const StrategyTree& t) {
    best = std::max(best, game_information(t, states, prior).information);
    ++trees;
  });
  const std::vector<int> all{0, 1};
  const double chi = holevo_chi(states, prior, all);
  const double greedy =
      game_information(greedy_strategy(states, prior, net), states, prior).information;
  return {8, "exhaustive adversary", best <= chi + 1e-9 && greedy <= best + 1e-12,
          fmt("%llu trees, max I=%.6f holevo=%.6f greedy=%.6f",
              static_cast<unsigned long long>(trees), best, chi, greedy),
          0.0};
}

CheckResult collisions(std::uint64_t seed) {
  const MeasurementNet net = build_net_2outcome(1.0);
  Rng rng(seed);
  const int n = 10, nb = 6, m_hiding = 4;
  const auto states = ensemble_states(sample_ensemble(nb, n, rng));
  const CollisionScan fh = collision_scan(states, net, m_hiding, 1e8);
  const double fh_ref = nb - m_hiding * std::log2(1.5);

  const OtmDevice dev = sample_device(10, 3, 0.05, 0.0, derive_seed(seed, 1), derive_seed(seed, 2));
  const int m_otm = split_points(3, 10, 6.0).m;
  const CollisionScan ct = collision_scan(otm_family(dev), net, m_otm, 1e8);
  const double ct_ref = 2.0 * 3 - m_otm * std::log2(1.5);

  const bool ok = fh.outcomes >= 1000 && ct.outcomes >= 1000 && fh.max_identity_residual <= 1e-9 &&
                  ct.max_identity_residual <= 1e-9;
  return {9, "collision identities", ok,
          fmt("data hiding: %llu outcomes, residual %.2g, min H2=%.4f vs %.4f (slack %.4f); "
              "otm: %llu outcomes, residual %.2g, min H2=%.4f vs %.4f (slack %.4f)",
              static_cast<unsigned long long>(fh.outcomes), fh.max_identity_residual, fh.min_h2,
              fh_ref, fh_ref - fh.min_h2, static_cast<unsigned long long>(ct.outcomes),
              ct.max_identity_residual, ct.min_h2, ct_ref, ct_ref - ct.min_h2),
          0.0};
}

CheckResult honest_recovery(std::uint64_t seed) {
  const HonestStats st = honest_monte_carlo(64, 8, 20, 1000, Side::S, seed);
  const double pe = channel_error_probability();
  const double sigma = std::sqrt(pe * (1.0 - pe) / static_cast<double>(st.qubits));
  const bool ok = st.success_rate() >= 0.95 && std::abs(st.error_rate() - pe) <= 3.0 * sigma;
  return {10, "honest recovery", ok,
          fmt("success %.4f over %llu trials; per-qubit error %.5f (p_e %.5f, sigma %.5f)",
              st.success_rate(), static_cast<unsigned long long>(st.trials), st.error_rate(), pe,
              sigma),
          0.0};
}

CheckResult leak(std::uint64_t seed) {
  std::vector<ProductState> four;
  for (int c = 0; c < 4; ++c) four.emplace_back(std::vector{alpha_state(static_cast<AlphaCode>(c))});
  const double per_qubit =
      game_information(leak_strategy(1), four, Distribution::uniform(4)).information;
  int above = 0;
  double lo = std::numeric_limits<double>::infinity();
  for (std::uint64_t i = 0; i < 50; ++i) {
    const std::uint64_t s = derive_seed(seed, i);
    const OtmDevice dev = sample_device(8, 3, 0.01, 0.0, derive_seed(s, 0), derive_seed(s, 1));
    const double info = otm_information(dev, leak_strategy(8));
    lo = std::min(lo, info);
    above += info >= 2.5 ? 1 : 0;
  }
  return {11, "leak strategy", std::abs(per_qubit - 0.5) <= 1e-12 && above >= 45,
          fmt("per-qubit I=%.15f; I(Z;S,T)>=2.5 on %d/50 devices (min %.4f)", per_qubit, above,
              lo),
          0.0};
}

CheckResult chain(std::uint64_t seed) {
  double worst_sum = 0.0;
  double worst_excess = -std::numeric_limits<double>::infinity();
  for (std::uint64_t i = 0; i < 50; ++i) {
    const std::uint64_t s = derive_seed(seed, i);
    const OtmDevice dev = sample_device(8, 3, 0.01, 0.0, derive_seed(s, 0), derive_seed(s, 1));
    Rng rng(derive_seed(s, 2));
    const StrategyTree strat = random_strategy(8, 8, rng);
    const int m = split_points(3, 8, 3.0).m;
    const double h = std::max(3.0, min_prefix_collision(dev, strat, m));
    const SplitPoints sp = split_points(3, 8, h);
    const PhaseDecomposition pd = phase_decomposition(dev, strat, sp);
    worst_sum = std::max(worst_sum, std::abs(pd.first + pd.second + pd.remainder - pd.total));
    worst_excess = std::max(worst_excess, pd.remainder - pd.holevo_cap);
  }
  return {12, "chain decomposition", worst_sum <= 1e-9 && worst_excess <= 1e-9,
          fmt("max |sum - total|=%.3g; max remainder - cap=%.4f", worst_sum, worst_excess), 0.0};
}

}  // namespace

CheckResult run_check(int id, std::uint64_t seed) {
  const auto start = std::chrono::steady_clock::now();
  const std::uint64_t s = derive_seed(seed, static_cast<std::uint64_t>(id));
  CheckResult r;
  try {
    switch (id) {
      case 1: r = constants(); break;
      case 2: r = uncertainty(s); break;
      case 3: r = fourth_moment(s); break;
      case 4: r = gram_statistics(s); break;
      case 5: r = pgm_bound(s); break;
      case 6: r = computational_leakage(s); break;
      case 7: r = discretization(s); break;
      case 8: r = exhaustive(s); break;
      case 9: r = collisions(s); break;
      case 10: r = honest_recovery(s); break;
      case 11: r = leak(s); break;
      case 12: r = chain(s); break;
      default: throw Error(ErrorKind::ConfigError, "check id must lie in [1, 12]");
    }
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ConfigError) throw;
    r = {id, "error", false, e.what(), 0.0};
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<CheckResult> run_all_checks(std::uint64_t seed,
                                        const std::function<void(const CheckResult&)>& on_done) {
  std::vector<CheckResult> out;
  for (int id = 1; id <= kCheckCount; ++id) {
    out.push_back(run_check(id, seed));
    if (on_done) on_done(out.back());
  }
  return out;
}

}  // namespace isoqubit
