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

#include "isoqubit/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "isoqubit/checks.hpp"
#include "isoqubit/codes.hpp"
#include "isoqubit/entropy.hpp"
#include "isoqubit/hiding.hpp"
#include "isoqubit/io.hpp"
#include "isoqubit/net.hpp"
#include "isoqubit/otm.hpp"
#include "isoqubit/random.hpp"
#include "isoqubit/strategy.hpp"

namespace isoqubit {

namespace {

using Row = std::vector<std::string>;

[[noreturn]] void config_fail(const std::string& field, const std::string& msg) {
  throw Error(ErrorKind::ConfigError, field + ": " + msg);
}

std::string num(double x) { return format_number(x); }
std::string num(int x) { return std::to_string(x); }
std::string num(std::uint64_t x) { return std::to_string(x); }

int worker_count(const ExperimentConfig& c) {
  if (c.workers > 0) return c.workers;
  return std::max(1U, std::thread::hardware_concurrency());
}

// Runs f(0..count-1) on a pool; results are stored by index, and the
// lowest-index exception (if any) is rethrown.
template <typename T>
std::vector<T> parallel_map(int count, int workers, const std::function<T(int)>& f) {
  std::vector<T> out(static_cast<std::size_t>(count));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(count));
  std::atomic<int> next{0};
  auto work = [&] {
    for (int i = next++; i < count; i = next++) {
      try {
        out[static_cast<std::size_t>(i)] = f(i);
      } catch (...) {
        errors[static_cast<std::size_t>(i)] = std::current_exception();
      }
    }
  };
  const int nthreads = std::min(workers, count);
  if (nthreads <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < nthreads; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

std::uint64_t item_seed(const ExperimentConfig& c, int i) {
  return derive_seed(c.seed, static_cast<std::uint64_t>(i));
}

bool starts_with(const std::string& s, const char* prefix) { return s.rfind(prefix, 0) == 0; }

bool exact_otm(const std::string& e) {
  return e == "otm-leak" || e == "otm-info" || e == "otm-collision" || e == "otm-phases";
}

MeasurementNet make_net(const ExperimentConfig& c) { return build_net_qoutcome(c.q, c.eps); }

double net_size_estimate(int q, double eps) {
  if (q == 2) return std::ceil(kFibonacciDensity / (eps * eps)) + 2.0;
  const double delta = eps / q;
  const double lattice = std::ceil(kFibonacciDensity / (delta * delta)) + 2.0;
  const double weights = std::ceil(1.0 / (2.0 * delta)) + 1.0;
  return std::pow(lattice * weights, q - 1);
}

int default_m(const ExperimentConfig& c) { return c.m >= 0 ? c.m : std::min(4, c.n); }

int default_depth(const ExperimentConfig& c) {
  if (c.depth >= 0) return c.depth;
  return c.experiment == "otm-info" ? std::min(c.n, 2) : c.n;
}

// k for OTM experiments; slack violations become field errors.
int otm_k(const ExperimentConfig& c) {
  if (c.k > 0) return c.k;
  try {
    return derive_params(c.n, c.theta, c.tau).k;
  } catch (const Error& e) {
    config_fail("theta/tau", e.what());
  }
}

OtmDevice otm_device(const ExperimentConfig& c, int i) {
  const std::uint64_t s = item_seed(c, i);
  return sample_device(c.n, otm_k(c), c.theta, c.tau, derive_seed(s, 0), derive_seed(s, 1));
}

Side parse_side(const std::string& s) { return s == "T" ? Side::T : Side::S; }

// -- experiments ----------------------------------------------------------

ExperimentResult net_build(const ExperimentConfig& c) {
  const MeasurementNet net = make_net(c);
  ExperimentResult r;
  r.artifact = net_to_json(net);
  r.table.columns = {"q", "epsilon", "members", "achieved_constant", "members_eps2"};
  r.table.rows.push_back({num(c.q), num(c.eps), num(static_cast<std::uint64_t>(net.size())),
                          num(achieved_net_constant(net)),
                          num(static_cast<double>(net.size()) * c.eps * c.eps)});
  return r;
}

ExperimentResult hiding_sample(const ExperimentConfig& c) {
  const std::uint64_t s = item_seed(c, 0);
  Rng rng(s);
  const HidingEnsemble e = sample_ensemble(c.nb, c.n, rng);
  std::ostringstream os;
  write_ensemble(os, e, s);
  ExperimentResult r;
  r.artifact = os.str();
  r.table.columns = {"seed", "nb", "n", "gramfro"};
  r.table.rows.push_back({num(s), num(c.nb), num(c.n), num(gram_frobenius(ensemble_states(e)))});
  return r;
}

ExperimentResult hiding_pgm(const ExperimentConfig& c) {
  ExperimentResult r;
  r.table.columns = {"seed",       "success_prob", "gram_bound", "gramfro",
                     "info",       "info_bound",   "precondition"};
  r.table.rows = parallel_map<Row>(c.seeds, worker_count(c), [&](int i) {
    const std::uint64_t s = item_seed(c, i);
    Rng rng(s);
    const auto states = ensemble_states(sample_ensemble(c.nb, c.n, rng));
    const PgmSuccess p = pgm_success(states);
    const double info = mutual_information(pgm_joint(states));
    const double eps = std::max(0.0, 1.0 - p.probability);
    const bool pre = success_to_info_precondition(eps, c.nb);
    return Row{num(s),    num(p.probability),
               num(p.gram_bound), num(p.gram_frobenius),
               num(info), pre ? num(success_to_info_bound(eps, c.nb)) : std::string(),
               pre ? "1" : "0"};
  });
  return r;
}

ExperimentResult hiding_game(const ExperimentConfig& c) {
  const MeasurementNet net = make_net(c);
  const StrategyTree comp = computational_strategy(c.n);
  ExperimentResult r;
  r.table.columns = {"seed",   "comp_info",   "comp_cond_entropy", "oracle_cond_entropy",
                     "holevo", "greedy_info", "greedy_cond_entropy"};
  r.table.rows = parallel_map<Row>(c.seeds, worker_count(c), [&](int i) {
    const std::uint64_t s = item_seed(c, i);
    Rng rng(s);
    const HidingEnsemble e = sample_ensemble(c.nb, c.n, rng);
    const auto states = ensemble_states(e);
    const Distribution prior = Distribution::uniform(states.size());
    const GameStats g = game_information(comp, states, prior);
    double mixed = 0.0;
    for (AlphaCode code : e.codes()) {
      mixed += (code == AlphaCode::k01 || code == AlphaCode::k10) ? 1 : 0;
    }
    std::vector<int> all(static_cast<std::size_t>(c.n));
    for (int a = 0; a < c.n; ++a) all[static_cast<std::size_t>(a)] = a;
    const GameStats gg = game_information(greedy_strategy(states, prior, net), states, prior);
    return Row{num(s),
               num(g.information),
               num(g.conditional_entropy),
               num(mixed / static_cast<double>(e.rows())),
               num(holevo_chi(states, prior, all)),
               num(gg.information),
               num(gg.conditional_entropy)};
  });
  return r;
}

ExperimentResult hiding_search(const ExperimentConfig& c) {
  const MeasurementNet net = make_net(c);
  const int depth = default_depth(c);
  const auto roots = static_cast<int>(static_cast<std::size_t>(c.n) * net.size());
  ExperimentResult r;
  r.table.columns = {"seed", "depth", "net_size", "trees", "max_info", "greedy_info", "holevo"};
  for (int i = 0; i < c.seeds; ++i) {
    const std::uint64_t s = item_seed(c, i);
    Rng rng(s);
    const auto states = ensemble_states(sample_ensemble(c.nb, c.n, rng));
    const Distribution prior = Distribution::uniform(states.size());
    struct Part {
      double best = 0.0;
      std::uint64_t trees = 0;
    };
    // Disjoint root choices go to independent workers.
    const auto parts = parallel_map<Part>(roots, worker_count(c), [&](int root) {
      Part p;
      enumerate_strategies(
          c.n, net, depth, c.cap,
          [&](const StrategyTree& t) {
            p.best = std::max(p.best, game_information(t, states, prior).information);
            ++p.trees;
          },
          RootRange{static_cast<std::size_t>(root), static_cast<std::size_t>(root) + 1});
      return p;
    });
    Part total;
    for (const auto& p : parts) {
      total.best = std::max(total.best, p.best);
      total.trees += p.trees;
    }
    std::vector<int> all(static_cast<std::size_t>(c.n));
    for (int a = 0; a < c.n; ++a) all[static_cast<std::size_t>(a)] = a;
    const double greedy =
        game_information(greedy_strategy(states, prior, net, depth), states, prior).information;
    r.table.rows.push_back({num(s), num(depth), num(static_cast<std::uint64_t>(net.size())),
                            num(total.trees), num(total.best), num(greedy),
                            num(holevo_chi(states, prior, all))});
  }
  return r;
}

Row collision_row(std::uint64_t s, const CollisionScan& scan, double reference, int m) {
  return Row{num(s),
             num(m),
             num(scan.outcomes),
             num(scan.min_h2),
             num(reference),
             num(reference - scan.min_h2),
             num(scan.max_identity_residual)};
}

const std::vector<std::string> kCollisionColumns = {
    "seed", "m", "outcomes", "min_h2", "reference", "slack", "max_identity_residual"};

ExperimentResult hiding_collision(const ExperimentConfig& c) {
  const MeasurementNet net = make_net(c);
  const int m = default_m(c);
  ExperimentResult r;
  r.table.columns = kCollisionColumns;
  r.table.rows = parallel_map<Row>(c.seeds, worker_count(c), [&](int i) {
    const std::uint64_t s = item_seed(c, i);
    Rng rng(s);
    const auto states = ensemble_states(sample_ensemble(c.nb, c.n, rng));
    return collision_row(s, collision_scan(states, net, m, c.cap),
                         c.nb - m * std::log2(1.5), m);
  });
  return r;
}

ExperimentResult otm_sample(const ExperimentConfig& c) {
  const OtmDevice d = otm_device(c, 0);
  std::ostringstream os;
  write_device(os, d);
  ExperimentResult r;
  r.artifact = os.str();
  r.table.columns = {"seed", "n", "k", "theta", "tau", "r", "seed_c", "seed_d"};
  r.table.rows.push_back({num(item_seed(c, 0)), num(d.params.n), num(d.params.k),
                          num(d.params.theta), num(d.params.tau), num(d.params.r), num(d.seed_c),
                          num(d.seed_d)});
  return r;
}

ExperimentResult otm_encode_exp(const ExperimentConfig& c) {
  const OtmDevice d = otm_device(c, 0);
  const ProductState psi = otm_encode(d, c.s, c.t);
  ExperimentResult r;
  r.table.columns = {"seed", "qubit", "c_bit", "d_bit", "amp0_re", "amp0_im", "amp1_re", "amp1_im"};
  for (int a = 0; a < c.n; ++a) {
    const auto& q = psi[static_cast<std::size_t>(a)];
    r.table.rows.push_back({num(item_seed(c, 0)), num(a), num(int(d.code_c[c.s].get(a))),
                            num(int(d.code_d[c.t].get(a))), num(q.amp0().real()),
                            num(q.amp0().imag()), num(q.amp1().real()), num(q.amp1().imag())});
  }
  return r;
}

ExperimentResult otm_honest(const ExperimentConfig& c) {
  const int k = otm_k(c);
  const Side side = parse_side(c.side);
  ExperimentResult r;
  r.table.columns = {"seed", "side", "n", "k", "trials", "success_rate", "error_rate"};
  r.table.rows = parallel_map<Row>(c.seeds, worker_count(c), [&](int i) {
    const std::uint64_t s = item_seed(c, i);
    const HonestStats st = honest_monte_carlo(c.n, k, 1, c.trials, side, s);
    return Row{num(s), c.side, num(c.n), num(k), num(st.trials), num(st.success_rate()),
               num(st.error_rate())};
  });
  return r;
}

ExperimentResult otm_leak(const ExperimentConfig& c) {
  ExperimentResult r;
  r.table.columns = {"seed",         "k",           "mutual_info",    "cond_entropy",
                     "worst_shannon", "worst_collision", "worst_min", "epsilon",
                     "smoothed_bound", "delta_shannon", "delta_smoothed"};
  r.table.rows = parallel_map<Row>(c.seeds, worker_count(c), [&](int i) {
    const OtmDevice d = otm_device(c, i);
    const LeakReport l = leak_eval(d, c.theta);
    return Row{num(item_seed(c, i)), num(d.params.k),       num(l.mutual_info),
               num(l.conditional_entropy), num(l.worst.shannon), num(l.worst.collision),
               num(l.worst.min_entropy), num(l.epsilon),          num(l.worst.smoothed_bound),
               num(l.delta_shannon),  num(l.delta_smoothed)};
  });
  return r;
}

ExperimentResult otm_info(const ExperimentConfig& c) {
  const MeasurementNet net = make_net(c);
  const int depth = default_depth(c);
  ExperimentResult r;
  r.table.columns = {"seed",        "k",           "leak_info",       "honest_s_info",
                     "honest_t_info", "greedy_info", "enumerated_max", "depth",
                     "trees",       "two_k"};
  r.table.rows = parallel_map<Row>(c.seeds, worker_count(c), [&](int i) {
    const OtmDevice d = otm_device(c, i);
    const auto family = otm_family(d);
    const Distribution prior = Distribution::uniform(family.size());
    double best = 0.0;
    std::uint64_t trees = 0;
    enumerate_strategies(c.n, net, depth, c.cap, [&](const StrategyTree& t) {
      best = std::max(best, game_information(t, family, prior).information);
      ++trees;
    });
    return Row{num(item_seed(c, i)),
               num(d.params.k),
               num(otm_information(d, leak_strategy(c.n))),
               num(otm_information(d, honest_strategy(Side::S, c.n))),
               num(otm_information(d, honest_strategy(Side::T, c.n))),
               num(game_information(greedy_strategy(family, prior, net), family, prior).information),
               num(best),
               num(depth),
               num(trees),
               num(2 * d.params.k)};
  });
  return r;
}

ExperimentResult otm_collision(const ExperimentConfig& c) {
  const MeasurementNet net = make_net(c);
  ExperimentResult r;
  r.table.columns = kCollisionColumns;
  r.table.rows = parallel_map<Row>(c.seeds, worker_count(c), [&](int i) {
    const OtmDevice d = otm_device(c, i);
    const int k = d.params.k;
    const int m = c.m >= 0 ? c.m : split_points(k, c.n, 2.0 * k).m;
    return collision_row(item_seed(c, i), collision_scan(otm_family(d), net, m, c.cap),
                         2.0 * k - m * std::log2(1.5), m);
  });
  return r;
}

ExperimentResult otm_phases(const ExperimentConfig& c) {
  ExperimentResult r;
  r.table.columns = {"seed",      "m",         "mt",          "h",     "first",
                     "second",    "remainder", "holevo_cap",  "total", "chain_residual"};
  r.table.rows = parallel_map<Row>(c.seeds, worker_count(c), [&](int i) {
    const OtmDevice d = otm_device(c, i);
    const int k = d.params.k;
    Rng rng(derive_seed(item_seed(c, i), 2));
    const StrategyTree strat = random_strategy(c.n, c.n, rng);
    const int m = split_points(k, c.n, k).m;
    const double h = std::max<double>(k, min_prefix_collision(d, strat, m));
    const SplitPoints sp = split_points(k, c.n, h);
    const PhaseDecomposition pd = phase_decomposition(d, strat, sp);
    return Row{num(item_seed(c, i)), num(sp.m),         num(sp.mt),
               num(sp.h),            num(pd.first),     num(pd.second),
               num(pd.remainder),    num(pd.holevo_cap), num(pd.total),
               num(pd.first + pd.second + pd.remainder - pd.total)};
  });
  return r;
}

ExperimentResult codes_params(const ExperimentConfig& c) {
  const CodeParams p = derive_params(c.n, c.theta, c.tau);
  ExperimentResult r;
  r.table.columns = {"n", "k", "theta", "tau", "r", "radius", "p_e", "capacity", "h_prime"};
  r.table.rows.push_back({num(p.n), num(p.k), num(p.theta), num(p.tau), num(p.r), num(p.radius()),
                          num(p.p_e), num(1.0 - binary_entropy(p.p_e)),
                          num(binary_entropy_derivative(p.p_e))});
  return r;
}

ExperimentResult codes_bound(const ExperimentConfig& c) {
  const DecodeBound b = decode_success_bound(c.n, c.theta, c.tau, c.lambda);
  ExperimentResult r;
  r.table.columns = {"n", "theta", "tau", "lambda", "code_confidence", "success"};
  r.table.rows.push_back({num(c.n), num(c.theta), num(c.tau), num(c.lambda),
                          num(b.code_confidence), num(b.success)});
  return r;
}

ExperimentResult codes_montecarlo(const ExperimentConfig& c) {
  const CodeParams p = derive_params(c.n, c.theta, c.tau);
  const double bound = decode_success_bound(c.n, c.theta, c.tau, c.lambda).success;
  ExperimentResult r;
  r.table.columns = {"seed", "n", "k", "trials", "success_rate", "flip_rate", "bound_success"};
  r.table.rows = parallel_map<Row>(c.seeds, worker_count(c), [&](int i) {
    const std::uint64_t s = item_seed(c, i);
    const MonteCarloResult mc = decode_monte_carlo(p, 1, c.trials, s);
    return Row{num(s), num(p.n), num(p.k), num(mc.trials), num(mc.success_rate()),
               num(mc.flip_rate()), num(bound)};
  });
  return r;
}

ExperimentResult check_all(const ExperimentConfig& c) {
  ExperimentResult r;
  r.table.columns = {"id", "name", "passed", "seconds", "detail"};
  for (const auto& cr : run_all_checks(c.seed)) {
    r.ok = r.ok && cr.passed;
    r.table.rows.push_back(
        {num(cr.id), cr.name, cr.passed ? "1" : "0", num(cr.seconds), cr.detail});
  }
  return r;
}

using Runner = std::function<ExperimentResult(const ExperimentConfig&)>;

const std::vector<std::pair<std::string, Runner>>& registry() {
  static const std::vector<std::pair<std::string, Runner>> r = {
      {"net-build", net_build},
      {"hiding-sample", hiding_sample},
      {"hiding-pgm", hiding_pgm},
      {"hiding-game", hiding_game},
      {"hiding-search", hiding_search},
      {"hiding-collision", hiding_collision},
      {"otm-sample", otm_sample},
      {"otm-encode", otm_encode_exp},
      {"otm-honest", otm_honest},
      {"otm-leak", otm_leak},
      {"otm-info", otm_info},
      {"otm-collision", otm_collision},
      {"otm-phases", otm_phases},
      {"codes-params", codes_params},
      {"codes-bound", codes_bound},
      {"codes-montecarlo", codes_montecarlo},
      {"check-all", check_all},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& experiment_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, _] : registry()) v.push_back(name);
    return v;
  }();
  return names;
}

void validate_config(const ExperimentConfig& c) {
  const auto& names = experiment_names();
  if (std::find(names.begin(), names.end(), c.experiment) == names.end()) {
    config_fail("experiment", "unknown experiment '" + c.experiment + "'");
  }
  if (c.format != "csv" && c.format != "json") config_fail("format", "must be csv or json");
  if (c.seeds < 1) config_fail("seeds", "must be >= 1");
  if (c.trials < 1) config_fail("trials", "must be >= 1");
  if (c.workers < 0) config_fail("workers", "must be >= 0");
  if (!(c.cap > 0.0)) config_fail("cap", "must be positive");
  if (c.max_dim < 1 || c.max_dim > kMaxDenseQubits) config_fail("max-dim", "must lie in [1, 14]");
  if (!(c.eps > 0.0 && c.eps <= 1.0)) config_fail("eps", "must lie in (0, 1]");
  if (c.q < 2) config_fail("q", "must be >= 2");
  if (!(c.lambda >= 1.0)) config_fail("lambda", "must be >= 1");
  if (c.side != "S" && c.side != "T") config_fail("side", "must be S or T");
  if (c.n < 1) config_fail("n", "must be >= 1");

  const std::string& e = c.experiment;
  const bool uses_net = e == "net-build" || e == "hiding-game" || e == "hiding-search" ||
                        e == "hiding-collision" || e == "otm-info" || e == "otm-collision";
  if (uses_net && net_size_estimate(c.q, c.eps) > c.cap) {
    config_fail("eps", "net for q=" + std::to_string(c.q) + " would need about " +
                           format_number(net_size_estimate(c.q, c.eps)) +
                           " candidate tuples, above cap " + format_number(c.cap));
  }

  if (starts_with(e, "hiding-")) {
    if (c.nb < 0 || c.nb > kMaxHidingBits) config_fail("nb", "must lie in [0, 14]");
    if (c.n > c.max_dim) config_fail("n", "must lie in [1, max-dim]");
    if (e == "hiding-collision") {
      const int m = default_m(c);
      if (m > c.n) config_fail("m", "must lie in [0, n]");
      double count = std::pow(net_size_estimate(c.q, c.eps) * c.q, m);
      for (int i = 0; i < m; ++i) count = count * (c.n - i) / (i + 1);
      if (count > c.cap) {
        config_fail("cap", "collision scan would visit " + format_number(count) + " outcomes");
      }
    }
    if (e == "hiding-search") {
      const int depth = default_depth(c);
      if (depth > c.n) config_fail("depth", "must lie in [0, n]");
      const double count =
          count_strategies(c.n, static_cast<std::size_t>(net_size_estimate(c.q, c.eps)), c.q, depth);
      if (count > c.cap) {
        config_fail("cap", "enumeration would produce " + format_number(count) + " trees");
      }
    }
  }

  if (starts_with(e, "otm-")) {
    if (c.n > 4096) config_fail("n", "must be <= 4096");
    const int k = otm_k(c);
    if (k > kMaxCodeBits) config_fail("k", "must be <= 20");
    if (exact_otm(e)) {
      if (k > kMaxExactOtmBits) config_fail("k", "exact joints need k <= 6");
      if (c.n > 12) config_fail("n", "exact joints need n <= 12");
    }
    if (e == "otm-encode") {
      const std::uint64_t size = std::uint64_t{1} << k;
      if (c.s >= size) config_fail("s", "must be < 2^k");
      if (c.t >= size) config_fail("t", "must be < 2^k");
    }
    if (e == "otm-info") {
      const int depth = default_depth(c);
      if (depth > c.n) config_fail("depth", "must lie in [0, n]");
      const double count =
          count_strategies(c.n, static_cast<std::size_t>(net_size_estimate(c.q, c.eps)), c.q, depth);
      if (count > c.cap) {
        config_fail("cap", "enumeration would produce " + format_number(count) + " trees");
      }
    }
    if (e == "otm-collision" && c.m > c.n) config_fail("m", "must lie in [0, n]");
  }

  if (starts_with(e, "codes-")) {
    try {
      if (e == "codes-bound") {
        decode_success_bound(c.n, c.theta, c.tau, c.lambda);
      } else {
        const CodeParams p = derive_params(c.n, c.theta, c.tau);
        if (e == "codes-montecarlo" && p.k > kMaxCodeBits) {
          config_fail("theta", "derived k = " + std::to_string(p.k) + " exceeds the table cap 20");
        }
      }
    } catch (const Error& err) {
      if (err.kind() == ErrorKind::ConfigError) throw;
      config_fail("theta/tau", err.what());
    }
  }
}

ExperimentResult run(const ExperimentConfig& config) {
  validate_config(config);
  for (const auto& [name, runner] : registry()) {
    if (name == config.experiment) return runner(config);
  }
  config_fail("experiment", "unknown experiment '" + config.experiment + "'");
}

std::string format_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x == 0.0 ? 0.0 : x);
  return buf;
}

namespace {

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

std::string format_csv(const ExperimentConfig& config, const Table& table) {
  std::ostringstream os;
  os << "# experiment=" << config.experiment << " version=" << kVersion
     << " seed=" << config.seed << '\n';
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    os << (i ? "," : "") << csv_cell(table.columns[i]);
  }
  os << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_cell(row[i]);
    os << '\n';
  }
  return os.str();
}

std::string format_json(const ExperimentConfig& config, const Table& table) {
  using nlohmann::json;
  json rows = json::array();
  for (const auto& row : table.rows) {
    json obj = json::object();
    for (std::size_t i = 0; i < row.size() && i < table.columns.size(); ++i) {
      const std::string& cell = row[i];
      // Numeric cells become JSON numbers; everything else stays a string.
      char* end = nullptr;
      const double v = cell.empty() ? 0.0 : std::strtod(cell.c_str(), &end);
      if (!cell.empty() && end && *end == '\0' && std::isfinite(v)) {
        obj[table.columns[i]] = json::parse(cell);
      } else {
        obj[table.columns[i]] = cell;
      }
    }
    rows.push_back(obj);
  }
  json doc = {{"experiment", config.experiment},
              {"version", kVersion},
              {"seed", config.seed},
              {"columns", table.columns},
              {"rows", rows}};
  return doc.dump(2) + "\n";
}

}  // namespace isoqubit
