#include "qgame/search.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <stdexcept>
#include <thread>
#include <tuple>

namespace qgame {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kAuditStride = 4;  // quarter-density asymmetric audit

double pair_payoff_a(const GameMatrix& game, const Unitary2& ua,
                     const Unitary2& ub, EntanglementParam gamma) {
  return quantum_payoffs(game, measure_probs(evolve(ua, ub, gamma))).pi_a;
}

std::vector<Unitary2> grid_strategies(const GridSpec& grid) {
  std::vector<Unitary2> strategies;
  strategies.reserve(grid.size());
  for (int i = 0; i < grid.theta_steps; ++i) {
    for (int j = 0; j < grid.phi_steps; ++j) {
      strategies.push_back(build_unitary(grid.theta_at(i), grid.phi_at(j)));
    }
  }
  return strategies;
}

// Best payoff the row player can reach against each opponent strategy.  By
// the swap symmetry of the game matrix this doubles as the column player's
// best-response table.  Split over workers by opponent index; the merge is
// by index, so the result does not depend on the worker count.
std::vector<double> best_row_payoffs(const GameMatrix& game,
                                     const std::vector<Unitary2>& strategies,
                                     EntanglementParam gamma, int workers) {
  const int m = static_cast<int>(strategies.size());
  std::vector<double> best(m);

  if (workers <= 0) {
    workers = static_cast<int>(std::thread::hardware_concurrency());
    if (workers < 1) workers = 1;
  }
  workers = std::min(workers, m);

  const auto worker = [&](int begin, int end) {
    for (int t = begin; t < end; ++t) {
      double top = pair_payoff_a(game, strategies[0], strategies[t], gamma);
      for (int s = 1; s < m; ++s) {
        top = std::max(
            top, pair_payoff_a(game, strategies[s], strategies[t], gamma));
      }
      best[t] = top;
    }
  };

  if (workers == 1) {
    worker(0, m);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const int chunk = (m + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
      const int begin = w * chunk;
      const int end = std::min(m, begin + chunk);
      if (begin < end) pool.emplace_back(worker, begin, end);
    }
    for (auto& th : pool) th.join();
  }
  return best;
}

std::vector<int> audit_indices(int steps) {
  std::vector<int> indices;
  for (int i = 0; i < steps; i += kAuditStride) indices.push_back(i);
  if (indices.back() != steps - 1) indices.push_back(steps - 1);
  return indices;
}

struct Hit {
  int ia, ja, ib, jb;
  int stride;  // lattice pitch of the pass that found it
  double improvement;
};

// Clusters hits whose 4D grid indices are within one lattice step of each
// other (Chebyshev distance up to the coarser of the two strides).
std::vector<int> cluster_hits(const std::vector<Hit>& hits) {
  const int n = static_cast<int>(hits.size());
  std::vector<int> parent(hits.size());
  for (int i = 0; i < n; ++i) parent[i] = i;

  const std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  const auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  };

  // Bucket by cells at least as wide as the largest adjacency radius, so
  // only same-or-neighboring buckets need pairwise checks.
  const int cell = kAuditStride + 1;
  using Key = std::tuple<int, int, int, int>;
  std::map<Key, std::vector<int>> buckets;
  const auto key_of = [&](const Hit& h) {
    return Key{h.ia / cell, h.ja / cell, h.ib / cell, h.jb / cell};
  };
  for (int i = 0; i < n; ++i) buckets[key_of(hits[i])].push_back(i);

  const auto adjacent = [&](const Hit& a, const Hit& b) {
    const int radius = std::max(a.stride, b.stride);
    return std::abs(a.ia - b.ia) <= radius && std::abs(a.ja - b.ja) <= radius &&
           std::abs(a.ib - b.ib) <= radius && std::abs(a.jb - b.jb) <= radius;
  };

  for (int i = 0; i < n; ++i) {
    const Hit& h = hits[i];
    const auto [ka, kb, kc, kd] = key_of(h);
    for (int da = -1; da <= 1; ++da) {
      for (int db = -1; db <= 1; ++db) {
        for (int dc = -1; dc <= 1; ++dc) {
          for (int dd = -1; dd <= 1; ++dd) {
            const auto it = buckets.find(Key{ka + da, kb + db, kc + dc, kd + dd});
            if (it == buckets.end()) continue;
            for (int other : it->second) {
              if (other >= i) continue;
              if (adjacent(h, hits[other])) unite(i, other);
            }
          }
        }
      }
    }
  }

  std::vector<int> root(hits.size());
  for (int i = 0; i < n; ++i) root[i] = find(i);
  return root;
}

void append_number(std::string& out, double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  out += buf;
}

}  // namespace

double GridSpec::theta_at(int i) const {
  return theta_steps == 1 ? 0.0 : kPi * i / (theta_steps - 1);
}

double GridSpec::phi_at(int j) const {
  return phi_steps == 1 ? 0.0 : (kPi / 2.0) * j / (phi_steps - 1);
}

void validate(const GridSpec& grid) {
  if (grid.theta_steps < 1 || grid.phi_steps < 1) {
    throw std::domain_error("grid step counts must be >= 1");
  }
}

BestResponse best_response(const GameMatrix& game, const Unitary2& opponent,
                           EntanglementParam gamma, const GridSpec& grid,
                           Player responder) {
  validate(grid);

  std::vector<double> payoffs(grid.size());
  int id = 0;
  for (int i = 0; i < grid.theta_steps; ++i) {
    for (int j = 0; j < grid.phi_steps; ++j, ++id) {
      const Unitary2 u = build_unitary(grid.theta_at(i), grid.phi_at(j));
      const ProbVector4 eps =
          responder == Player::a
              ? measure_probs(evolve(u, opponent, gamma))
              : measure_probs(evolve(opponent, u, gamma));
      const PayoffPair pay = quantum_payoffs(game, eps);
      payoffs[id] =
          responder == Player::a ? pay.pi_a : pay.pi_b;
    }
  }

  int best_id = 0;
  for (int t = 1; t < grid.size(); ++t) {
    if (payoffs[t] >
        payoffs[best_id]) {
      best_id = t;
    }
  }
  const double best = payoffs[best_id];
  const double tie_eps = 1e-12 * std::max(1.0, std::abs(best));

  BestResponse result;
  result.payoff = best;
  result.strategy = build_unitary(grid.theta_at(best_id / grid.phi_steps),
                                  grid.phi_at(best_id % grid.phi_steps));
  for (int t = 0; t < grid.size(); ++t) {
    if (payoffs[t] >= best - tie_eps) {
      result.ties.emplace_back(t / grid.phi_steps, t % grid.phi_steps);
    }
  }
  return result;
}

double max_unilateral_improvement(const GameMatrix& game, const Unitary2& ua,
                                  const Unitary2& ub, EntanglementParam gamma,
                                  const GridSpec& grid) {
  validate(grid);
  const double own_a = pair_payoff_a(game, ua, ub, gamma);
  const double own_b = pair_payoff_a(game, ub, ua, gamma);

  double best_a = own_a;
  double best_b = own_b;
  for (int i = 0; i < grid.theta_steps; ++i) {
    for (int j = 0; j < grid.phi_steps; ++j) {
      const Unitary2 u = build_unitary(grid.theta_at(i), grid.phi_at(j));
      best_a = std::max(best_a, pair_payoff_a(game, u, ub, gamma));
      best_b = std::max(best_b, pair_payoff_a(game, u, ua, gamma));
    }
  }
  return std::max(best_a - own_a, best_b - own_b);
}

std::vector<ApproxNE> find_quantum_ne(const GameMatrix& game,
                                      EntanglementParam gamma,
                                      const GridSpec& grid, double tol,
                                      int workers) {
  validate(grid);
  const std::vector<Unitary2> strategies = grid_strategies(grid);
  const int m = static_cast<int>(strategies.size());
  const std::vector<double> best =
      best_row_payoffs(game, strategies, gamma, workers);

  const auto pi_a = [&](int s, int t) {
    return pair_payoff_a(game, strategies[s],
                         strategies[t], gamma);
  };

  std::vector<Hit> hits;

  // Symmetric pairs at full density.  For symmetric pairs both players face
  // the same improvement.
  for (int a = 0; a < m; ++a) {
    const double gap = best[a] - pi_a(a, a);
    if (gap <= tol) {
      hits.push_back({a / grid.phi_steps, a % grid.phi_steps,
                      a / grid.phi_steps, a % grid.phi_steps, 1, gap});
    }
  }

  // Asymmetric pairs on the coarse sublattice.
  const std::vector<int> ti = audit_indices(grid.theta_steps);
  const std::vector<int> pj = audit_indices(grid.phi_steps);
  std::vector<int> audit;
  for (int i : ti) {
    for (int j : pj) audit.push_back(i * grid.phi_steps + j);
  }
  for (int a : audit) {
    for (int b : audit) {
      if (a == b) continue;
      const double gap_a = best[b] - pi_a(a, b);
      if (gap_a > tol) continue;
      const double gap_b = best[a] - pi_a(b, a);
      if (gap_b > tol) continue;
      hits.push_back({a / grid.phi_steps, a % grid.phi_steps,
                      b / grid.phi_steps, b % grid.phi_steps, kAuditStride,
                      std::max(gap_a, gap_b)});
    }
  }

  if (hits.empty()) return {};

  const std::vector<int> root = cluster_hits(hits);

  struct Cluster {
    int representative = -1;
    int size = 0;
  };
  std::map<int, Cluster> clusters;
  const auto better = [&](const Hit& lhs, const Hit& rhs) {
    return std::tie(lhs.improvement, lhs.ia, lhs.ja, lhs.ib, lhs.jb) <
           std::tie(rhs.improvement, rhs.ia, rhs.ja, rhs.ib, rhs.jb);
  };
  for (int i = 0; i < static_cast<int>(hits.size()); ++i) {
    Cluster& c = clusters[root[i]];
    ++c.size;
    if (c.representative < 0 ||
        better(hits[i],
               hits[c.representative])) {
      c.representative = i;
    }
  }

  std::vector<ApproxNE> found;
  for (const auto& [ignored, cluster] : clusters) {
    const Hit& rep = hits[cluster.representative];
    ApproxNE ne;
    ne.ua = strategies[rep.ia * grid.phi_steps + rep.ja];
    ne.ub = strategies[rep.ib * grid.phi_steps + rep.jb];
    ne.payoffs = quantum_payoffs(game, measure_probs(evolve(ne.ua, ne.ub, gamma)));
    ne.max_improvement =
        max_unilateral_improvement(game, ne.ua, ne.ub, gamma, grid);
    ne.grid = grid;
    ne.cluster_size = cluster.size;
    if (ne.max_improvement <= tol) found.push_back(std::move(ne));
  }

  std::sort(found.begin(), found.end(), [](const ApproxNE& x, const ApproxNE& y) {
    return std::tie(x.ua.theta, x.ua.phi, x.ub.theta, x.ub.phi) <
           std::tie(y.ua.theta, y.ua.phi, y.ub.theta, y.ub.phi);
  });
  return found;
}

std::vector<SweepEntry> entanglement_sweep(const GameMatrix& game,
                                           double gamma_from, double gamma_to,
                                           int samples, const GridSpec& grid,
                                           double tol, int workers) {
  if (samples < 1) throw std::domain_error("sweep needs at least one sample");
  if (!(gamma_from >= 0.0 && gamma_from <= gamma_to &&
        gamma_to <= kPi / 2.0)) {
    throw std::domain_error("gamma_ent range must satisfy 0 <= from <= to <= pi/2");
  }

  std::vector<SweepEntry> table;
  table.reserve(samples);
  for (int i = 0; i < samples; ++i) {
    double value = gamma_from;
    if (samples > 1) {
      value = i == samples - 1
                  ? gamma_to
                  : gamma_from + (gamma_to - gamma_from) * i / (samples - 1);
    }
    table.push_back({value, find_quantum_ne(game, EntanglementParam(value),
                                            grid, tol, workers)});
  }
  return table;
}

std::string sweep_to_csv(const std::vector<SweepEntry>& table) {
  std::string out =
      "gamma_ent,theta_a,phi_a,theta_b,phi_b,pi_a,pi_b,max_improvement\n";
  for (const SweepEntry& entry : table) {
    for (const ApproxNE& ne : entry.equilibria) {
      append_number(out, entry.gamma_ent);
      for (double v : {ne.ua.theta, ne.ua.phi, ne.ub.theta, ne.ub.phi,
                       ne.payoffs.pi_a, ne.payoffs.pi_b, ne.max_improvement}) {
        out += ',';
        append_number(out, v);
      }
      out += '\n';
    }
  }
  return out;
}

}  // namespace qgame
