// Copyright 2026 The vrpsplit Authors
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

#include "vrpsplit/routing.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "vrpsplit/rng.hpp"

namespace vrpsplit {
namespace {

constexpr double kEps = 1e-9;

using Clock = std::chrono::steady_clock;

double elapsed_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::int64_t route_load(const std::vector<int>& customers, const Instance& inst) {
  std::int64_t load = 0;
  for (int c : customers) load += inst.demand(c);
  return load;
}

// ---------------------------------------------------------------------------
// Construction
// ---------------------------------------------------------------------------

// Clarke-Wright parallel savings; the result may use more vehicles than
// allowed when capacity blocks further merges.
std::vector<Route> savings_construction(const Subproblem& sub) {
  const Instance& inst = *sub.master;
  const auto& ids = sub.subset;
  const int n = static_cast<int>(ids.size());

  std::vector<std::vector<int>> routes(n);
  std::vector<std::int64_t> loads(n);
  std::vector<int> route_of(n);
  for (int i = 0; i < n; ++i) {
    routes[i] = {ids[i]};
    loads[i] = inst.demand(ids[i]);
    route_of[i] = i;
  }

  struct Saving {
    double value;
    int a, b;  // positions in `ids`
  };
  std::vector<Saving> savings;
  savings.reserve(static_cast<size_t>(n) * (n - 1) / 2);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      double s = inst.distance(0, ids[a]) + inst.distance(0, ids[b]) -
                 inst.distance(ids[a], ids[b]);
      if (s > 0.0) savings.push_back({s, a, b});
    }
  std::sort(savings.begin(), savings.end(), [](const Saving& x, const Saving& y) {
    if (x.value != y.value) return x.value > y.value;
    return std::tie(x.a, x.b) < std::tie(y.a, y.b);
  });

  auto endpoint = [&](int pos) {
    const auto& r = routes[route_of[pos]];
    return r.front() == ids[pos] || r.back() == ids[pos];
  };

  for (const auto& s : savings) {
    int ra = route_of[s.a], rb = route_of[s.b];
    if (ra == rb || !endpoint(s.a) || !endpoint(s.b)) continue;
    if (loads[ra] + loads[rb] > inst.capacity()) continue;
    auto& A = routes[ra];
    auto& B = routes[rb];
    if (A.front() == ids[s.a]) std::reverse(A.begin(), A.end());
    if (B.back() == ids[s.b]) std::reverse(B.begin(), B.end());
    for (int c : B) A.push_back(c);
    loads[ra] += loads[rb];
    for (int i = 0; i < n; ++i)
      if (route_of[i] == rb) route_of[i] = ra;
    B.clear();
    loads[rb] = 0;
  }

  std::vector<Route> out;
  for (int r = 0; r < n; ++r)
    if (!routes[r].empty()) out.push_back({std::move(routes[r]), loads[r]});
  return out;
}

// First-fit packing into at most `bins` routes, demand-sorted first and then
// seeded shuffles; a single-level swap repair handles near-tight fits.
std::optional<std::vector<Route>> first_fit_construction(const Subproblem& sub,
                                                         std::uint64_t seed) {
  const Instance& inst = *sub.master;
  const int bins = sub.vehicles;
  const std::int64_t cap = inst.capacity();

  auto try_pack = [&](const std::vector<int>& order)
      -> std::optional<std::vector<std::vector<int>>> {
    std::vector<std::vector<int>> pack(bins);
    std::vector<std::int64_t> loads(bins, 0);
    for (int c : order) {
      const std::int64_t d = inst.demand(c);
      int placed = -1;
      for (int b = 0; b < bins; ++b)
        if (loads[b] + d <= cap) {
          placed = b;
          break;
        }
      if (placed < 0) {
        // Swap repair: evict one placed customer that frees enough room and
        // fits elsewhere.
        for (int b = 0; b < bins && placed < 0; ++b) {
          for (size_t p = 0; p < pack[b].size() && placed < 0; ++p) {
            int y = pack[b][p];
            std::int64_t dy = inst.demand(y);
            if (loads[b] - dy + d > cap) continue;
            for (int b2 = 0; b2 < bins; ++b2) {
              if (b2 == b || loads[b2] + dy > cap) continue;
              pack[b][p] = c;
              loads[b] += d - dy;
              pack[b2].push_back(y);
              loads[b2] += dy;
              placed = b;
              break;
            }
          }
        }
        if (placed < 0) return std::nullopt;
      } else {
        pack[placed].push_back(c);
        loads[placed] += d;
      }
    }
    return pack;
  };

  std::vector<int> order = sub.subset;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return inst.demand(a) != inst.demand(b) ? inst.demand(a) > inst.demand(b)
                                            : a < b;
  });
  auto pack = try_pack(order);
  std::mt19937_64 rng(mix64(seed));
  for (int attempt = 0; !pack && attempt < 64; ++attempt) {
    std::shuffle(order.begin(), order.end(), rng);
    pack = try_pack(order);
  }
  if (!pack) return std::nullopt;

  // Order each bin by nearest neighbor from the depot; local search will
  // polish from there.
  std::vector<Route> routes;
  for (auto& bin : *pack) {
    if (bin.empty()) continue;
    std::vector<int> tour;
    int at = 0;
    std::vector<int> remaining = bin;
    while (!remaining.empty()) {
      auto next = std::min_element(
          remaining.begin(), remaining.end(), [&](int a, int b) {
            double da = inst.distance(at, a), db = inst.distance(at, b);
            return da != db ? da < db : a < b;
          });
      at = *next;
      tour.push_back(at);
      remaining.erase(next);
    }
    routes.push_back({std::move(tour), route_load(bin, inst)});
  }
  return routes;
}

// ---------------------------------------------------------------------------
// Local search
// ---------------------------------------------------------------------------

struct SearchState {
  std::vector<Route> routes;
  double objective = 0.0;
};

double recompute_objective(const std::vector<Route>& routes, const Instance& inst) {
  double total = 0.0;
  for (const auto& r : routes) total += route_cost(r, inst);
  return total;
}

void drop_empty_routes(std::vector<Route>& routes) {
  std::erase_if(routes, [](const Route& r) { return r.customers.empty(); });
}

// One first-improvement scan: intra-route 2-opt, then inter-route relocate,
// then inter-route swap, in a fixed deterministic order. Applies the first
// improving move and returns its delta; returns nullopt at a local optimum.
std::optional<double> apply_first_improvement(SearchState& s, const Instance& inst) {
  const auto dist = [&](int a, int b) { return inst.distance(a, b); };

  // 2-opt: reverse segment [a..b].
  for (auto& route : s.routes) {
    auto& r = route.customers;
    const int len = static_cast<int>(r.size());
    for (int a = 0; a < len - 1; ++a) {
      const int prev = a > 0 ? r[a - 1] : 0;
      for (int b = a + 1; b < len; ++b) {
        if (a == 0 && b == len - 1) continue;  // whole-route reversal is free
        const int next = b < len - 1 ? r[b + 1] : 0;
        const double delta = dist(prev, r[b]) + dist(r[a], next) -
                             dist(prev, r[a]) - dist(r[b], next);
        if (delta < -kEps) {
          std::reverse(r.begin() + a, r.begin() + b + 1);
          s.objective += delta;
          return delta;
        }
      }
    }
  }

  // Relocate: move one customer to another route.
  const int m = static_cast<int>(s.routes.size());
  for (int r1 = 0; r1 < m; ++r1) {
    auto& from = s.routes[r1];
    const int len1 = static_cast<int>(from.customers.size());
    for (int p = 0; p < len1; ++p) {
      const int x = from.customers[p];
      const std::int64_t dx = inst.demand(x);
      const int pa = p > 0 ? from.customers[p - 1] : 0;
      const int na = p < len1 - 1 ? from.customers[p + 1] : 0;
      const double remove_delta = dist(pa, na) - dist(pa, x) - dist(x, na);
      for (int r2 = 0; r2 < m; ++r2) {
        if (r2 == r1) continue;
        auto& to = s.routes[r2];
        if (to.load + dx > inst.capacity()) continue;
        const int len2 = static_cast<int>(to.customers.size());
        for (int q = 0; q <= len2; ++q) {
          const int u = q > 0 ? to.customers[q - 1] : 0;
          const int v = q < len2 ? to.customers[q] : 0;
          const double delta =
              remove_delta + dist(u, x) + dist(x, v) - dist(u, v);
          if (delta < -kEps) {
            from.customers.erase(from.customers.begin() + p);
            from.load -= dx;
            to.customers.insert(to.customers.begin() + q, x);
            to.load += dx;
            drop_empty_routes(s.routes);
            s.objective += delta;
            return delta;
          }
        }
      }
    }
  }

  // Swap: exchange customers between two routes.
  for (int r1 = 0; r1 + 1 < m; ++r1) {
    auto& A = s.routes[r1];
    for (int r2 = r1 + 1; r2 < m; ++r2) {
      auto& B = s.routes[r2];
      for (size_t p1 = 0; p1 < A.customers.size(); ++p1) {
        const int x = A.customers[p1];
        const std::int64_t dx = inst.demand(x);
        const int pa = p1 > 0 ? A.customers[p1 - 1] : 0;
        const int na = p1 + 1 < A.customers.size() ? A.customers[p1 + 1] : 0;
        for (size_t p2 = 0; p2 < B.customers.size(); ++p2) {
          const int y = B.customers[p2];
          const std::int64_t dy = inst.demand(y);
          if (A.load - dx + dy > inst.capacity() ||
              B.load - dy + dx > inst.capacity())
            continue;
          const int pb = p2 > 0 ? B.customers[p2 - 1] : 0;
          const int nb = p2 + 1 < B.customers.size() ? B.customers[p2 + 1] : 0;
          const double delta = dist(pa, y) + dist(y, na) - dist(pa, x) -
                               dist(x, na) + dist(pb, x) + dist(x, nb) -
                               dist(pb, y) - dist(y, nb);
          if (delta < -kEps) {
            A.customers[p1] = y;
            B.customers[p2] = x;
            A.load += dy - dx;
            B.load += dx - dy;
            s.objective += delta;
            return delta;
          }
        }
      }
    }
  }
  return std::nullopt;
}

struct AnytimeContext {
  Clock::time_point start;
  std::optional<Clock::time_point> deadline;
  double best_objective = std::numeric_limits<double>::infinity();
  std::vector<Route> best_routes;
  const IncumbentCallback* callback = nullptr;

  bool expired() const { return deadline && Clock::now() >= *deadline; }

  void offer(const SearchState& s) {
    if (s.objective < best_objective - kEps) {
      best_objective = s.objective;
      best_routes = s.routes;
      if (callback && *callback) (*callback)(s.objective, elapsed_since(start));
    }
  }
};

void local_search(SearchState& s, const Instance& inst, AnytimeContext& ctx) {
  ctx.offer(s);
  while (!ctx.expired()) {
    auto delta = apply_first_improvement(s, inst);
    if (!delta) break;
    ctx.offer(s);
  }
}

// Feasibility-preserving shake: either an in-route double bridge or a few
// random capacity-checked relocations.
void perturb(SearchState& s, const Instance& inst, std::mt19937_64& rng) {
  auto pick = [&](size_t n) { return static_cast<size_t>(rng() % n); };

  const bool double_bridge = (rng() & 1u) == 0;
  if (double_bridge) {
    std::vector<size_t> candidates;
    for (size_t i = 0; i < s.routes.size(); ++i)
      if (s.routes[i].customers.size() >= 4) candidates.push_back(i);
    if (!candidates.empty()) {
      auto& r = s.routes[candidates[pick(candidates.size())]].customers;
      const size_t len = r.size();
      size_t cuts[3] = {1 + pick(len - 3), 0, 0};
      cuts[1] = cuts[0] + 1 + pick(len - cuts[0] - 2);
      cuts[2] = cuts[1] + 1 + pick(len - cuts[1] - 1);
      std::vector<int> next;
      next.reserve(len);
      next.insert(next.end(), r.begin() + cuts[1], r.begin() + cuts[2]);
      next.insert(next.end(), r.begin() + cuts[0], r.begin() + cuts[1]);
      next.insert(next.end(), r.begin(), r.begin() + cuts[0]);
      next.insert(next.end(), r.begin() + cuts[2], r.end());
      r = std::move(next);
      s.objective = recompute_objective(s.routes, inst);
      return;
    }
  }

  // Random relocations.
  const int kicks = 1 + static_cast<int>(rng() % 3);
  for (int t = 0; t < kicks; ++t) {
    if (s.routes.empty()) break;
    size_t r1 = pick(s.routes.size());
    if (s.routes[r1].customers.empty()) continue;
    size_t p = pick(s.routes[r1].customers.size());
    int x = s.routes[r1].customers[p];
    std::int64_t dx = inst.demand(x);
    size_t r2 = pick(s.routes.size());
    if (r2 == r1) continue;
    if (s.routes[r2].load + dx > inst.capacity()) continue;
    s.routes[r1].customers.erase(s.routes[r1].customers.begin() + p);
    s.routes[r1].load -= dx;
    size_t q = pick(s.routes[r2].customers.size() + 1);
    s.routes[r2].customers.insert(s.routes[r2].customers.begin() + q, x);
    s.routes[r2].load += dx;
  }
  drop_empty_routes(s.routes);
  s.objective = recompute_objective(s.routes, inst);
}

}  // namespace

// ---------------------------------------------------------------------------
// Public surface
// ---------------------------------------------------------------------------

std::string FeasibilityReport::describe() const {
  std::ostringstream out;
  out << (ok() ? "feasible" : "infeasible") << ": visit_violations="
      << visit_violations << " capacity_violations=" << capacity_violations
      << " vehicle_count_excess=" << vehicle_count_excess
      << " subtour_free=" << (subtour_free ? "yes" : "no");
  return out.str();
}

FeasibilityReport validate(const Solution& sol, std::span<const int> customers,
                           int k_limit, const Instance& inst) {
  FeasibilityReport rep;
  std::map<int, int> visits;
  for (const auto& r : sol.routes) {
    for (int c : r.customers) ++visits[c];
    if (route_load(r.customers, inst) > inst.capacity())
      ++rep.capacity_violations;
  }
  std::map<int, int> expected;
  for (int c : customers) ++expected[c];
  for (const auto& [c, count] : expected) {
    auto it = visits.find(c);
    rep.visit_violations += std::abs((it == visits.end() ? 0 : it->second) - count);
  }
  for (const auto& [c, count] : visits)
    if (!expected.count(c)) rep.visit_violations += count;  // foreign customer
  rep.vehicle_count_excess =
      std::max(0, static_cast<int>(sol.routes.size()) - k_limit);
  return rep;
}

double route_cost(const Route& route, const Instance& inst) {
  if (route.customers.empty()) return 0.0;
  double cost = inst.distance(0, route.customers.front());
  for (size_t i = 0; i + 1 < route.customers.size(); ++i)
    cost += inst.distance(route.customers[i], route.customers[i + 1]);
  cost += inst.distance(route.customers.back(), 0);
  return cost;
}

double solution_cost(const Solution& sol, const Instance& inst) {
  return recompute_objective(sol.routes, inst);
}

std::optional<Solution> solve_heuristic(const Subproblem& sub,
                                        const Budget& budget,
                                        std::uint64_t seed,
                                        const IncumbentCallback& on_incumbent) {
  const Instance& inst = *sub.master;
  if (sub.subset.empty()) throw std::invalid_argument("empty subproblem");
  if (sub.total_demand() >
      static_cast<std::int64_t>(sub.vehicles) * inst.capacity())
    return std::nullopt;  // pigeonhole: no packing can exist

  AnytimeContext ctx;
  ctx.start = Clock::now();
  if (budget.seconds)
    ctx.deadline = ctx.start + std::chrono::duration_cast<Clock::duration>(
                                   std::chrono::duration<double>(*budget.seconds));
  ctx.callback = &on_incumbent;

  SearchState state;
  state.routes = savings_construction(sub);
  if (static_cast<int>(state.routes.size()) > sub.vehicles) {
    auto packed = first_fit_construction(sub, combine_seed(seed, 0x9f1d));
    if (!packed) return std::nullopt;
    state.routes = std::move(*packed);
  }
  state.objective = recompute_objective(state.routes, inst);
  ctx.offer(state);

  const std::uint64_t max_rounds =
      budget.rounds ? *budget.rounds
                    : (budget.seconds ? std::numeric_limits<std::uint64_t>::max()
                                      : 0);
  std::mt19937_64 rng(mix64(combine_seed(seed, 0x5eed)));
  for (std::uint64_t round = 0; round < max_rounds && !ctx.expired(); ++round) {
    if (round > 0) {
      state.routes = ctx.best_routes;
      state.objective = ctx.best_objective;
      perturb(state, inst, rng);
    }
    local_search(state, inst, ctx);
  }

  Solution sol;
  sol.routes = std::move(ctx.best_routes);
  sol.objective = ctx.best_objective;
  sol.source = SolutionSource::kHeuristic;
  sol.feasible_local = validate(sol, sub.subset, sub.vehicles, inst).ok();
  return sol;
}

std::optional<Solution> solve_exact(const Subproblem& sub) {
  const Instance& inst = *sub.master;
  const auto& ids = sub.subset;
  const int n = static_cast<int>(ids.size());
  if (n < 1) throw std::invalid_argument("empty subproblem");
  if (n > 10)
    throw std::invalid_argument(
        "solve_exact is limited to 10 customers, got " + std::to_string(n));

  // Held-Karp shortest depot-anchored path for every customer subset.
  const int full = 1 << n;
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<std::vector<double>> dp(full, std::vector<double>(n, inf));
  std::vector<std::vector<int>> parent(full, std::vector<int>(n, -1));
  for (int j = 0; j < n; ++j) dp[1 << j][j] = inst.distance(0, ids[j]);
  for (int mask = 1; mask < full; ++mask)
    for (int j = 0; j < n; ++j) {
      if (!(mask & (1 << j)) || dp[mask][j] == inf) continue;
      for (int l = 0; l < n; ++l) {
        if (mask & (1 << l)) continue;
        int nm = mask | (1 << l);
        double cand = dp[mask][j] + inst.distance(ids[j], ids[l]);
        if (cand < dp[nm][l]) {
          dp[nm][l] = cand;
          parent[nm][l] = j;
        }
      }
    }
  std::vector<double> tour_cost(full, inf);
  std::vector<int> tour_end(full, -1);
  for (int mask = 1; mask < full; ++mask)
    for (int j = 0; j < n; ++j) {
      if (!(mask & (1 << j)) || dp[mask][j] == inf) continue;
      double cand = dp[mask][j] + inst.distance(ids[j], 0);
      if (cand < tour_cost[mask]) {
        tour_cost[mask] = cand;
        tour_end[mask] = j;
      }
    }

  // Enumerate partitions into at most `vehicles` capacity-feasible groups.
  struct Group {
    int mask = 0;
    std::int64_t load = 0;
  };
  std::vector<Group> groups;
  std::vector<int> best_masks;
  double best_cost = inf;
  const int max_groups = std::min(sub.vehicles, n);

  auto recurse = [&](auto&& self, int i) -> void {
    if (i == n) {
      double total = 0.0;
      for (const auto& g : groups) total += tour_cost[g.mask];
      if (total < best_cost) {
        best_cost = total;
        best_masks.clear();
        for (const auto& g : groups) best_masks.push_back(g.mask);
      }
      return;
    }
    const std::int64_t d = inst.demand(ids[i]);
    // Index access: the recursion may grow `groups` and move its storage.
    for (size_t gi = 0; gi < groups.size(); ++gi) {
      if (groups[gi].load + d > inst.capacity()) continue;
      groups[gi].mask |= 1 << i;
      groups[gi].load += d;
      self(self, i + 1);
      groups[gi].mask &= ~(1 << i);
      groups[gi].load -= d;
    }
    if (static_cast<int>(groups.size()) < max_groups && d <= inst.capacity()) {
      groups.push_back({1 << i, d});
      self(self, i + 1);
      groups.pop_back();
    }
  };
  recurse(recurse, 0);

  if (best_cost == inf) return std::nullopt;

  Solution sol;
  sol.source = SolutionSource::kExact;
  sol.objective = best_cost;
  for (int mask : best_masks) {
    std::vector<int> order;
    int m = mask, j = tour_end[mask];
    while (j >= 0) {
      order.push_back(ids[j]);
      int pj = parent[m][j];
      m &= ~(1 << j);
      j = pj;
    }
    std::reverse(order.begin(), order.end());
    Route route;
    route.load = route_load(order, inst);
    route.customers = std::move(order);
    sol.routes.push_back(std::move(route));
  }
  sol.feasible_local = validate(sol, sub.subset, sub.vehicles, inst).ok();
  return sol;
}

std::string emit_milp(const Subproblem& sub) {
  const Instance& inst = *sub.master;
  const int s = static_cast<int>(sub.subset.size());
  const int k = sub.vehicles;
  std::vector<int> verts;
  verts.reserve(s + 1);
  verts.push_back(0);
  verts.insert(verts.end(), sub.subset.begin(), sub.subset.end());
  const int v_count = s + 1;

  auto xn = [](int i, int j, int veh) {
    return "x_" + std::to_string(i) + "_" + std::to_string(j) + "_" +
           std::to_string(veh);
  };
  auto un = [](int i, int veh) {
    return "u_" + std::to_string(i) + "_" + std::to_string(veh);
  };
  auto num = [](double v) {
    std::ostringstream o;
    o.precision(12);
    o << v;
    return o.str();
  };

  std::ostringstream lp;
  lp << "\\ CVRP subproblem of " << inst.name() << ": |S|=" << s << " K=" << k
     << " Q=" << inst.capacity() << "\n";
  lp << "Minimize\n obj:";
  int terms = 0;
  for (int veh = 1; veh <= k; ++veh)
    for (int i : verts)
      for (int j : verts) {
        if (i == j) continue;
        double c = inst.distance(i, j);
        if (c == 0.0) continue;
        lp << " + " << num(c) << " " << xn(i, j, veh);
        if (++terms % 8 == 0) lp << "\n   ";
      }
  lp << "\nSubject To\n";

  for (int veh = 1; veh <= k; ++veh) {
    lp << " depot_out_k" << veh << ":";
    for (int j : sub.subset) lp << " + " << xn(0, j, veh);
    lp << " = 1\n";
  }
  for (int veh = 1; veh <= k; ++veh) {
    lp << " depot_in_k" << veh << ":";
    for (int i : sub.subset) lp << " + " << xn(i, 0, veh);
    lp << " = 1\n";
  }
  for (int i : sub.subset) {
    lp << " depart_" << i << ":";
    for (int veh = 1; veh <= k; ++veh)
      for (int j : verts)
        if (j != i) lp << " + " << xn(i, j, veh);
    lp << " = 1\n";
  }
  for (int i : sub.subset) {
    lp << " visit_" << i << ":";
    for (int veh = 1; veh <= k; ++veh)
      for (int j : verts)
        if (j != i) lp << " + " << xn(j, i, veh);
    lp << " = 1\n";
  }
  for (int i : sub.subset)
    for (int veh = 1; veh <= k; ++veh) {
      lp << " flow_" << i << "_k" << veh << ":";
      for (int j : verts)
        if (j != i) lp << " + " << xn(j, i, veh);
      for (int j : verts)
        if (j != i) lp << " - " << xn(i, j, veh);
      lp << " = 0\n";
    }
  for (int veh = 1; veh <= k; ++veh) {
    lp << " cap_k" << veh << ":";
    for (int i : sub.subset)
      for (int j : verts)
        if (j != i) lp << " + " << inst.demand(i) << " " << xn(i, j, veh);
    lp << " <= " << inst.capacity() << "\n";
  }
  // Order variables: u_i - u_j + (|V|-1) x_i_j_k <= |V| - 2.
  for (int i : sub.subset)
    for (int j : sub.subset) {
      if (i == j) continue;
      for (int veh = 1; veh <= k; ++veh)
        lp << " mtz_" << i << "_" << j << "_k" << veh << ": " << un(i, veh)
           << " - " << un(j, veh) << " + " << (v_count - 1) << " "
           << xn(i, j, veh) << " <= " << (v_count - 2) << "\n";
    }

  lp << "Bounds\n";
  for (int i : sub.subset)
    for (int veh = 1; veh <= k; ++veh)
      lp << " 0 <= " << un(i, veh) << " <= " << s << "\n";

  lp << "Binaries\n";
  terms = 0;
  for (int veh = 1; veh <= k; ++veh)
    for (int i : verts)
      for (int j : verts) {
        if (i == j) continue;
        lp << " " << xn(i, j, veh);
        if (++terms % 10 == 0) lp << "\n";
      }
  lp << "\nEnd\n";
  return lp.str();
}

std::string to_solution_text(const Solution& sol) {
  std::ostringstream out;
  for (size_t r = 0; r < sol.routes.size(); ++r) {
    out << "Route #" << (r + 1) << ":";
    for (int c : sol.routes[r].customers) out << " " << c;
    out << "\n";
  }
  double rounded = std::floor(sol.objective + 0.5);
  out << "Cost ";
  if (std::abs(sol.objective - rounded) < 1e-9)
    out << static_cast<long long>(rounded);
  else
    out << sol.objective;
  out << "\n";
  return out.str();
}

Solution parse_solution_text(std::string_view text, const Instance& inst,
                             double* declared_cost) {
  Solution sol;
  sol.source = SolutionSource::kHeuristic;
  if (declared_cost) *declared_cost = std::numeric_limits<double>::quiet_NaN();
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    if (head == "Route") {
      std::string tag;
      ls >> tag;  // "#k:"
      if (tag.empty() || tag[0] != '#')
        throw ParseError("expected 'Route #<k>:'", line_no);
      Route route;
      int c;
      while (ls >> c) {
        if (c <= 0 || c >= inst.num_vertices())
          throw ParseError("customer id " + std::to_string(c) + " out of range",
                           line_no);
        route.customers.push_back(c);
      }
      if (!ls.eof())
        throw ParseError("non-numeric token in route", line_no);
      if (route.customers.empty()) throw ParseError("empty route", line_no);
      route.load = route_load(route.customers, inst);
      sol.routes.push_back(std::move(route));
    } else if (head == "Cost" || head == "cost") {
      double c;
      if (!(ls >> c)) throw ParseError("malformed Cost line", line_no);
      if (declared_cost) *declared_cost = c;
    } else {
      throw ParseError("unrecognized line '" + line + "'", line_no);
    }
  }
  sol.objective = recompute_objective(sol.routes, inst);
  return sol;
}

}  // namespace vrpsplit
