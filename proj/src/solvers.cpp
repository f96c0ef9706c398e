#include "nsg/solvers.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "nsg/solvability.hpp"

namespace nsg {

namespace {

std::vector<std::vector<Vertex>> search_orbits(const Graph& g, const SolverOptions& options) {
  if (options.symmetry && options.symmetry->vertex_count() == g.vertex_count() &&
      options.symmetry->maps().size() > 1)
    return options.symmetry->orbits();
  return {};
}

// ---------------------------------------------------------------- clique

class CliqueSearch {
public:
  CliqueSearch(const Graph& g, std::uint64_t budget) : n_(g.vertex_count()), budget_(budget) {
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), Vertex{0});
    std::stable_sort(order_.begin(), order_.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    pos_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) pos_[order_[i]] = static_cast<Vertex>(i);
    adj_.assign(n_, Bitset(n_));
    for (std::size_t i = 0; i < n_; ++i)
      g.neighbors(order_[i]).for_each([&](std::size_t v) { adj_[i].set(pos_[v]); });
  }

  std::size_t colour_bound(const Bitset& p) const {
    Bitset u = p;
    std::size_t k = 0;
    while (u.any()) {
      ++k;
      Bitset q = u;
      for (auto v = q.find_first(); v != Bitset::npos; v = q.find_first()) {
        q.reset(v);
        u.reset(v);
        q.subtract(adj_[v]);
      }
    }
    return k;
  }

  void seed_greedy() {
    std::vector<Vertex> r;
    Bitset cand(n_);
    cand.set_all();
    for (auto v = cand.find_first(); v != Bitset::npos; v = cand.find_first()) {
      r.push_back(static_cast<Vertex>(v));
      cand &= adj_[v];
    }
    record(r);
  }

  void run_all() {
    Bitset p(n_);
    p.set_all();
    std::vector<Vertex> r;
    expand(r, p);
  }

  // Cliques whose lowest-orbit member lies in each orbit, in orbit order.
  void run_orbits(const std::vector<std::vector<Vertex>>& orbits) {
    Bitset allowed(n_);
    allowed.set_all();
    for (const auto& orbit : orbits) {
      const Vertex rep = pos_[orbit.front()];
      std::vector<Vertex> r{rep};
      Bitset p = adj_[rep] & allowed;
      if (p.none()) record(r);
      else if (1 + colour_bound(p) > best_.size()) expand(r, p);
      if (aborted_) return;
      for (Vertex v : orbit) allowed.reset(pos_[v]);
    }
  }

  std::vector<Vertex> best() const {
    std::vector<Vertex> out;
    for (Vertex v : best_) out.push_back(order_[v]);
    std::sort(out.begin(), out.end());
    return out;
  }
  bool aborted() const { return aborted_; }
  std::uint64_t nodes() const { return nodes_; }

private:
  void record(const std::vector<Vertex>& r) {
    if (r.size() > best_.size()) best_ = r;
  }

  void expand(std::vector<Vertex>& r, Bitset p) {
    if (++nodes_ > budget_) {
      aborted_ = true;
      return;
    }
    std::vector<std::pair<Vertex, std::size_t>> ordered;
    Bitset u = p;
    std::size_t k = 0;
    while (u.any()) {
      ++k;
      Bitset q = u;
      for (auto v = q.find_first(); v != Bitset::npos; v = q.find_first()) {
        q.reset(v);
        u.reset(v);
        q.subtract(adj_[v]);
        ordered.emplace_back(static_cast<Vertex>(v), k);
      }
    }
    for (std::size_t i = ordered.size(); i-- > 0;) {
      auto [v, colour] = ordered[i];
      if (r.size() + colour <= best_.size()) return;
      r.push_back(v);
      Bitset np = p & adj_[v];
      if (np.none()) record(r);
      else expand(r, np);
      r.pop_back();
      if (aborted_) return;
      p.reset(v);
    }
  }

  std::size_t n_;
  std::uint64_t budget_;
  std::vector<Vertex> order_, pos_;
  std::vector<Bitset> adj_;
  std::vector<Vertex> best_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
};

// ---------------------------------------------------------------- domination

class DominationSearch {
public:
  DominationSearch(const Graph& g, std::size_t k, std::uint64_t budget)
      : n_(g.vertex_count()), k_(k), budget_(budget), allowed_(n_) {
    closed_.reserve(n_);
    for (Vertex v = 0; v < n_; ++v) {
      Bitset c = g.neighbors(v);
      c.set(v);
      closed_.push_back(std::move(c));
    }
    allowed_.set_all();
  }

  Decision run(const std::vector<std::vector<Vertex>>& orbits) {
    std::vector<Vertex> chosen;
    Bitset covered(n_);
    if (orbits.empty()) return finish(search(chosen, covered));
    for (const auto& orbit : orbits) {
      const Vertex rep = orbit.front();
      chosen.assign(1, rep);
      if (k_ >= 1 && search(chosen, closed_[rep])) return Decision::yes;
      if (aborted_) return Decision::unknown;
      for (Vertex v : orbit) allowed_.reset(v);
    }
    return Decision::no;
  }

  const std::vector<Vertex>& witness() const { return witness_; }
  std::uint64_t nodes() const { return nodes_; }

private:
  Decision finish(bool found) const {
    if (found) return Decision::yes;
    return aborted_ ? Decision::unknown : Decision::no;
  }

  bool search(std::vector<Vertex>& chosen, const Bitset& covered) {
    if (++nodes_ > budget_) {
      aborted_ = true;
      return false;
    }
    Bitset uncovered = ~covered;
    const std::size_t left = uncovered.count();
    if (left == 0) {
      witness_ = chosen;
      std::sort(witness_.begin(), witness_.end());
      return true;
    }
    if (chosen.size() >= k_) return false;
    const std::size_t remaining = k_ - chosen.size();

    std::vector<std::size_t> gain(n_, 0);
    std::vector<std::size_t> gains;
    allowed_.for_each([&](std::size_t v) {
      gain[v] = closed_[v].and_count(uncovered);
      if (gain[v]) gains.push_back(gain[v]);
    });
    if (gains.size() > remaining) {
      std::nth_element(gains.begin(), gains.begin() + static_cast<std::ptrdiff_t>(remaining), gains.end(),
                       std::greater<>());
      gains.resize(remaining);
    }
    if (std::accumulate(gains.begin(), gains.end(), std::size_t{0}) < left) return false;

    std::size_t pick = n_, fewest = n_ + 1;
    uncovered.for_each([&](std::size_t u) {
      std::size_t c = closed_[u].and_count(allowed_);
      if (c < fewest) {
        fewest = c;
        pick = u;
      }
    });
    if (fewest == 0) return false;

    std::vector<Vertex> cand;
    (closed_[pick] & allowed_).for_each([&](std::size_t v) { cand.push_back(static_cast<Vertex>(v)); });
    std::stable_sort(cand.begin(), cand.end(), [&](Vertex a, Vertex b) { return gain[a] > gain[b]; });
    std::vector<Vertex> banned;
    bool found = false;
    for (Vertex w : cand) {
      chosen.push_back(w);
      found = search(chosen, covered | closed_[w]);
      chosen.pop_back();
      if (found || aborted_) break;
      allowed_.reset(w); // every set containing w was just explored
      banned.push_back(w);
    }
    for (Vertex w : banned) allowed_.set(w);
    return found;
  }

  std::size_t n_;
  std::size_t k_;
  std::uint64_t budget_;
  std::vector<Bitset> closed_;
  Bitset allowed_;
  std::vector<Vertex> witness_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
};

std::vector<Vertex> greedy_dominating_set(const Graph& g) {
  const std::size_t n = g.vertex_count();
  Bitset covered(n);
  std::vector<Vertex> set;
  while (covered.count() < n) {
    Bitset uncovered = ~covered;
    Vertex best = 0;
    std::size_t best_gain = 0;
    for (Vertex v = 0; v < n; ++v) {
      Bitset c = g.neighbors(v);
      c.set(v);
      std::size_t gain = c.and_count(uncovered);
      if (gain > best_gain) {
        best_gain = gain;
        best = v;
      }
    }
    set.push_back(best);
    covered.set(best);
    covered |= g.neighbors(best);
  }
  std::sort(set.begin(), set.end());
  return set;
}

// ---------------------------------------------------------------- flow

// Unit vertex-capacity s-t flow on the split graph (v_in -> v_out). Flow is
// stored as path links: for a vertex v carrying flow, in_from[v] sends into
// v and out_to[v] receives from v.
class VertexFlow {
public:
  explicit VertexFlow(const Graph& g) : g_(g), n_(g.vertex_count()) {}

  std::size_t run(Vertex s, Vertex t, std::size_t limit) {
    s_ = s;
    t_ = t;
    through_.assign(n_, 0);
    in_from_.assign(n_, kNone);
    out_to_.assign(n_, kNone);
    std::size_t flow = 0;
    (g_.neighbors(s) & g_.neighbors(t)).for_each([&](std::size_t c) {
      if (flow >= limit) return;
      through_[c] = 1;
      in_from_[c] = s;
      out_to_[c] = t;
      ++flow;
    });
    while (flow < limit && augment()) ++flow;
    return flow;
  }

  // Vertices with reachable in-node and unreachable out-node after a
  // saturating run (valid only when run() was not cut short by its limit).
  std::vector<Vertex> min_cut() {
    augment();
    std::vector<Vertex> cut;
    for (Vertex v = 0; v < n_; ++v)
      if (v != s_ && v != t_ && vis_in_.test(v) && !vis_out_.test(v)) cut.push_back(v);
    return cut;
  }

private:
  static constexpr Vertex kNone = static_cast<Vertex>(-1);
  enum Arc : std::uint8_t { edge_fwd, edge_back, inner_fwd, inner_back };
  struct Parent {
    Vertex from = 0;
    bool from_out = false;
    Arc arc = edge_fwd;
  };

  bool augment() {
    vis_in_ = Bitset(n_);
    vis_out_ = Bitset(n_);
    par_in_.assign(n_, {});
    par_out_.assign(n_, {});
    // queue entries: vertex * 2 + (1 if out-node)
    std::vector<std::size_t> queue{static_cast<std::size_t>(s_) * 2 + 1};
    vis_out_.set(s_);
    vis_in_.set(s_);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex x = static_cast<Vertex>(queue[head] / 2);
      if (queue[head] & 1U) {
        Bitset next = g_.neighbors(x);
        next.subtract(vis_in_);
        if (x != s_ && out_to_[x] != kNone && out_to_[x] < n_) next.reset(out_to_[x]);
        bool reached = false;
        next.for_each([&](std::size_t y) {
          if (reached) return;
          vis_in_.set(y);
          par_in_[y] = {x, true, edge_fwd};
          if (y == t_) reached = true;
          else queue.push_back(y * 2);
        });
        if (reached) {
          apply();
          return true;
        }
        if (x != s_ && through_[x] && !vis_in_.test(x)) {
          vis_in_.set(x);
          par_in_[x] = {x, true, inner_back};
          queue.push_back(static_cast<std::size_t>(x) * 2);
        }
      } else {
        if (!through_[x]) {
          if (!vis_out_.test(x)) {
            vis_out_.set(x);
            par_out_[x] = {x, false, inner_fwd};
            queue.push_back(static_cast<std::size_t>(x) * 2 + 1);
          }
        } else {
          const Vertex u = in_from_[x];
          if (u != s_ && !vis_out_.test(u)) {
            vis_out_.set(u);
            par_out_[u] = {x, false, edge_back};
            queue.push_back(static_cast<std::size_t>(u) * 2 + 1);
          }
        }
      }
    }
    return false;
  }

  void apply() {
    struct Step {
      Arc arc;
      Vertex a, b;
    };
    std::vector<Step> steps;
    Vertex v = t_;
    bool at_out = false;
    while (!(v == s_ && at_out)) {
      const Parent& p = at_out ? par_out_[v] : par_in_[v];
      steps.push_back({p.arc, p.from, v});
      v = p.from;
      at_out = p.from_out;
    }
    for (const auto& st : steps)
      if (st.arc == edge_back) { // cancels flow on st.b_out -> st.a_in
        out_to_[st.b] = kNone;
        in_from_[st.a] = kNone;
      }
    for (const auto& st : steps) {
      switch (st.arc) {
      case edge_fwd:
        if (st.a != s_) out_to_[st.a] = st.b;
        if (st.b != t_) in_from_[st.b] = st.a;
        break;
      case inner_fwd: through_[st.b] = 1; break;
      case inner_back: through_[st.b] = 0; break;
      case edge_back: break;
      }
    }
  }

  const Graph& g_;
  std::size_t n_;
  Vertex s_ = 0, t_ = 0;
  std::vector<std::uint8_t> through_;
  std::vector<Vertex> in_from_, out_to_;
  Bitset vis_in_, vis_out_;
  std::vector<Parent> par_in_, par_out_;
};

// ---------------------------------------------------------------- hamiltonian

class RotationExtension {
public:
  explicit RotationExtension(const Graph& g) : g_(g), n_(g.vertex_count()) {}

  bool run(std::uint64_t max_steps, std::vector<Vertex>& cycle) {
    std::mt19937_64 rng(0x5eedULL);
    pos_.assign(n_, kNone);
    path_.assign(1, 0);
    pos_[0] = 0;
    Bitset on_path(n_);
    on_path.set(0);
    for (std::uint64_t step = 0; step < max_steps; ++step) {
      const Vertex end = path_.back();
      Bitset ext = g_.neighbors(end);
      ext.subtract(on_path);
      if (ext.any()) {
        // fewest unvisited neighbours first
        Vertex pick = kNone;
        std::size_t fewest = n_ + 1;
        ext.for_each([&](std::size_t w) {
          std::size_t c = g_.neighbors(static_cast<Vertex>(w)).count() -
                          g_.neighbors(static_cast<Vertex>(w)).and_count(on_path);
          if (c < fewest) {
            fewest = c;
            pick = static_cast<Vertex>(w);
          }
        });
        pos_[pick] = static_cast<Vertex>(path_.size());
        path_.push_back(pick);
        on_path.set(pick);
        continue;
      }
      if (path_.size() == n_ && close(cycle)) return true;
      // rotate at a random path neighbour of the endpoint (or flip the path)
      std::vector<Vertex> pivots;
      g_.neighbors(end).for_each([&](std::size_t w) {
        if (pos_[w] + 2 < path_.size()) pivots.push_back(static_cast<Vertex>(w));
      });
      if (pivots.empty() || rng() % 8 == 0) {
        std::reverse(path_.begin(), path_.end());
      } else {
        Vertex w = pivots[rng() % pivots.size()];
        std::reverse(path_.begin() + pos_[w] + 1, path_.end());
      }
      for (std::size_t i = 0; i < path_.size(); ++i) pos_[path_[i]] = static_cast<Vertex>(i);
    }
    return false;
  }

private:
  static constexpr Vertex kNone = static_cast<Vertex>(-1);

  // Closes a hamiltonian path v1..vn: directly, or through a crossing pair
  // v1 ~ v(i+1), vi ~ vn.
  bool close(std::vector<Vertex>& cycle) {
    const Vertex first = path_.front(), last = path_.back();
    if (g_.adjacent(first, last)) {
      cycle = path_;
      return true;
    }
    for (std::size_t i = 1; i + 1 < n_; ++i) {
      if (g_.adjacent(first, path_[i + 1]) && g_.adjacent(path_[i], last)) {
        cycle.assign(path_.begin(), path_.begin() + static_cast<std::ptrdiff_t>(i) + 1);
        cycle.insert(cycle.end(), path_.rbegin(), path_.rend() - static_cast<std::ptrdiff_t>(i) - 1);
        return true;
      }
    }
    return false;
  }

  const Graph& g_;
  std::size_t n_;
  std::vector<Vertex> path_;
  std::vector<Vertex> pos_;
};

class HamiltonSearch {
public:
  HamiltonSearch(const Graph& g, std::uint64_t budget) : g_(g), n_(g.vertex_count()), budget_(budget) {}

  HamiltonStatus run(std::vector<Vertex>& cycle) {
    Bitset visited(n_);
    visited.set(0);
    path_.assign(1, 0);
    if (dfs(visited)) {
      cycle = path_;
      return HamiltonStatus::found;
    }
    return aborted_ ? HamiltonStatus::unknown : HamiltonStatus::none;
  }
  std::uint64_t nodes() const { return nodes_; }

private:
  // The rest of the cycle runs from the current end through every unvisited
  // vertex back to the start, so that region must stay connected and every
  // unvisited vertex needs two usable neighbours.
  bool viable(const Bitset& visited) const {
    Bitset region = ~visited;
    if (region.none()) return true;
    region.set(path_.back());
    region.set(0);
    bool ok = true;
    (~visited).for_each([&](std::size_t u) {
      if (ok && g_.neighbors(static_cast<Vertex>(u)).and_count(region) < 2) ok = false;
    });
    if (!ok) return false;
    Bitset removed = ~region;
    return is_connected_without(g_, removed);
  }

  bool dfs(Bitset& visited) {
    if (++nodes_ > budget_) {
      aborted_ = true;
      return false;
    }
    const Vertex end = path_.back();
    if (path_.size() == n_) return g_.adjacent(end, 0);
    if (!viable(visited)) return false;
    Bitset next = g_.neighbors(end);
    next.subtract(visited);
    std::vector<std::pair<std::size_t, Vertex>> cand;
    next.for_each([&](std::size_t w) {
      Bitset free = g_.neighbors(static_cast<Vertex>(w));
      free.subtract(visited);
      cand.emplace_back(free.count(), static_cast<Vertex>(w));
    });
    std::sort(cand.begin(), cand.end());
    for (auto [deg, w] : cand) {
      visited.set(w);
      path_.push_back(w);
      if (dfs(visited)) return true;
      path_.pop_back();
      visited.reset(w);
      if (aborted_) return false;
    }
    return false;
  }

  const Graph& g_;
  std::size_t n_;
  std::uint64_t budget_;
  std::vector<Vertex> path_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
};

} // namespace

SetResult max_clique(const Graph& g, const SolverOptions& options) {
  SetResult result;
  if (g.vertex_count() == 0) return result;
  CliqueSearch search(g, options.node_budget);
  search.seed_greedy();
  auto orbits = search_orbits(g, options);
  if (orbits.empty()) search.run_all();
  else search.run_orbits(orbits);
  result.witness = search.best();
  result.value = result.witness.size();
  result.nodes = search.nodes();
  result.exact = !search.aborted();
  if (!result.exact) {
    Bitset all(g.vertex_count());
    all.set_all();
    result.bound = search.colour_bound(all);
  } else {
    result.bound = result.value;
  }
  if (!is_clique(g, result.witness)) throw InvariantViolation("clique solver returned a non-clique");
  return result;
}

SetResult max_independent_set(const Graph& g, const SolverOptions& options) {
  SetResult r = max_clique(g.complement(), options);
  if (!is_independent(g, r.witness)) throw InvariantViolation("independent set solver returned a dependent set");
  return r;
}

DominationProbe dominating_set_within(const Graph& g, std::size_t k, const SolverOptions& options) {
  DominationProbe probe;
  if (g.vertex_count() == 0) {
    probe.answer = Decision::yes;
    return probe;
  }
  DominationSearch search(g, k, options.node_budget);
  probe.answer = search.run(search_orbits(g, options));
  probe.nodes = search.nodes();
  if (probe.answer == Decision::yes) {
    probe.witness = search.witness();
    if (!is_dominating(g, probe.witness) || probe.witness.size() > k)
      throw InvariantViolation("domination solver returned a non-dominating set");
  }
  return probe;
}

SetResult min_dominating_set(const Graph& g, const SolverOptions& options) {
  SetResult result;
  if (g.vertex_count() == 0) return result;
  std::uint64_t used = 0;
  for (std::size_t k = 1; k <= g.vertex_count(); ++k) {
    SolverOptions probe_options = options;
    probe_options.node_budget = options.node_budget > used ? options.node_budget - used : 0;
    auto probe = dominating_set_within(g, k, probe_options);
    used += probe.nodes;
    if (probe.answer == Decision::yes) {
      result.value = k;
      result.witness = probe.witness;
      result.bound = k;
      result.nodes = used;
      return result;
    }
    if (probe.answer == Decision::unknown) {
      result.exact = false;
      result.bound = k; // sizes below k are ruled out
      result.witness = greedy_dominating_set(g);
      result.value = result.witness.size();
      result.nodes = used;
      return result;
    }
  }
  throw InvariantViolation("no dominating set found up to n vertices");
}

std::size_t local_connectivity(const Graph& g, Vertex s, Vertex t) {
  if (s == t || g.adjacent(s, t)) throw std::invalid_argument("local_connectivity needs distinct non-adjacent vertices");
  VertexFlow flow(g);
  return flow.run(s, t, g.vertex_count());
}

ConnectivityResult vertex_connectivity(const Graph& g, const SolverOptions& options) {
  ConnectivityResult result;
  const std::size_t n = g.vertex_count();
  if (n <= 1) return result;
  if (!is_connected(g)) return result; // value 0, empty cut
  if (g.edge_count() == n * (n - 1) / 2) {
    result.value = n - 1;
    return result;
  }

  std::vector<std::vector<Vertex>> orbits = search_orbits(g, options);
  const bool symmetric = !orbits.empty();
  if (!symmetric)
    for (Vertex v = 0; v < n; ++v) orbits.push_back({v});

  std::size_t best = n - 1;
  std::vector<Vertex> best_cut;
  // Every minimum cut misses one of any best + 1 vertices, and automorphisms
  // move that vertex to its orbit representative.
  std::size_t covered = 0;
  VertexFlow flow(g);
  for (const auto& orbit : orbits) {
    if (covered > best) break;
    covered += orbit.size();
    const Vertex s = orbit.front();
    Bitset targets = ~g.neighbors(s);
    targets.reset(s);
    std::vector<Vertex> reps;
    if (symmetric) {
      for (const auto& o : options.symmetry->stabilizer_orbits(s, targets)) reps.push_back(o.front());
    } else {
      targets.for_each([&](std::size_t t) { reps.push_back(static_cast<Vertex>(t)); });
    }
    for (Vertex t : reps) {
      ++result.flows;
      if (result.flows > options.node_budget) {
        result.exact = false;
        break;
      }
      std::size_t f = flow.run(s, t, best);
      if (f < best) {
        best = f;
        best_cut = flow.min_cut();
        if (best_cut.size() != best) throw InvariantViolation("minimum cut size differs from flow value");
      }
    }
    if (!result.exact) break;
  }
  if (best_cut.empty() && best == n - 1) {
    // only degree-bound; find an explicit cut: neighbours of a min-degree vertex
    Vertex v = 0;
    for (Vertex u = 1; u < n; ++u)
      if (g.degree(u) < g.degree(v)) v = u;
    if (g.degree(v) <= best) {
      best = g.degree(v);
      best_cut.clear();
      g.neighbors(v).for_each([&](std::size_t u) { best_cut.push_back(static_cast<Vertex>(u)); });
    }
  }
  result.value = best;
  result.cut = best_cut;
  std::sort(result.cut.begin(), result.cut.end());
  Bitset removed(n);
  for (Vertex v : result.cut) removed.set(v);
  if (!result.cut.empty() && is_connected_without(g, removed))
    throw InvariantViolation("vertex cut does not disconnect the graph");
  return result;
}

HamiltonResult hamiltonian_cycle(const Graph& g, const SolverOptions& options) {
  HamiltonResult result;
  const std::size_t n = g.vertex_count();
  if (n < 3 || !is_connected(g)) {
    result.status = HamiltonStatus::none;
    result.method = "search";
    return result;
  }
  for (Vertex v = 0; v < n; ++v)
    if (g.degree(v) < 2) {
      result.status = HamiltonStatus::none;
      result.method = "search";
      return result;
    }

  RotationExtension rot(g);
  const std::uint64_t steps = std::min<std::uint64_t>(options.node_budget, 20 * n * n + 1000);
  if (rot.run(steps, result.cycle)) {
    result.status = HamiltonStatus::found;
    result.method = "rotation";
    result.nodes = steps;
  } else {
    HamiltonSearch search(g, options.node_budget);
    result.status = search.run(result.cycle);
    result.nodes = search.nodes();
    result.method = "search";
  }
  if (result.status == HamiltonStatus::found && !is_hamiltonian_cycle(g, result.cycle))
    throw InvariantViolation("hamiltonian search returned an invalid cycle");
  return result;
}

} // namespace nsg
