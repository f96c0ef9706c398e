#include "nsg/iso.hpp"

#include <algorithm>
#include <map>

#include "nsg/solvability.hpp"

namespace nsg {

namespace {

struct Coloring {
  std::vector<std::size_t> a, b;
  std::size_t colors = 0;
};

class IsoSearch {
public:
  IsoSearch(const Graph& a, const Graph& b, std::uint64_t budget) : ga_(a), gb_(b), budget_(budget) {}

  IsoOutcome run(std::vector<Vertex>& mapping) {
    const std::size_t n = ga_.vertex_count();
    Coloring c;
    c.a.assign(n, 0);
    c.b.assign(n, 0);
    c.colors = n ? 1 : 0;
    if (n == 0) return IsoOutcome::isomorphic;
    auto r = search(std::move(c), mapping);
    return r;
  }

  std::uint64_t nodes() const { return nodes_; }

private:
  // Splits classes by neighbour colour counts until stable. Colour ids are
  // assigned from the sorted signatures, shared between both graphs.
  bool refine(Coloring& c) const {
    const std::size_t n = ga_.vertex_count();
    while (true) {
      std::vector<Bitset> class_a(c.colors, Bitset(n)), class_b(c.colors, Bitset(n));
      for (std::size_t v = 0; v < n; ++v) {
        class_a[c.a[v]].set(v);
        class_b[c.b[v]].set(v);
      }
      auto signature = [&](const Graph& g, const std::vector<Bitset>& classes,
                           const std::vector<std::size_t>& col, std::size_t v) {
        std::vector<std::size_t> sig;
        sig.reserve(c.colors + 1);
        sig.push_back(col[v]);
        for (std::size_t k = 0; k < c.colors; ++k)
          sig.push_back(g.neighbors(static_cast<Vertex>(v)).and_count(classes[k]));
        return sig;
      };
      std::vector<std::vector<std::size_t>> sa(n), sb(n);
      std::map<std::vector<std::size_t>, std::pair<std::size_t, std::size_t>> tally;
      for (std::size_t v = 0; v < n; ++v) {
        sa[v] = signature(ga_, class_a, c.a, v);
        sb[v] = signature(gb_, class_b, c.b, v);
        ++tally[sa[v]].first;
        ++tally[sb[v]].second;
      }
      std::map<std::vector<std::size_t>, std::size_t> ids;
      for (const auto& [sig, counts] : tally) {
        if (counts.first != counts.second) return false;
        ids.emplace(sig, ids.size());
      }
      const std::size_t before = c.colors;
      for (std::size_t v = 0; v < n; ++v) {
        c.a[v] = ids.at(sa[v]);
        c.b[v] = ids.at(sb[v]);
      }
      c.colors = ids.size();
      if (c.colors == before) return true;
    }
  }

  IsoOutcome search(Coloring c, std::vector<Vertex>& mapping) {
    if (++nodes_ > budget_) return IsoOutcome::budget_exceeded;
    if (!refine(c)) return IsoOutcome::not_isomorphic;
    const std::size_t n = ga_.vertex_count();

    std::vector<std::size_t> size(c.colors, 0);
    for (auto col : c.a) ++size[col];
    std::size_t target = c.colors;
    for (std::size_t k = 0; k < c.colors; ++k)
      if (size[k] > 1 && (target == c.colors || size[k] < size[target])) target = k;

    if (target == c.colors) {
      std::vector<Vertex> by_color(n);
      for (std::size_t v = 0; v < n; ++v) by_color[c.b[v]] = static_cast<Vertex>(v);
      mapping.assign(n, 0);
      for (std::size_t v = 0; v < n; ++v) mapping[v] = by_color[c.a[v]];
      return is_isomorphism(ga_, gb_, mapping) ? IsoOutcome::isomorphic : IsoOutcome::not_isomorphic;
    }

    // Among classes of minimum size, take the one holding the lowest vertex of a.
    std::size_t pick = n;
    for (std::size_t v = 0; v < n && pick == n; ++v)
      if (size[c.a[v]] == size[target]) pick = v;
    const std::size_t color = c.a[pick];
    for (std::size_t w = 0; w < n; ++w) {
      if (c.b[w] != color) continue;
      Coloring next = c;
      next.a[pick] = next.colors;
      next.b[w] = next.colors;
      ++next.colors;
      auto r = search(std::move(next), mapping);
      if (r != IsoOutcome::not_isomorphic) return r;
    }
    return IsoOutcome::not_isomorphic;
  }

  const Graph& ga_;
  const Graph& gb_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
};

} // namespace

bool is_isomorphism(const Graph& a, const Graph& b, const std::vector<Vertex>& mapping) {
  const std::size_t n = a.vertex_count();
  if (b.vertex_count() != n || mapping.size() != n) return false;
  Bitset hit(n);
  for (Vertex v : mapping) {
    if (v >= n || hit.test(v)) return false;
    hit.set(v);
  }
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (a.adjacent(u, v) != b.adjacent(mapping[u], mapping[v])) return false;
  return true;
}

IsoResult is_isomorphic(const Graph& a, const Graph& b, std::uint64_t node_budget) {
  IsoResult result;
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return result;
  auto da = a.degrees(), db = b.degrees();
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return result;

  IsoSearch search(a, b, node_budget);
  std::vector<Vertex> mapping;
  result.outcome = search.run(mapping);
  result.nodes = search.nodes();
  if (result.outcome == IsoOutcome::isomorphic) {
    if (!is_isomorphism(a, b, mapping)) throw InvariantViolation("isomorphism search returned a bad mapping");
    result.mapping = std::move(mapping);
  }
  return result;
}

IsoResult ns_isomorphic(const NSGraph& a, const NSGraph& b, const NSIsoOptions& options) {
  IsoResult fast;
  bool have_fast = false;
  if (a.sol_size == b.sol_size && a.vertex_count() == b.vertex_count() && a.blocks.size() == b.blocks.size() &&
      has_twin_blocks(a) && has_twin_blocks(b)) {
    const NSGraph qa = quotient(a), qb = quotient(b);
    IsoResult q = is_isomorphic(qa.graph, qb.graph, options.node_budget);
    if (q.isomorphic()) {
      std::vector<Vertex> mapping(a.vertex_count());
      for (std::size_t blk = 0; blk < a.blocks.size(); ++blk) {
        const auto& from = a.blocks[blk];
        const auto& to = b.blocks[(*q.mapping)[blk]];
        for (std::size_t i = 0; i < from.size(); ++i) mapping[from[i]] = to[i];
      }
      if (!is_isomorphism(a.graph, b.graph, mapping))
        throw InvariantViolation("lifted quotient isomorphism does not preserve adjacency");
      fast.outcome = IsoOutcome::isomorphic;
      fast.mapping = std::move(mapping);
      fast.nodes = q.nodes;
      have_fast = true;
    }
  }
  if (have_fast && !options.confirm) return fast;
  IsoResult full = is_isomorphic(a.graph, b.graph, options.node_budget);
  if (have_fast && full.outcome == IsoOutcome::not_isomorphic)
    throw InvariantViolation("blow-up fast path and general isomorphism checker disagree");
  return full;
}

} // namespace nsg
