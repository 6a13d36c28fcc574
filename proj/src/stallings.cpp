#include "rfeq/stallings.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <stdexcept>

namespace rfeq {

namespace {

// Mutable labeled multigraph used while folding.  Each edge optionally
// carries a "memory" word over the naming alphabet; the product of
// memories along a closed path at the base is the path's image in
// F(names).  Folds that identify two parallel edges kill a basis loop of
// the fundamental group, and the pair's memory difference is exactly the
// relator that loop maps to.  Folds that identify distinct endpoints are
// homotopy equivalences; re-gauging the merged vertex keeps the memory
// products of based loops unchanged.
class Folder {
 public:
  Folder(std::size_t ambient_rank, bool track_memory)
      : rank_(ambient_rank), track_memory_(track_memory) {
    add_vertex();  // base = 0
  }

  std::size_t base() const { return 0; }

  std::size_t add_vertex() {
    vertex_alive_.push_back(true);
    queued_.push_back(false);
    incident_.emplace_back();
    return vertex_alive_.size() - 1;
  }

  void add_edge(std::size_t src, std::size_t dst, std::size_t label, Word mem) {
    edges_.push_back({src, dst, label, std::move(mem), true});
    std::size_t id = edges_.size() - 1;
    incident_[src].push_back(id);
    if (dst != src) incident_[dst].push_back(id);
  }

  // Closed path at the base spelling the reduced word w; `mem` rides on
  // the first edge so the petal's loop reads exactly `mem`.
  void add_petal(const Word& w, Word mem) {
    const auto& ls = w.letters();
    if (ls.empty()) return;
    std::size_t prev = base();
    for (std::size_t i = 0; i < ls.size(); ++i) {
      std::size_t next = (i + 1 == ls.size()) ? base() : add_vertex();
      Word m = (i == 0) ? std::move(mem) : Word();
      if (!letter_is_inverse(ls[i])) {
        add_edge(prev, next, letter_index(ls[i]), std::move(m));
      } else {
        // traversed backwards, so store the inverse memory
        add_edge(next, prev, letter_index(ls[i]), m.inverse());
      }
      prev = next;
    }
  }

  void fold_all() {
    for (std::size_t v = 0; v < vertex_alive_.size(); ++v) enqueue(v);
    while (!queue_.empty()) {
      std::size_t v = queue_.front();
      queue_.pop_front();
      queued_[v] = false;
      while (vertex_alive_[v] && fold_once_at(v)) {
      }
    }
  }

  // Iteratively drop non-base vertices of degree <= 1.  Loops count twice,
  // so a vertex carrying a loop is never trimmed.
  void trim() {
    std::vector<std::size_t> degree(vertex_alive_.size(), 0);
    for (const auto& e : edges_) {
      if (!e.alive) continue;
      ++degree[e.src];
      ++degree[e.dst];
    }
    std::deque<std::size_t> work;
    for (std::size_t v = 0; v < vertex_alive_.size(); ++v)
      if (vertex_alive_[v] && v != base() && degree[v] <= 1) work.push_back(v);
    while (!work.empty()) {
      std::size_t v = work.front();
      work.pop_front();
      if (!vertex_alive_[v] || degree[v] > 1) continue;
      vertex_alive_[v] = false;
      for (std::size_t id : incident_[v]) {
        auto& e = edges_[id];
        if (!e.alive) continue;
        e.alive = false;
        std::size_t other = (e.src == v) ? e.dst : e.src;
        --degree[e.src];
        --degree[e.dst];
        if (other != base() && vertex_alive_[other] && degree[other] <= 1)
          work.push_back(other);
      }
    }
  }

  const std::vector<Word>& relators() const { return relators_; }

  // Canonical compaction: BFS from the base, labels in order, outgoing
  // neighbor before incoming.
  StallingsGraph compact() const {
    const std::size_t npos = StallingsGraph::npos;
    std::size_t total = vertex_alive_.size();
    std::vector<std::size_t> out(total * rank_, npos), in(total * rank_, npos);
    for (const auto& e : edges_) {
      if (!e.alive) continue;
      assert(out[e.src * rank_ + e.label] == npos);
      assert(in[e.dst * rank_ + e.label] == npos);
      out[e.src * rank_ + e.label] = e.dst;
      in[e.dst * rank_ + e.label] = e.src;
    }
    std::vector<std::size_t> number(total, npos);
    std::vector<std::size_t> order;
    number[base()] = 0;
    order.push_back(base());
    for (std::size_t head = 0; head < order.size(); ++head) {
      std::size_t v = order[head];
      for (std::size_t g = 0; g < rank_; ++g) {
        for (std::size_t w : {out[v * rank_ + g], in[v * rank_ + g]}) {
          if (w != npos && number[w] == npos) {
            number[w] = order.size();
            order.push_back(w);
          }
        }
      }
    }
    std::size_t nv = order.size();
    std::vector<std::size_t> cout(nv * rank_, npos), cin(nv * rank_, npos);
    std::size_t ne = 0;
    for (std::size_t v : order) {
      for (std::size_t g = 0; g < rank_; ++g) {
        std::size_t w = out[v * rank_ + g];
        if (w == npos) continue;
        cout[number[v] * rank_ + g] = number[w];
        cin[number[w] * rank_ + g] = number[v];
        ++ne;
      }
    }
    return StallingsGraph(rank_, nv, std::move(cout), std::move(cin), ne);
  }

 private:
  struct Edge {
    std::size_t src, dst, label;
    Word mem;
    bool alive;
  };

  void enqueue(std::size_t v) {
    if (!queued_[v] && vertex_alive_[v]) {
      queued_[v] = true;
      queue_.push_back(v);
    }
  }

  // Gauge transformation at a non-base vertex: rewrites incident memories
  // so products along paths through w are unchanged.
  void gauge(std::size_t w, const Word& h) {
    assert(w != base());
    auto ids = incident_[w];
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    for (std::size_t id : ids) {
      auto& e = edges_[id];
      if (!e.alive) continue;
      if (e.src != w && e.dst != w) continue;  // stale entry
      Word m = e.mem;
      if (e.src == w) m = h.inverse() * m;
      if (e.dst == w) m = m * h;
      e.mem = std::move(m);
    }
  }

  void merge_vertex(std::size_t from, std::size_t to) {
    assert(from != to);
    for (std::size_t id : incident_[from]) {
      auto& e = edges_[id];
      if (!e.alive) continue;
      if (e.src == from) e.src = to;
      if (e.dst == from) e.dst = to;
    }
    auto& dst = incident_[to];
    dst.insert(dst.end(), incident_[from].begin(), incident_[from].end());
    incident_[from].clear();
    vertex_alive_[from] = false;
  }

  // e1 < e2 share a source (out) or a target (in) and a label.
  void fold_pair(std::size_t e1, std::size_t e2, bool out_dir) {
    std::size_t u1 = out_dir ? edges_[e1].dst : edges_[e1].src;
    std::size_t u2 = out_dir ? edges_[e2].dst : edges_[e2].src;
    if (u1 == u2) {
      // parallel edges: the loop e1 e2^-1 dies; its conjugacy class reads
      // mem(e1) mem(e2)^-1.  The loop is nontrivial in the current graph,
      // so its reading cannot be empty.
      if (track_memory_) {
        Word r = edges_[e1].mem * edges_[e2].mem.inverse();
        if (r.empty())
          throw std::logic_error("fold produced an empty relator");
        relators_.push_back(std::move(r));
      }
      edges_[e2].alive = false;
      enqueue(u1);
      return;
    }
    std::size_t w = (u2 != base()) ? u2 : u1;
    std::size_t t = (w == u2) ? u1 : u2;
    if (track_memory_) {
      const Word& mw = (w == u2) ? edges_[e2].mem : edges_[e1].mem;
      const Word& mo = (w == u2) ? edges_[e1].mem : edges_[e2].mem;
      Word h = out_dir ? mw.inverse() * mo : mw * mo.inverse();
      gauge(w, h);
      assert(edges_[e1].mem == edges_[e2].mem);
    }
    merge_vertex(w, t);
    edges_[e2].alive = false;
    enqueue(t);
  }

  // Performs the first foldable pair at v (labels ascending, outgoing
  // before incoming, two lowest edge ids).  Returns false if v is folded.
  bool fold_once_at(std::size_t v) {
    auto ids = incident_[v];
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    for (int dir = 0; dir < 2; ++dir) {
      bool out_dir = dir == 0;
      for (std::size_t g = 0; g < rank_; ++g) {
        std::size_t first = edges_.size();
        for (std::size_t id : ids) {
          const auto& e = edges_[id];
          if (!e.alive || e.label != g) continue;
          if ((out_dir ? e.src : e.dst) != v) continue;
          if (first == edges_.size()) {
            first = id;
          } else {
            fold_pair(first, id, out_dir);
            enqueue(v);
            return true;
          }
        }
      }
    }
    return false;
  }

  std::size_t rank_;
  bool track_memory_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> incident_;
  std::vector<bool> vertex_alive_;
  std::deque<std::size_t> queue_;
  std::vector<bool> queued_;
  std::vector<Word> relators_;
};

}  // namespace

StallingsGraph::StallingsGraph(std::size_t ambient_rank,
                               std::size_t vertex_count,
                               std::vector<std::size_t> out,
                               std::vector<std::size_t> in,
                               std::size_t edge_count)
    : rank_(ambient_rank),
      nv_(vertex_count),
      ne_(edge_count),
      out_(std::move(out)),
      in_(std::move(in)) {}

StallingsGraph build_core_graph(std::size_t ambient_rank,
                                std::span<const Word> generators) {
  Folder f(ambient_rank, /*track_memory=*/false);
  for (const Word& w : generators) f.add_petal(w, Word());
  f.fold_all();
  f.trim();
  return f.compact();
}

bool contains(const StallingsGraph& g, const Word& w) {
  std::size_t v = g.base();
  for (Letter x : w.letters()) {
    std::size_t idx = letter_index(x);
    if (idx >= g.ambient_rank()) return false;
    v = letter_is_inverse(x) ? g.in(v, idx) : g.out(v, idx);
    if (v == StallingsGraph::npos) return false;
  }
  return v == g.base();
}

int graph_rank(const StallingsGraph& g) {
  return static_cast<int>(g.edge_count()) - static_cast<int>(g.vertex_count()) +
         1;
}

bool is_abelian_tuple(std::span<const Word> words) {
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = i + 1; j < words.size(); ++j)
      if (!commutes(words[i], words[j])) return false;
  return true;
}

Word normalize_relator(const Word& w) {
  Word cyc = cyclically_reduce(w);
  if (cyc.empty()) return cyc;
  Word best = cyc;
  for (const Word& seed : {cyc, cyc.inverse()}) {
    std::vector<Letter> ls = seed.letters();
    for (std::size_t shift = 0; shift < ls.size(); ++shift) {
      std::rotate(ls.begin(), ls.begin() + 1, ls.end());
      Word rot = Word::reduce(ls);
      // rotations of a cyclically reduced word stay reduced
      if (compare_length_lex(rot, best) < 0) best = rot;
    }
  }
  return best;
}

TuplePresentation presentation_of_tuple(std::span<const Word> tuple,
                                        const Alphabet& names,
                                        std::size_t ambient_rank) {
  if (tuple.size() != names.size())
    throw Error("tuple size does not match naming alphabet");
  Folder f(ambient_rank, /*track_memory=*/true);
  std::vector<Word> raw;
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (tuple[i].empty())
      raw.push_back(Word::single(i));  // the name itself dies
    else
      f.add_petal(tuple[i], Word::single(i));
  }
  f.fold_all();
  f.trim();
  raw.insert(raw.end(), f.relators().begin(), f.relators().end());

  TuplePresentation out;
  for (const Word& w : raw) {
    Word norm = normalize_relator(w);
    if (norm.empty()) continue;
    if (std::find(out.relators.begin(), out.relators.end(), norm) !=
        out.relators.end())
      continue;
    out.relators.push_back(std::move(norm));
  }
  out.basis_rank = b1(Presentation(names, out.relators));
  return out;
}

}  // namespace rfeq
