#include "trinity/digraph.hpp"

#include <algorithm>
#include <numeric>

#include "trinity/error.hpp"

namespace trinity {

namespace {

// Union-find over vertex indices for the connectivity checks.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), components_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    parent_[a] = b;
    --components_;
  }
  std::size_t components() const { return components_; }

 private:
  std::vector<std::size_t> parent_;
  std::size_t components_;
};

// Connected after deleting `skip_vertex` (if any) and arcs at positions skip_a / skip_b?
bool connected_without(const MultiDigraph& d, std::size_t skip_vertex, std::size_t skip_a,
                       std::size_t skip_b) {
  const std::size_t n = d.vertex_count();
  const std::size_t none = static_cast<std::size_t>(-1);
  DisjointSets sets(n);
  const auto& arcs = d.arcs();
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    if (i == skip_a || i == skip_b) continue;
    if (arcs[i].tail == skip_vertex || arcs[i].head == skip_vertex) continue;
    sets.unite(arcs[i].tail, arcs[i].head);
  }
  return sets.components() == (skip_vertex == none ? 1u : 2u) || n == 0;
}


// Bridges (arc positions) of the underlying multigraph with arc `skip` deleted.
std::vector<std::size_t> bridges_without(const MultiDigraph& d, std::size_t skip) {
  const std::size_t n = d.vertex_count();
  const auto& arcs = d.arcs();
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(n);  // (neighbour, arc)
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    if (i == skip || arcs[i].tail == arcs[i].head) continue;
    adj[arcs[i].tail].emplace_back(arcs[i].head, i);
    adj[arcs[i].head].emplace_back(arcs[i].tail, i);
  }
  const std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> order(n, none), low(n, 0);
  std::vector<std::size_t> out;
  std::size_t counter = 0;
  struct Frame {
    std::size_t v, via, next;
  };
  for (std::size_t root = 0; root < n; ++root) {
    if (order[root] != none) continue;
    std::vector<Frame> stack{{root, none, 0}};
    order[root] = low[root] = counter++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next < adj[f.v].size()) {
        auto [w, arc] = adj[f.v][f.next++];
        if (arc == f.via) continue;
        if (order[w] == none) {
          order[w] = low[w] = counter++;
          stack.push_back({w, arc, 0});
        } else {
          low[f.v] = std::min(low[f.v], order[w]);
        }
      } else {
        const Frame done = f;
        stack.pop_back();
        if (!stack.empty()) {
          low[stack.back().v] = std::min(low[stack.back().v], low[done.v]);
          if (low[done.v] > order[stack.back().v]) out.push_back(done.via);
        }
      }
    }
  }
  return out;
}

}  // namespace

MultiDigraph::MultiDigraph(std::vector<std::string> vertices, const std::vector<ArcSpec>& arcs) {
  for (auto& v : vertices) add_vertex(std::move(v));
  for (const auto& a : arcs) {
    if (arc_pos_.count(a.id)) throw Error(ErrorKind::InvalidArgument, "duplicate arc id " + std::to_string(a.id));
    arc_pos_.emplace(a.id, arcs_.size());
    arcs_.push_back(Arc{a.id, vertex_index(a.tail), vertex_index(a.head)});
    next_id_ = std::max(next_id_, a.id + 1);
  }
}

std::size_t MultiDigraph::add_vertex(std::string label) {
  if (index_.count(label)) throw Error(ErrorKind::InvalidArgument, "duplicate vertex label " + label);
  index_.emplace(label, labels_.size());
  labels_.push_back(std::move(label));
  return labels_.size() - 1;
}

int MultiDigraph::add_arc(std::size_t tail, std::size_t head) {
  if (tail >= labels_.size() || head >= labels_.size())
    throw Error(ErrorKind::InvalidArgument, "arc endpoint out of range");
  const int id = next_id_++;
  arc_pos_.emplace(id, arcs_.size());
  arcs_.push_back(Arc{id, tail, head});
  return id;
}

int MultiDigraph::add_arc(std::string_view tail, std::string_view head) {
  return add_arc(vertex_index(tail), vertex_index(head));
}

void MultiDigraph::add_arcs(std::size_t tail, std::size_t head, int count) {
  for (int i = 0; i < count; ++i) add_arc(tail, head);
}

std::size_t MultiDigraph::vertex_index(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) throw Error(ErrorKind::UnknownLabel, "no vertex " + std::string(label));
  return it->second;
}

bool MultiDigraph::has_vertex(std::string_view label) const {
  return index_.count(std::string(label)) != 0;
}

std::size_t MultiDigraph::arc_index(int id) const {
  auto it = arc_pos_.find(id);
  if (it == arc_pos_.end()) throw Error(ErrorKind::UnknownLabel, "no arc " + std::to_string(id));
  return it->second;
}

std::size_t MultiDigraph::out_degree(std::size_t v) const {
  std::size_t n = 0;
  for (const auto& a : arcs_) n += a.tail == v;
  return n;
}

std::size_t MultiDigraph::in_degree(std::size_t v) const {
  std::size_t n = 0;
  for (const auto& a : arcs_) n += a.head == v;
  return n;
}

bool MultiDigraph::is_eulerian() const {
  std::vector<long> balance(labels_.size(), 0);
  for (const auto& a : arcs_) {
    ++balance[a.tail];
    --balance[a.head];
  }
  for (long b : balance)
    if (b != 0) return false;
  return true;
}

bool MultiDigraph::is_connected() const {
  const std::size_t none = static_cast<std::size_t>(-1);
  return connected_without(*this, none, none, none);
}

IntMatrix laplacian(const MultiDigraph& d) {
  const std::size_t n = d.vertex_count();
  IntMatrix l(n, n);
  for (const auto& a : d.arcs()) {
    l(a.tail, a.tail) += 1;
    l(a.tail, a.head) -= 1;
  }
  return l;
}

IntMatrix reduced_laplacian(const MultiDigraph& d, std::size_t removed) {
  if (removed >= d.vertex_count()) throw Error(ErrorKind::UnknownLabel, "vertex index out of range");
  return laplacian(d).minor_matrix(removed, removed);
}

IntMatrix reduced_laplacian(const MultiDigraph& d, std::string_view removed) {
  return reduced_laplacian(d, d.vertex_index(removed));
}

AbelianGroup sandpile_group(const MultiDigraph& d, std::size_t removed) {
  if (d.vertex_count() == 0) throw Error(ErrorKind::InvalidArgument, "empty digraph");
  if (!d.is_eulerian()) throw Error(ErrorKind::NotEulerian, "in-degree differs from out-degree");
  if (!d.is_connected()) throw Error(ErrorKind::NotConnected, "underlying graph is disconnected");
  AbelianGroup g = cokernel(reduced_laplacian(d, removed));
  if (!g.is_finite())
    throw Error(ErrorKind::NotConnected, "reduced Laplacian is singular");
  return g;
}

AbelianGroup sandpile_group(const MultiDigraph& d) {
  if (d.vertex_count() == 0) throw Error(ErrorKind::InvalidArgument, "empty digraph");
  return sandpile_group(d, d.vertex_count() - 1);
}

ConnectivityReport audit(const MultiDigraph& d) {
  ConnectivityReport r;
  const std::size_t none = static_cast<std::size_t>(-1);
  r.connected = d.is_connected();
  r.eulerian = d.is_eulerian();
  for (const auto& a : d.arcs())
    if (a.tail == a.head) r.has_loops = true;

  if (r.connected && d.vertex_count() > 2) {
    for (std::size_t v = 0; v < d.vertex_count(); ++v)
      if (!connected_without(d, v, none, none)) r.cut_vertices.insert(d.label(v));
  }
  if (r.connected) {
    const auto& arcs = d.arcs();
    const auto global = bridges_without(d, none);
    for (std::size_t b : global)
      for (std::size_t j = 0; j < arcs.size(); ++j)
        if (j != b) r.two_edge_cuts.emplace(std::min(arcs[b].id, arcs[j].id), std::max(arcs[b].id, arcs[j].id));
    for (std::size_t i = 0; i < arcs.size(); ++i) {
      if (std::find(global.begin(), global.end(), i) != global.end()) continue;
      for (std::size_t j : bridges_without(d, i))
        r.two_edge_cuts.emplace(std::min(arcs[i].id, arcs[j].id), std::max(arcs[i].id, arcs[j].id));
    }
  }
  r.prop_simple_ok = r.connected && !r.has_loops && r.cut_vertices.empty() && r.two_edge_cuts.empty();
  return r;
}

}  // namespace trinity
