#include "trinity/surface.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "trinity/error.hpp"

namespace trinity {

namespace {

// Darts: arc position i has its outgoing end 2i (at the tail) and its
// incoming end 2i+1 (at the head).
std::size_t dart_of(const MultiDigraph& d, const ArcEnd& end) {
  return 2 * d.arc_index(end.arc) + (end.outgoing ? 0 : 1);
}

// next_in_rotation[dart] for a complete rotation system.
std::vector<std::size_t> rotation_successor(const EmbeddedDigraph& e) {
  const auto& d = e.digraph();
  std::vector<std::size_t> next(2 * d.arc_count());
  for (const auto& rot : e.rotation()) {
    for (std::size_t k = 0; k < rot.size(); ++k)
      next[dart_of(d, rot[k])] = dart_of(d, rot[(k + 1) % rot.size()]);
  }
  return next;
}

std::size_t components_of(const MultiDigraph& d) {
  std::vector<std::size_t> parent(d.vertex_count());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t c = d.vertex_count();
  for (const auto& a : d.arcs()) {
    auto x = find(a.tail), y = find(a.head);
    if (x != y) parent[x] = y, --c;
  }
  return c;
}

}  // namespace

// ------------------------------------------------------------ EmbeddedDigraph

EmbeddedDigraph::EmbeddedDigraph(MultiDigraph digraph, std::vector<std::vector<ArcEnd>> rotation)
    : digraph_(std::move(digraph)), rotation_(std::move(rotation)) {
  const auto& d = digraph_;
  if (rotation_.size() != d.vertex_count())
    throw Error(ErrorKind::MalformedRotation, "rotation count differs from vertex count");
  std::vector<int> seen(2 * d.arc_count(), 0);
  for (std::size_t v = 0; v < rotation_.size(); ++v) {
    for (const auto& end : rotation_[v]) {
      std::size_t pos;
      try {
        pos = d.arc_index(end.arc);
      } catch (const Error&) {
        throw Error(ErrorKind::MalformedRotation, "rotation names unknown arc " + std::to_string(end.arc));
      }
      const Arc& a = d.arcs()[pos];
      if ((end.outgoing ? a.tail : a.head) != v)
        throw Error(ErrorKind::MalformedRotation,
                    "arc " + std::to_string(end.arc) + " end listed at wrong vertex " + d.label(v));
      if (++seen[2 * pos + (end.outgoing ? 0 : 1)] > 1)
        throw Error(ErrorKind::MalformedRotation, "arc end repeated: " + std::to_string(end.arc));
    }
  }
  for (std::size_t i = 0; i < seen.size(); ++i)
    if (seen[i] != 1)
      throw Error(ErrorKind::MalformedRotation,
                  "arc " + std::to_string(d.arcs()[i / 2].id) + " end missing from rotation");
}

bool EmbeddedDigraph::alternates() const {
  for (const auto& rot : rotation_) {
    if (rot.size() % 2 != 0) return false;
    for (std::size_t k = 0; k < rot.size(); ++k)
      if (rot[k].outgoing == rot[(k + 1) % rot.size()].outgoing) return false;
  }
  return true;
}

// ------------------------------------------------------------- face tracing

FaceReport trace_faces(const EmbeddedDigraph& e) {
  const auto& d = e.digraph();
  const auto next = rotation_successor(e);
  const std::size_t darts = next.size();
  std::vector<bool> used(darts, false);
  FaceReport report;
  report.all_directed = true;
  // Arriving on dart x, leave on next[x]; the arc is then traversed forward
  // iff the leaving dart is an outgoing end.
  for (std::size_t start = 0; start < darts; ++start) {
    if (used[start]) continue;
    std::vector<int> face;
    bool any_forward = false, any_backward = false;
    std::size_t x = start;
    do {
      used[x] = true;
      const std::size_t leave = next[x];
      face.push_back(d.arcs()[leave / 2].id);
      (leave % 2 == 0 ? any_forward : any_backward) = true;
      x = leave ^ 1;
    } while (x != start);
    std::optional<bool> orient;
    if (any_forward != any_backward) orient = any_forward;
    else report.all_directed = false;
    report.faces.push_back(std::move(face));
    report.orientation.push_back(orient);
  }
  const long v = static_cast<long>(d.vertex_count());
  const long edges = static_cast<long>(d.arc_count());
  const long f = static_cast<long>(report.faces.size());
  report.euler_characteristic = v - edges + f;
  // Isolated vertices contribute a sphere each; count components for the general case.
  const long comps = static_cast<long>(components_of(d));
  report.genus = (2 * comps - report.euler_characteristic) / 2;
  return report;
}

bool is_directed_eulerian_spherical(const EmbeddedDigraph& e) {
  if (!e.alternates() || !e.digraph().is_connected()) return false;
  const auto r = trace_faces(e);
  return r.all_directed && r.genus == 0;
}

// ---------------------------------------------------------- rotation search

std::size_t spherical_search_arc_bound() {
  if (const char* env = std::getenv("TRINITY_MAX_ARCS")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 24;
}

namespace {

bool underlying_simple_graph_planar(const MultiDigraph& d) {
  using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  Graph g(d.vertex_count());
  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& a : d.arcs()) {
    if (a.tail == a.head) continue;
    edges.emplace(std::min(a.tail, a.head), std::max(a.tail, a.head));
  }
  for (const auto& [u, v] : edges) boost::add_edge(u, v, g);
  return boost::boyer_myrvold_planarity_test(g);
}

// Assigns successors next[x] one dart at a time, always extending the most
// constrained open dart, so faces close as early as possible.
class RotationSearch {
 public:
  explicit RotationSearch(const MultiDigraph& d) : d_(d) {
    const std::size_t m = 2 * d.arc_count();
    vertex_.resize(m);
    degree_.assign(d.vertex_count(), 0);
    darts_at_.resize(d.vertex_count());
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> class_of;
    for (std::size_t i = 0; i < d.arc_count(); ++i) {
      const Arc& a = d.arcs()[i];
      vertex_[2 * i] = a.tail;
      vertex_[2 * i + 1] = a.head;
      darts_at_[a.tail].push_back(2 * i);
      darts_at_[a.head].push_back(2 * i + 1);
      arc_class_.push_back(class_of.try_emplace({a.tail, a.head}, class_of.size()).first->second);
    }
    for (std::size_t v = 0; v < d.vertex_count(); ++v) degree_[v] = darts_at_[v].size();
    next_.assign(m, kUnset);
    prev_.assign(m, kUnset);
    min_face_ = 2;
    for (const auto& a : d.arcs())
      if (a.tail == a.head) min_face_ = 1;
    target_faces_ = static_cast<long>(d.arc_count()) - static_cast<long>(d.vertex_count()) + 2;
  }

  std::optional<std::vector<std::size_t>> run() {
    if (next_.empty()) return next_;
    if (search()) return next_;
    return std::nullopt;
  }

 private:
  static constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

  bool untouched(std::size_t arc) const {
    for (std::size_t x : {2 * arc, 2 * arc + 1})
      if (next_[x] != kUnset || prev_[x] != kUnset) return false;
    return true;
  }

  // Successor choices for x: darts at the same vertex of the other direction,
  // not yet a successor, not closing a cycle shorter than the rotation.
  std::vector<std::size_t> candidates(std::size_t x) const {
    std::vector<std::size_t> out;
    std::set<std::size_t> classes_tried;
    const std::size_t v = vertex_[x];
    for (std::size_t y : darts_at_[v]) {
      if ((y & 1) == (x & 1) || prev_[y] != kUnset) continue;
      std::size_t len = 1, z = y;
      while (next_[z] != kUnset && z != x) z = next_[z], ++len;
      if (z == x && len < degree_[v]) continue;
      if (y / 2 != x / 2 && untouched(y / 2) && !classes_tried.insert(arc_class_[y / 2]).second) continue;
      out.push_back(y);
    }
    return out;
  }

  // Upper bound on the face count of any completion: closed faces, plus one
  // face per open chain, plus the untouched darts packed into smallest faces.
  bool feasible() const {
    const std::size_t m = next_.size();
    std::vector<bool> seen(m, false);
    long chains = 0;
    std::size_t chain_darts = 0;
    for (std::size_t s = 0; s < m; ++s) {
      // s starts a chain when nothing enters it: no dart leaves into s's arc end.
      if (next_[s] == kUnset || prev_[s ^ 1] != kUnset) continue;
      std::size_t x = s, len = 0;
      while (true) {
        seen[x] = true;
        ++len;
        if (next_[x] == kUnset) break;
        x = next_[x] ^ 1;
      }
      ++chains;
      chain_darts += len;
    }
    long closed = 0;
    std::size_t closed_darts = 0;
    for (std::size_t s = 0; s < m; ++s) {
      if (seen[s] || next_[s] == kUnset) continue;
      for (std::size_t x = s; !seen[x]; x = next_[x] ^ 1) seen[x] = true, ++closed_darts;
      ++closed;
    }
    const long free_darts = static_cast<long>(m - closed_darts - chain_darts);
    return closed + chains + free_darts / static_cast<long>(min_face_) >= target_faces_;
  }

  bool search() {
    std::size_t best = kUnset;
    std::vector<std::size_t> best_options;
    for (std::size_t x = 0; x < next_.size(); ++x) {
      if (next_[x] != kUnset) continue;
      auto options = candidates(x);
      if (best == kUnset || options.size() < best_options.size()) {
        best = x;
        best_options = std::move(options);
        if (best_options.size() <= 1) break;
      }
    }
    if (best == kUnset) return true;
    for (std::size_t y : best_options) {
      next_[best] = y;
      prev_[y] = best;
      if (feasible() && search()) return true;
      next_[best] = kUnset;
      prev_[y] = kUnset;
    }
    return false;
  }

  const MultiDigraph& d_;
  std::vector<std::size_t> vertex_, degree_, arc_class_;
  std::vector<std::vector<std::size_t>> darts_at_;
  std::vector<std::size_t> next_, prev_;
  std::size_t min_face_ = 2;
  long target_faces_ = 0;
};

}  // namespace

std::optional<EmbeddedDigraph> find_spherical_rotation(const MultiDigraph& d, std::size_t max_arcs) {
  if (max_arcs == 0) max_arcs = spherical_search_arc_bound();
  if (d.arc_count() > max_arcs)
    throw Error(ErrorKind::BoundExceeded, std::to_string(d.arc_count()) + " arcs exceed search bound " +
                                              std::to_string(max_arcs));
  if (!d.is_eulerian()) throw Error(ErrorKind::NotEulerian, "rotation search needs an Eulerian digraph");
  if (!d.is_connected()) throw Error(ErrorKind::NotConnected, "rotation search needs a connected digraph");
  if (!underlying_simple_graph_planar(d)) return std::nullopt;

  auto next = RotationSearch(d).run();
  if (!next) return std::nullopt;
  std::vector<std::vector<ArcEnd>> rotation(d.vertex_count());
  std::vector<bool> placed(next->size(), false);
  for (std::size_t s = 0; s < next->size(); ++s) {
    if (placed[s]) continue;
    auto& rot = rotation[s % 2 == 0 ? d.arcs()[s / 2].tail : d.arcs()[s / 2].head];
    for (std::size_t x = s; !placed[x]; x = (*next)[x]) {
      placed[x] = true;
      rot.push_back(ArcEnd{d.arcs()[x / 2].id, x % 2 == 0});
    }
  }
  return EmbeddedDigraph(d, std::move(rotation));
}

// ------------------------------------------------------------ triangulation

char class_letter(VertexClass c) { return "RCS"[static_cast<int>(c)]; }

VertexClass class_from_letter(char c) {
  switch (c) {
    case 'R': case 'r': return VertexClass::R;
    case 'C': case 'c': return VertexClass::C;
    case 'S': case 's': return VertexClass::S;
  }
  throw Error(ErrorKind::InvalidArgument, std::string("vertex class must be R, C or S, got ") + c);
}

bool Triangulation::underlying_graph_simple() const {
  for (const auto* faces : {&white, &black}) {
    std::set<std::array<std::size_t, 4>> pairs;  // (class a, index a, class b, index b)
    for (const auto& f : *faces)
      for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b)
          if (!pairs.insert({std::size_t(a), f[a], std::size_t(b), f[b]}).second) return false;
  }
  return true;
}

namespace {
std::vector<std::array<std::string, 3>> label_faces(const Triangulation& t,
                                                    const std::vector<std::array<std::size_t, 3>>& faces) {
  std::vector<std::array<std::string, 3>> out;
  out.reserve(faces.size());
  for (const auto& f : faces) out.push_back({t.labels[0][f[0]], t.labels[1][f[1]], t.labels[2][f[2]]});
  return out;
}
}  // namespace

std::vector<std::array<std::string, 3>> Triangulation::white_triples() const { return label_faces(*this, white); }
std::vector<std::array<std::string, 3>> Triangulation::black_triples() const { return label_faces(*this, black); }

EmbeddedDigraph tutte_digraph(const Triangulation& t, VertexClass cls) {
  if (t.genus() != 0 || t.euler_characteristic() != 2)
    throw Error(ErrorKind::NonSpherical, "triangulation has genus " + std::to_string(t.genus()));
  const int k = static_cast<int>(cls);
  MultiDigraph d;
  for (const auto& label : t.labels[k]) d.add_vertex(label);
  // Arc id = black face index; the white face across the opposite side receives it.
  std::vector<int> incoming_of_white(t.white.size(), -1);
  for (std::size_t b = 0; b < t.black.size(); ++b) {
    const std::size_t w = t.across[b][k];
    d.add_arc(t.black[b][k], t.white[w][k]);
    incoming_of_white[w] = static_cast<int>(b);
  }
  std::vector<std::vector<ArcEnd>> rotation(t.labels[k].size());
  for (std::size_t v = 0; v < t.labels[k].size(); ++v)
    for (const auto& f : t.rotation[k][v])
      rotation[v].push_back(f.black ? ArcEnd{static_cast<int>(f.index), true}
                                    : ArcEnd{incoming_of_white[f.index], false});
  return EmbeddedDigraph(std::move(d), std::move(rotation));
}

Triangulation triangulation_from_embedding(const EmbeddedDigraph& e) {
  const auto& d = e.digraph();
  if (!e.alternates()) throw Error(ErrorKind::NotDirectedEulerian, "rotation does not alternate");
  if (!d.is_connected()) throw Error(ErrorKind::NotConnected, "embedding is disconnected");
  const FaceReport faces = trace_faces(e);
  if (!faces.all_directed) throw Error(ErrorKind::NotDirectedEulerian, "a face is not a directed cycle");
  if (faces.genus != 0) throw Error(ErrorKind::NonSpherical, "embedding has genus " + std::to_string(faces.genus));

  // Face classes: backward-traversed faces are C, forward-traversed faces are S.
  std::vector<std::size_t> forward_face(d.arc_count()), backward_face(d.arc_count());
  Triangulation t;
  std::vector<std::size_t> face_index(faces.faces.size());
  for (std::size_t f = 0; f < faces.faces.size(); ++f) {
    const bool fwd = *faces.orientation[f];
    auto& labels = t.labels[fwd ? 2 : 1];
    face_index[f] = labels.size();
    labels.push_back((fwd ? "s" : "c") + std::to_string(labels.size()));
    for (int id : faces.faces[f]) (fwd ? forward_face : backward_face)[d.arc_index(id)] = face_index[f];
  }
  for (std::size_t v = 0; v < d.vertex_count(); ++v) t.labels[0].push_back(d.label(v));

  // White and black face i both belong to arc position i.
  for (std::size_t i = 0; i < d.arc_count(); ++i) {
    const Arc& a = d.arcs()[i];
    t.black.push_back({a.tail, backward_face[i], forward_face[i]});
    t.white.push_back({a.head, backward_face[i], forward_face[i]});
  }
  // Across relations: black(a) faces white(a) over the face-face side. Around
  // the tail, the ends adjacent to out(a) are in(x) (before) and in(y) (after):
  // white(x) shares the side {tail, forward(a)}, white(y) shares {tail, backward(a)}.
  t.across.assign(d.arc_count(), {0, 0, 0});
  t.rotation[0].resize(d.vertex_count());
  for (std::size_t v = 0; v < d.vertex_count(); ++v) {
    const auto& rot = e.rotation_at(v);
    const std::size_t n = rot.size();
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t pos = d.arc_index(rot[k].arc);
      t.rotation[0][v].push_back(FaceRef{rot[k].outgoing, pos});
      if (!rot[k].outgoing) continue;
      const std::size_t before = d.arc_index(rot[(k + n - 1) % n].arc);
      const std::size_t after = d.arc_index(rot[(k + 1) % n].arc);
      t.across[pos][0] = pos;
      t.across[pos][1] = before;  // opposite the C corner: side {tail, forward}
      t.across[pos][2] = after;   // opposite the S corner: side {tail, backward}
    }
  }
  // Around a face-vertex, faces run against the traversal order:
  // forward face: W(x), B(x) for x in reverse traversal; backward: B(x), W(x).
  t.rotation[1].resize(t.labels[1].size());
  t.rotation[2].resize(t.labels[2].size());
  for (std::size_t f = 0; f < faces.faces.size(); ++f) {
    const bool fwd = *faces.orientation[f];
    auto& rot = t.rotation[fwd ? 2 : 1][face_index[f]];
    const auto& arcs = faces.faces[f];
    for (auto it = arcs.rbegin(); it != arcs.rend(); ++it) {
      const std::size_t pos = d.arc_index(*it);
      if (fwd) {
        rot.push_back(FaceRef{false, pos});
        rot.push_back(FaceRef{true, pos});
      } else {
        rot.push_back(FaceRef{true, pos});
        rot.push_back(FaceRef{false, pos});
      }
    }
  }
  return t;
}

}  // namespace trinity
