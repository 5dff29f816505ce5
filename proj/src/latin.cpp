#include "trinity/latin.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "trinity/error.hpp"

namespace trinity {

namespace {

const char* const kClassName[3] = {"row", "column", "symbol"};

std::string show(const Triple& t) { return "(" + t[0] + "," + t[1] + "," + t[2] + ")"; }

// Triples of one half keyed by the two coordinates other than `omit`.
class PairIndex {
 public:
  explicit PairIndex(const std::vector<Triple>& half) {
    for (std::size_t i = 0; i < half.size(); ++i)
      for (int o = 0; o < 3; ++o) index_[o].emplace(key(half[i], o), i);
  }
  // Index of the triple agreeing with `t` off coordinate `omit`, or npos.
  std::size_t find(const Triple& t, int omit) const {
    auto it = index_[omit].find(key(t, omit));
    return it == index_[omit].end() ? npos : it->second;
  }
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  static std::pair<std::string, std::string> key(const Triple& t, int omit) {
    return {t[(omit + 1) % 3], t[(omit + 2) % 3]};
  }
  std::array<std::map<std::pair<std::string, std::string>, std::size_t>, 3> index_;
};

std::vector<std::string> class_labels(const std::vector<Triple>& triples, int k) {
  std::set<std::string> s;
  for (const auto& t : triples) s.insert(t[k]);
  return {s.begin(), s.end()};
}

}  // namespace

// ------------------------------------------------------- PartialLatinSquare

bool is_latin(const std::vector<Triple>& triples) {
  for (int o = 0; o < 3; ++o) {
    std::set<std::pair<std::string, std::string>> seen;
    for (const auto& t : triples)
      if (!seen.emplace(t[(o + 1) % 3], t[(o + 2) % 3]).second) return false;
  }
  return true;
}

PartialLatinSquare::PartialLatinSquare(std::vector<Triple> triples) : triples_(std::move(triples)) {
  std::sort(triples_.begin(), triples_.end());
  if (std::adjacent_find(triples_.begin(), triples_.end()) != triples_.end())
    throw Error(ErrorKind::InvalidArgument, "repeated triple");
  if (!is_latin(triples_)) throw Error(ErrorKind::InvalidArgument, "two triples agree in two coordinates");
}

bool PartialLatinSquare::contains(const Triple& t) const {
  return std::binary_search(triples_.begin(), triples_.end(), t);
}

std::vector<std::string> PartialLatinSquare::labels(int k) const { return class_labels(triples_, k); }

// ---------------------------------------------------------------- bitrades

BitradeDiagnostics validate_bitrade(const std::vector<Triple>& w, const std::vector<Triple>& b) {
  BitradeDiagnostics d;
  auto& p = d.problems;
  if (w.empty()) p.push_back("W is empty");
  if (w.size() != b.size())
    p.push_back("|W| = " + std::to_string(w.size()) + " but |B| = " + std::to_string(b.size()));
  const std::set<Triple> ws(w.begin(), w.end()), bs(b.begin(), b.end());
  if (ws.size() != w.size()) p.push_back("W repeats a triple");
  if (bs.size() != b.size()) p.push_back("B repeats a triple");
  if (!is_latin(w)) p.push_back("W is not a partial latin square");
  if (!is_latin(b)) p.push_back("B is not a partial latin square");
  for (const auto& t : w)
    if (bs.count(t)) p.push_back("triple " + show(t) + " lies in W and B");
  if (!p.empty()) return d;

  auto check = [&](const std::vector<Triple>& from, const std::vector<Triple>& to, const char* a, const char* z) {
    const PairIndex idx(to);
    for (const auto& t : from)
      for (int o = 0; o < 3; ++o) {
        const std::size_t j = idx.find(t, o);
        if (j == PairIndex::npos || to[j][o] == t[o])
          p.push_back(std::string("no ") + kClassName[o] + " swap in " + z + " for " + a + " triple " + show(t));
      }
  };
  check(w, b, "W", "B");
  check(b, w, "B", "W");
  d.valid = p.empty();
  return d;
}

LatinBitrade::LatinBitrade(std::vector<Triple> w, std::vector<Triple> b) {
  const auto d = validate_bitrade(w, b);
  if (!d.valid) throw Error(ErrorKind::NotABitrade, d.problems.front());
  w_ = PartialLatinSquare(std::move(w));
  b_ = PartialLatinSquare(std::move(b));
}

std::size_t LatinBitrade::vertex_count() const {
  return labels(0).size() + labels(1).size() + labels(2).size();
}

// -------------------------------------------------------------- separation

SeparationReport separation(const LatinBitrade& x) {
  const auto& w = x.W().triples();
  const auto& b = x.B().triples();
  const PairIndex wi(w), bi(b);
  SeparationReport r;
  r.separated = true;
  for (int k = 0; k < 3; ++k) {
    const int j = (k + 1) % 3, l = (k + 2) % 3;
    std::vector<bool> done(w.size(), false);
    for (std::size_t s = 0; s < w.size(); ++s) {
      if (done[s]) continue;
      std::vector<Triple> cycle;
      // W triple -> B triple in the same line with the same l-label -> W triple with that j-label.
      for (std::size_t t = s; !done[t];) {
        done[t] = true;
        cycle.push_back(w[t]);
        t = wi.find(b[bi.find(w[t], j)], l);
      }
      auto& cycles = r.cycles[k][w[s][k]];
      cycles.push_back(std::move(cycle));
      if (cycles.size() > 1) r.separated = false;
    }
  }
  return r;
}

LatinBitrade separate(const LatinBitrade& x) {
  const auto rep = separation(x);
  if (rep.separated) return x;
  std::vector<Triple> w = x.W().triples(), b = x.B().triples();
  const auto& w0 = x.W().triples();
  const PairIndex bi(x.B().triples());
  for (int k = 0; k < 3; ++k) {
    const int j = (k + 1) % 3;
    for (const auto& [label, cycles] : rep.cycles[k]) {
      if (cycles.size() < 2) continue;
      // Cycles come out ordered by their smallest W-triple.
      for (std::size_t c = 1; c < cycles.size(); ++c) {
        const std::string fresh = label + "~" + std::to_string(c + 1);
        for (const auto& t : cycles[c]) {
          const std::size_t wpos = std::lower_bound(w0.begin(), w0.end(), t) - w0.begin();
          w[wpos][k] = fresh;
          b[bi.find(t, j)][k] = fresh;
        }
      }
    }
  }
  return LatinBitrade(std::move(w), std::move(b));
}

bool connectedness(const LatinBitrade& x) {
  const auto& w = x.W().triples();
  const auto& b = x.B().triples();
  const std::size_t n = w.size();
  const PairIndex bi(b);
  std::vector<std::size_t> parent(2 * n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::size_t comps = 2 * n;
  for (std::size_t i = 0; i < n; ++i)
    for (int o = 0; o < 3; ++o) {
      auto a = find(i), c = find(n + bi.find(w[i], o));
      if (a != c) parent[a] = c, --comps;
    }
  return comps == 1;
}

long bitrade_genus(const LatinBitrade& x) {
  if (!connectedness(x)) throw Error(ErrorKind::NotConnected, "bitrade has a proper sub-bitrade");
  if (!separation(x).separated) throw Error(ErrorKind::NotSeparated, "some line permutation has several cycles");
  const long chi = static_cast<long>(x.vertex_count()) - static_cast<long>(x.size());
  return (2 - chi) / 2;
}

// ------------------------------------------------------------------ groups

GroupPresentation canonical_group(const PartialLatinSquare& p) {
  GroupPresentation g;
  std::array<std::map<std::string, std::size_t>, 3> column;
  const char* prefix[3] = {"R:", "C:", "S:"};
  for (int k = 0; k < 3; ++k)
    for (const auto& label : p.labels(k)) {
      column[k].emplace(label, g.generators.size());
      g.generators.push_back(prefix[k] + label);
    }
  g.relation_matrix = IntMatrix(p.size(), g.generators.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    for (int k = 0; k < 3; ++k) g.relation_matrix(i, column[k].at(p.triples()[i][k])) = 1;
  g.group = p.empty() ? AbelianGroup() : cokernel(g.relation_matrix);
  return g;
}

PartialLatinSquare apply_main_class(const PartialLatinSquare& p, std::array<int, 3> roles,
                                    const std::array<std::map<std::string, std::string>, 3>& relabel) {
  std::array<int, 3> sorted = roles;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != std::array<int, 3>{0, 1, 2})
    throw Error(ErrorKind::InvalidArgument, "role map is not a permutation of (0,1,2)");
  for (int k = 0; k < 3; ++k) {
    if (relabel[k].empty()) continue;
    std::set<std::string> image;
    for (const auto& label : p.labels(k)) {
      auto it = relabel[k].find(label);
      if (it == relabel[k].end())
        throw Error(ErrorKind::InvalidArgument, std::string(kClassName[k]) + " relabeling misses " + label);
      if (!image.insert(it->second).second)
        throw Error(ErrorKind::InvalidArgument, std::string(kClassName[k]) + " relabeling is not injective");
    }
  }
  std::vector<Triple> out;
  for (const auto& t : p.triples()) {
    Triple r;
    for (int k = 0; k < 3; ++k) r[k] = relabel[k].empty() ? t[k] : relabel[k].at(t[k]);
    out.push_back({r[roles[0]], r[roles[1]], r[roles[2]]});
  }
  return PartialLatinSquare(std::move(out));
}

// -------------------------------------------------------------- embeddings

namespace {

// Elements of Z/f1 + ... + Z/fk encoded in mixed radix.
class FiniteGroup {
 public:
  explicit FiniteGroup(const AbelianGroup& g) {
    if (!g.is_finite()) throw Error(ErrorKind::InfiniteGroup, "embedding target has free rank");
    order_ = 1;
    for (const auto& f : g.invariant_factors()) {
      if (!f.fits_slong_p() || f > (1L << 20) || order_ * f.get_si() > (1L << 20))
        throw Error(ErrorKind::BoundExceeded, "embedding target has more than 2^20 elements");
      factors_.push_back(f.get_si());
      order_ *= factors_.back();
    }
  }
  long order() const { return order_; }
  GroupElement decode(long x) const {
    GroupElement e(factors_.size());
    for (std::size_t i = factors_.size(); i-- > 0;) e[i] = x % factors_[i], x /= factors_[i];
    return e;
  }
  long encode(const GroupElement& e) const {
    long x = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) x = x * factors_[i] + e[i];
    return x;
  }
  long combine(long a, long b, int sign) const {
    long x = 0, place = 1;
    for (std::size_t i = factors_.size(); i-- > 0;) {
      const long f = factors_[i];
      long d = (a % f + sign * (b % f)) % f;
      if (d < 0) d += f;
      x += d * place;
      place *= f;
      a /= f, b /= f;
    }
    return x;
  }
  bool valid(const GroupElement& e) const {
    if (e.size() != factors_.size()) return false;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] < 0 || e[i] >= factors_[i]) return false;
    return true;
  }

 private:
  std::vector<long> factors_;
  long order_ = 1;
};

class EmbeddingSearch {
 public:
  EmbeddingSearch(const PartialLatinSquare& p, const FiniteGroup& g) : g_(g) {
    for (int k = 0; k < 3; ++k) {
      labels_[k] = p.labels(k);
      value_[k].assign(labels_[k].size(), -1);
      used_[k].assign(static_cast<std::size_t>(g.order()), false);
    }
    for (const auto& t : p.triples()) {
      std::array<std::size_t, 3> v;
      for (int k = 0; k < 3; ++k)
        v[k] = std::lower_bound(labels_[k].begin(), labels_[k].end(), t[k]) - labels_[k].begin();
      triples_.push_back(v);
    }
  }

  bool run() {
    for (int k = 0; k < 3; ++k)
      if (static_cast<long>(labels_[k].size()) > g_.order()) return false;
    if (triples_.empty()) return true;
    std::vector<std::pair<int, std::size_t>> trail;
    if (!assign(0, 0, 0, trail) || !assign(1, 0, 0, trail)) return false;
    return propagate(trail) && search();
  }

  std::array<std::map<std::string, GroupElement>, 3> result() const {
    std::array<std::map<std::string, GroupElement>, 3> phi;
    for (int k = 0; k < 3; ++k)
      for (std::size_t i = 0; i < labels_[k].size(); ++i) phi[k][labels_[k][i]] = g_.decode(value_[k][i]);
    return phi;
  }

 private:
  bool assign(int k, std::size_t i, long x, std::vector<std::pair<int, std::size_t>>& trail) {
    if (value_[k][i] >= 0) return value_[k][i] == x;
    if (used_[k][x]) return false;
    value_[k][i] = x;
    used_[k][x] = true;
    trail.emplace_back(k, i);
    return true;
  }

  void undo(std::vector<std::pair<int, std::size_t>>& trail) {
    for (auto [k, i] : trail) {
      used_[k][value_[k][i]] = false;
      value_[k][i] = -1;
    }
    trail.clear();
  }

  // Fills in the third value of every triple with two known values.
  bool propagate(std::vector<std::pair<int, std::size_t>>& trail) {
    for (bool changed = true; changed;) {
      changed = false;
      for (const auto& t : triples_) {
        const long r = value_[0][t[0]], c = value_[1][t[1]], s = value_[2][t[2]];
        const int known = (r >= 0) + (c >= 0) + (s >= 0);
        if (known == 3) {
          if (g_.combine(r, c, 1) != s) return false;
        } else if (known == 2) {
          bool ok;
          if (s < 0) ok = assign(2, t[2], g_.combine(r, c, 1), trail);
          else if (c < 0) ok = assign(1, t[1], g_.combine(s, r, -1), trail);
          else ok = assign(0, t[0], g_.combine(s, c, -1), trail);
          if (!ok) return false;
          changed = true;
        }
      }
    }
    return true;
  }

  bool search() {
    // Prefer a label sharing a triple with a known value.
    int bk = -1;
    std::size_t bi = 0;
    for (const auto& t : triples_) {
      int unknown = -1, known = 0;
      for (int k = 0; k < 3; ++k) {
        if (value_[k][t[k]] >= 0) ++known;
        else if (unknown < 0) unknown = k;
      }
      if (unknown >= 0 && (bk < 0 || known > 0)) {
        bk = unknown;
        bi = t[unknown];
        if (known > 0) break;
      }
    }
    if (bk < 0) return true;
    for (long x = 0; x < g_.order(); ++x) {
      if (used_[bk][x]) continue;
      std::vector<std::pair<int, std::size_t>> trail;
      if (assign(bk, bi, x, trail) && propagate(trail) && search()) return true;
      undo(trail);
    }
    return false;
  }

  const FiniteGroup& g_;
  std::array<std::vector<std::string>, 3> labels_;
  std::array<std::vector<long>, 3> value_;
  std::array<std::vector<bool>, 3> used_;
  std::vector<std::array<std::size_t, 3>> triples_;
};

}  // namespace

bool check_embedding(const PartialLatinSquare& p, const Embedding& e) {
  const FiniteGroup g(e.group);
  for (int k = 0; k < 3; ++k) {
    std::set<long> image;
    for (const auto& label : p.labels(k)) {
      auto it = e.phi[k].find(label);
      if (it == e.phi[k].end() || !g.valid(it->second)) return false;
      if (!image.insert(g.encode(it->second)).second) return false;
    }
  }
  for (const auto& t : p.triples()) {
    const long r = g.encode(e.phi[0].at(t[0])), c = g.encode(e.phi[1].at(t[1]));
    if (g.combine(r, c, 1) != g.encode(e.phi[2].at(t[2]))) return false;
  }
  return true;
}

std::optional<Embedding> embed_search(const PartialLatinSquare& p, const AbelianGroup& group) {
  const FiniteGroup g(group);
  EmbeddingSearch search(p, g);
  if (!search.run()) return std::nullopt;
  return Embedding{group, search.result()};
}

// ------------------------------------------------------------ triangulation

Triangulation triangulation_from_bitrade(const LatinBitrade& x) {
  if (!connectedness(x)) throw Error(ErrorKind::NotConnected, "bitrade has a proper sub-bitrade");
  if (!separation(x).separated) throw Error(ErrorKind::NotSeparated, "some line permutation has several cycles");
  const auto& w = x.W().triples();
  const auto& b = x.B().triples();
  const PairIndex wi(w), bi(b);
  Triangulation t;
  std::array<std::map<std::string, std::size_t>, 3> index;
  for (int k = 0; k < 3; ++k) {
    t.labels[k] = x.labels(k);
    for (std::size_t i = 0; i < t.labels[k].size(); ++i) index[k][t.labels[k][i]] = i;
  }
  auto indices = [&](const Triple& tr) {
    return std::array<std::size_t, 3>{index[0].at(tr[0]), index[1].at(tr[1]), index[2].at(tr[2])};
  };
  for (const auto& tr : w) t.white.push_back(indices(tr));
  for (const auto& tr : b) t.black.push_back(indices(tr));
  t.across.resize(b.size());
  for (std::size_t j = 0; j < b.size(); ++j)
    for (int k = 0; k < 3; ++k) t.across[j][k] = wi.find(b[j], k);

  // White (r,c,s) is counterclockwise. Around a vertex of class X the next
  // face after white face w is the black face sharing the side towards the
  // previous class, then the white face sharing the side towards the next class.
  for (int k = 0; k < 3; ++k) {
    const int next = (k + 1) % 3, prev = (k + 2) % 3;
    t.rotation[k].resize(t.labels[k].size());
    std::vector<bool> started(t.labels[k].size(), false);
    for (std::size_t s = 0; s < w.size(); ++s) {
      const std::size_t v = t.white[s][k];
      if (started[v]) continue;
      started[v] = true;
      std::size_t cur = s;
      do {
        t.rotation[k][v].push_back(FaceRef{false, cur});
        const std::size_t blk = bi.find(w[cur], next);
        t.rotation[k][v].push_back(FaceRef{true, blk});
        cur = wi.find(b[blk], prev);
      } while (cur != s);
    }
  }
  return t;
}

EmbeddingBitrade bitrade_from_embedding(const EmbeddedDigraph& e) {
  EmbeddingBitrade out{triangulation_from_embedding(e), std::nullopt};
  if (out.triangulation.underlying_graph_simple()) {
    auto w = out.triangulation.white_triples();
    auto b = out.triangulation.black_triples();
    if (validate_bitrade(w, b).valid) out.bitrade = LatinBitrade(std::move(w), std::move(b));
  }
  return out;
}

}  // namespace trinity
