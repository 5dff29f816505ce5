#include "trinity/families.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "trinity/digraph.hpp"
#include "trinity/error.hpp"

namespace trinity {

namespace {

std::string idx(const std::string& base, long i) { return base + std::to_string(i); }
std::string idx(const std::string& base, long i, long j) { return base + std::to_string(i) + "_" + std::to_string(j); }

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::InvalidArgument, what);
}

// Bidirectional bundles of parallel arcs drawn in the plane. Each vertex
// lists its bundle ends counterclockwise; the curves of a bundle appear in
// reverse order at the far end. Balanced bundles get a phase chosen so that
// every rotation alternates.
class BundleLayout {
 public:
  explicit BundleLayout(std::vector<std::string> vertices) : vertices_(std::move(vertices)) {
    for (std::size_t i = 0; i < vertices_.size(); ++i) pos_[vertices_[i]] = i;
    order_.resize(vertices_.size());
  }

  std::size_t bundle(const std::string& u, const std::string& v, long uv, long vu) {
    require(uv >= 0 && vu >= 0 && uv + vu >= 1 && std::abs(uv - vu) <= 1, "bundle " + u + "-" + v + " is unbalanced");
    bundles_.push_back({pos_.at(u), pos_.at(v), uv, vu});
    return bundles_.size() - 1;
  }

  void order(const std::string& v, const std::vector<std::size_t>& ends) { order_[pos_.at(v)] = ends; }

  EmbeddedDigraph realize() const {
    const std::size_t nb = bundles_.size();
    // Union-find with parity; node nb is the constant 0.
    std::vector<std::size_t> parent(nb + 1);
    std::vector<int> parity(nb + 1, 0);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
      int p = 0;
      while (parent[x] != x) p ^= parity[x], x = parent[x];
      return std::pair{x, p};
    };
    auto unite = [&](std::size_t a, std::size_t b, int rel, std::size_t v) {
      auto [ra, pa] = find(a);
      auto [rb, pb] = find(b);
      if (ra == rb) {
        require((pa ^ pb) == rel, "bundle layout cannot alternate at " + vertices_[v]);
        return;
      }
      if (ra == nb) std::swap(ra, rb), std::swap(pa, pb);
      parent[ra] = rb;
      parity[ra] = pa ^ pb ^ rel;
    };
    // Direction terms (node, offset): value 1 means an outgoing end.
    auto first_term = [&](std::size_t b, std::size_t v) -> std::pair<std::size_t, int> {
      const auto& bd = bundles_[b];
      if (bd.uv == bd.vu) return {b, 1};
      const bool majority_out = (bd.uv > bd.vu) == (v == bd.u);
      return {nb, majority_out ? 1 : 0};
    };
    auto last_term = [&](std::size_t b, std::size_t v) {
      auto t = first_term(b, v);
      if (bundles_[b].uv == bundles_[b].vu) t.second ^= 1;
      return t;
    };
    for (std::size_t v = 0; v < vertices_.size(); ++v) {
      const auto& ends = order_[v];
      for (std::size_t e : ends)
        require(bundles_[e].u == v || bundles_[e].v == v, "bundle end listed at a foreign vertex " + vertices_[v]);
      for (std::size_t k = 0; k < ends.size(); ++k) {
        auto [na, oa] = last_term(ends[k], v);
        auto [nb2, ob] = first_term(ends[(k + 1) % ends.size()], v);
        unite(na, nb2, oa ^ ob ^ 1, v);
      }
    }

    MultiDigraph d;
    for (const auto& label : vertices_) d.add_vertex(label);
    // Arcs of each bundle in counterclockwise order at u, flagged outgoing-from-u.
    std::vector<std::vector<ArcEnd>> at_u(nb);
    for (std::size_t b = 0; b < nb; ++b) {
      const auto& bd = bundles_[b];
      bool out;
      if (bd.uv == bd.vu) {
        // Roots take phase 0, so the first curve is outgoing iff the parity is 0.
        out = find(b).second == 0;
      } else {
        out = bd.uv > bd.vu;
      }
      for (long i = 0; i < bd.uv + bd.vu; ++i, out = !out) {
        const int id = out ? d.add_arc(bd.u, bd.v) : d.add_arc(bd.v, bd.u);
        at_u[b].push_back(ArcEnd{id, out});
      }
    }
    std::vector<std::vector<ArcEnd>> rotation(vertices_.size());
    for (std::size_t v = 0; v < vertices_.size(); ++v)
      for (std::size_t b : order_[v]) {
        if (bundles_[b].u == v) {
          rotation[v].insert(rotation[v].end(), at_u[b].begin(), at_u[b].end());
        } else {
          for (auto it = at_u[b].rbegin(); it != at_u[b].rend(); ++it) rotation[v].push_back(ArcEnd{it->arc, !it->outgoing});
        }
      }
    return EmbeddedDigraph(std::move(d), std::move(rotation));
  }

 private:
  struct Bundle {
    std::size_t u, v;
    long uv, vu;
  };
  std::vector<std::string> vertices_;
  std::map<std::string, std::size_t> pos_;
  std::vector<Bundle> bundles_;
  std::vector<std::vector<std::size_t>> order_;
};

std::vector<ArcSpec> arc_specs(const MultiDigraph& d) {
  std::vector<ArcSpec> specs;
  for (const auto& a : d.arcs()) specs.push_back({a.id, d.label(a.tail), d.label(a.head)});
  return specs;
}

// Reroutes arc a: u -> v through a new vertex x: p arcs u -> x and p - 1
// arcs x -> u take the place of a at u, and a then runs x -> v.
EmbeddedDigraph splice(const EmbeddedDigraph& e, int arc, const std::string& x, long p) {
  const auto& d = e.digraph();
  const Arc& old = d.arc_by_id(arc);
  const std::string u = d.label(old.tail);
  auto vertices = d.vertices();
  vertices.push_back(x);
  auto specs = arc_specs(d);
  specs[d.arc_index(arc)].tail = x;
  int next = 0;
  for (const auto& a : d.arcs()) next = std::max(next, a.id + 1);
  std::vector<ArcEnd> fan;  // counterclockwise at u
  for (long k = 0; k < p; ++k) {
    specs.push_back({next, u, x});
    fan.push_back(ArcEnd{next++, true});
    if (k + 1 < p) {
      specs.push_back({next, x, u});
      fan.push_back(ArcEnd{next++, false});
    }
  }
  auto rotation = e.rotation();
  auto& ru = rotation[old.tail];
  auto it = std::find(ru.begin(), ru.end(), ArcEnd{arc, true});
  it = ru.erase(it);
  ru.insert(it, fan.begin(), fan.end());
  std::vector<ArcEnd> rx;
  for (auto f = fan.rbegin(); f != fan.rend(); ++f) rx.push_back(ArcEnd{f->arc, !f->outgoing});
  rx.push_back(ArcEnd{arc, true});
  rotation.push_back(std::move(rx));
  return EmbeddedDigraph(MultiDigraph(vertices, specs), std::move(rotation));
}

EmbeddedDigraph with_vertex_order(const EmbeddedDigraph& e, const std::vector<std::string>& order) {
  const auto& d = e.digraph();
  require(order.size() == d.vertex_count(), "vertex order has the wrong length");
  std::vector<std::vector<ArcEnd>> rotation;
  for (const auto& label : order) rotation.push_back(e.rotation_at(d.vertex_index(label)));
  return EmbeddedDigraph(MultiDigraph(order, arc_specs(d)), std::move(rotation));
}

// First arc (by id) from `tail` to `head` that has not been used yet.
int pick_arc(const MultiDigraph& d, const std::string& tail, const std::string& head, std::vector<bool>& used) {
  const std::size_t t = d.vertex_index(tail), h = d.vertex_index(head);
  for (std::size_t i = 0; i < d.arc_count(); ++i)
    if (!used[i] && d.arcs()[i].tail == t && d.arcs()[i].head == h) {
      used[i] = true;
      return d.arcs()[i].id;
    }
  throw Error(ErrorKind::InvalidArgument, "no spare arc " + tail + " -> " + head);
}

EmbeddedDigraph composites_embedding(long m, const std::vector<long>& a, int& extra_alpha0_gamma1) {
  const long k = static_cast<long>(a.size());
  std::vector<std::string> vertices;
  for (long i = k; i >= 1; --i) vertices.push_back(idx("alpha", i)), vertices.push_back(idx("gamma", i));
  vertices.push_back("alpha0");
  BundleLayout L(vertices);
  std::vector<std::size_t> ag(k + 1), prev(k + 1), pa(k + 1), pg(k + 1);
  for (long i = 1; i <= k; ++i) {
    ag[i] = L.bundle(idx("alpha", i), idx("gamma", i), m - 1, m - 1);
    prev[i] = L.bundle(idx("alpha", i - 1), idx("gamma", i), a[i - 1] - 1, a[i - 1] - 1);
    pa[i] = L.bundle(idx("alpha", i), idx("alpha", i - 1), 1, 0);
  }
  for (long i = 1; i < k; ++i) pg[i] = L.bundle(idx("gamma", i), idx("gamma", i + 1), 1, 0);
  const std::size_t x0 = L.bundle("alpha0", "gamma1", 1, 0);
  const std::size_t xk = L.bundle(idx("gamma", k), idx("alpha", k), 1, 0);
  for (long i = 1; i <= k; ++i)
    L.order(idx("gamma", i), {i < k ? pg[i] : xk, i > 1 ? pg[i - 1] : x0, prev[i], ag[i]});
  for (long i = 1; i < k; ++i) L.order(idx("alpha", i), {pa[i + 1], prev[i + 1], ag[i], pa[i]});
  L.order(idx("alpha", k), {xk, ag[k], pa[k]});
  L.order("alpha0", {pa[1], prev[1], x0});
  auto e = L.realize();
  // The extra alpha0 -> gamma1 arc is the only single-arc bundle between them.
  const auto& d = e.digraph();
  const auto& r0 = e.rotation_at(d.vertex_index("alpha0"));
  extra_alpha0_gamma1 = r0.back().arc;
  return e;
}

AbelianGroup composites_group(long m, const std::vector<long>& a, long extra_p, long n) {
  std::vector<Integer> orders;
  for (long ai : a) orders.emplace_back(m * ai);
  for (long i = 0; i < n; ++i) orders.emplace_back(extra_p);
  return group_from_cyclic_orders(orders);
}

AbelianGroup square_cyclic(long t) { return group_from_cyclic_orders(std::vector<Integer>{Integer(t), Integer(t)}); }

std::string join(const std::vector<long>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s;
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long q = 2; q * q <= n; ++q)
    if (n % q == 0) return false;
  return true;
}

long smallest_prime_factor(long n) {
  for (long q = 2; q * q <= n; ++q)
    if (n % q == 0) return q;
  return n;
}

}  // namespace

std::string FamilyInstance::name() const { return family + "(" + join(params) + ")"; }

FamilyCheck verify_instance(const FamilyInstance& f, bool with_audit) {
  FamilyCheck c;
  const auto& d = f.embedded.digraph();
  if (with_audit) {
    const auto rep = audit(d);
    c.audit_ok = rep.prop_simple_ok;
    if (!rep.connected) c.problems.push_back("not connected");
    if (rep.has_loops) c.problems.push_back("has loops");
    if (!rep.cut_vertices.empty()) c.problems.push_back("cut vertex " + *rep.cut_vertices.begin());
    if (!rep.two_edge_cuts.empty()) c.problems.push_back("underlying 2-edge cut");
  } else {
    c.audit_ok = true;
  }
  c.spherical_ok = is_directed_eulerian_spherical(f.embedded);
  if (!c.spherical_ok) {
    const auto faces = trace_faces(f.embedded);
    c.problems.push_back("embedding not directed spherical (genus " + std::to_string(faces.genus) +
                         (faces.all_directed ? "" : ", undirected face") + ")");
  }
  try {
    c.computed = sandpile_group(d);
    c.group_ok = c.computed == f.expected_group;
    if (!c.group_ok)
      c.problems.push_back("group " + c.computed.to_string() + " != expected " + f.expected_group.to_string());
  } catch (const Error& e) {
    c.problems.push_back(e.what());
  }
  return c;
}

FamilyInstance build_composites(long m, const std::vector<long>& a) {
  require(m >= 2, "composites: m must be >= 2");
  require(!a.empty(), "composites: need k >= 1 parameters a_i");
  for (long ai : a) require(ai >= 2, "composites: every a_i must be >= 2");
  int extra = 0;
  std::vector<long> params{m};
  params.insert(params.end(), a.begin(), a.end());
  return {"composites", params, composites_embedding(m, a, extra), composites_group(m, a, 0, 0)};
}

FamilyInstance build_primes(long p, const std::vector<long>& a, long n) {
  require(p >= 2, "primes: p must be >= 2");
  require(!a.empty(), "primes: need k >= 1 parameters a_i");
  long bound = 1;
  for (long ai : a) require(ai >= 2, "primes: every a_i must be >= 2"), bound += 2 * (ai - 1);
  require(n >= 0 && n <= bound, "primes: n must satisfy 0 <= n <= 1+2*sum(a_i-1) = " + std::to_string(bound));
  std::vector<long> params{p, n};
  params.insert(params.end(), a.begin(), a.end());
  int extra = 0;
  auto e = composites_embedding(p, a, extra);
  const long k = static_cast<long>(a.size());
  if (n > 0) {
    // n = 1 + 2 * sum_{i <= k'} (a_i - 1) + t with 0 <= t <= 2(a_{k'+1} - 1).
    std::vector<long> dcount(k + 1, 0), ecount(k + 1, 0);
    long rest = n - 1;
    for (long i = 1; i <= k && rest > 0; ++i) {
      const long full = 2 * (a[i - 1] - 1);
      const long t = std::min(rest, full);
      dcount[i] = (t + 1) / 2;
      ecount[i] = t / 2;
      rest -= t;
    }
    const auto& d0 = e.digraph();
    std::vector<bool> used(d0.arc_count(), false);
    used[d0.arc_index(extra)] = true;  // reserved for epsilon1_0
    std::vector<std::pair<int, std::string>> plan;  // arc to splice, new vertex
    for (long i = 1; i <= k; ++i) {
      for (long j = 1; j <= dcount[i]; ++j)
        plan.emplace_back(pick_arc(d0, idx("gamma", i), idx("alpha", i - 1), used), idx("delta", i, j));
      for (long j = 1; j <= ecount[i]; ++j)
        plan.emplace_back(pick_arc(d0, idx("alpha", i - 1), idx("gamma", i), used), idx("epsilon", i, j));
    }
    plan.emplace_back(extra, "epsilon1_0");
    for (const auto& [arc, vertex] : plan) e = splice(e, arc, vertex, p);

    std::vector<std::string> order;
    for (long i = k; i >= 1; --i) {
      order.push_back(idx("alpha", i));
      order.push_back(idx("gamma", i));
      for (long j = dcount[i]; j >= 1; --j) order.push_back(idx("delta", i, j));
      for (long j = ecount[i]; j >= 1; --j) order.push_back(idx("epsilon", i, j));
      if (i == 1) order.push_back("epsilon1_0");
    }
    order.push_back("alpha0");
    e = with_vertex_order(e, order);
  }
  return {"primes", params, std::move(e), composites_group(p, a, p, n)};
}

FamilyInstance build_abc(long a, long b, long c) {
  require(a >= 1 && b >= 1 && c >= 1, "abc: a, b, c must be >= 1");
  std::vector<std::string> vertices;
  for (long i = 1; i <= c; ++i) vertices.push_back(idx("gamma", i));
  for (long i = 1; i <= b; ++i) vertices.push_back(idx("beta", i));
  for (long i = 1; i <= a; ++i) vertices.push_back(idx("alpha", i));
  vertices.push_back("delta");
  BundleLayout L(vertices);
  const std::string A = idx("alpha", a), B = idx("beta", b), C = idx("gamma", c);
  // path[i] joins vertex i-1 (delta for i = 1) to vertex i.
  auto path = [&](const std::string& base, long len) {
    std::vector<std::size_t> ids(len + 1);
    for (long i = 1; i <= len; ++i) ids[i] = L.bundle(i == 1 ? "delta" : idx(base, i - 1), idx(base, i), 1, 1);
    for (long i = 1; i < len; ++i) L.order(idx(base, i), {ids[i], ids[i + 1]});
    return ids;
  };
  const auto pa = path("alpha", a), pb = path("beta", b), pc = path("gamma", c);
  const std::size_t bc = L.bundle(B, C, a, a), ac = L.bundle(A, C, b, b), ab = L.bundle(A, B, c, c);
  L.order("delta", {pa[1], pb[1], pc[1]});
  L.order(A, {ab, pa[a], ac});
  L.order(B, {bc, pb[b], ab});
  L.order(C, {ac, pc[c], bc});
  return {"abc", {a, b, c}, L.realize(), square_cyclic(a * b + b * c + c * a + 1)};
}

FamilyInstance build_fig5(long m) {
  require(m >= 1, "fig5: m must be >= 1");
  std::vector<std::string> vertices{"b", "c", "d", "e", "f"};
  for (long i = 1; i <= m; ++i) vertices.push_back(idx("alpha", i));
  BundleLayout L(vertices);
  const std::string am = idx("alpha", m);
  const auto fc = L.bundle("f", "c", 1, 1), bc = L.bundle("b", "c", 1, 1), bd = L.bundle("b", "d", m, m),
             bf = L.bundle("b", "f", 1, 1), df = L.bundle("d", "f", 1, 1), de = L.bundle("d", "e", 1, 1),
             ef = L.bundle("e", "f", 1, 1), ca = L.bundle("c", am, 1, 1), ea = L.bundle("e", am, 1, 1);
  // path[i] joins alpha_{i-1} (f for i = 1) to alpha_i.
  std::vector<std::size_t> path(m + 1);
  for (long i = 1; i <= m; ++i) path[i] = L.bundle(i == 1 ? "f" : idx("alpha", i - 1), idx("alpha", i), 1, 1);
  L.order("f", {path[1], fc, bf, df, ef});
  L.order("b", {bc, bd, bf});
  L.order("c", {bc, fc, ca});
  L.order("d", {df, bd, de});
  L.order("e", {ea, ef, de});
  for (long i = 1; i < m; ++i) L.order(idx("alpha", i), {path[i], path[i + 1]});
  L.order(am, {ca, path[m], ea});
  return {"fig5", {m}, L.realize(), square_cyclic(6 * m + 5)};
}

FamilyInstance build_fig6(long m) {
  require(m >= 1, "fig6: m must be >= 1");
  BundleLayout L({"a", "b", "c", "d"});
  const auto ab = L.bundle("a", "b", 1, 1), ac = L.bundle("a", "c", 1, 1), ad = L.bundle("a", "d", 1, 1);
  const auto bc = L.bundle("b", "c", m, m), dc = L.bundle("d", "c", m, m), db = L.bundle("d", "b", m, m);
  L.order("a", {ac, ad, ab});
  L.order("b", {bc, ab, db});
  L.order("c", {dc, ac, bc});
  L.order("d", {db, ad, dc});
  return {"fig6", {m}, L.realize(), square_cyclic(3 * m + 1)};
}

FamilyInstance build_cyclic_dipole(long n) {
  require(n >= 2, "dipole: N must be >= 2");
  BundleLayout L({"u", "v"});
  const auto uv = L.bundle("u", "v", n, n);
  L.order("u", {uv});
  L.order("v", {uv});
  return {"dipole", {n}, L.realize(), group_from_cyclic_orders(std::vector<Integer>{Integer(n)})};
}

FamilyInstance build_family(const std::string& family, const std::vector<long>& params) {
  auto need = [&](std::size_t count) {
    require(params.size() == count, family + ": expected " + std::to_string(count) + " parameters");
  };
  if (family == "composites") {
    require(params.size() >= 2, "composites: expected m a_1 [a_2 ...]");
    return build_composites(params[0], {params.begin() + 1, params.end()});
  }
  if (family == "primes") {
    require(params.size() >= 3, "primes: expected p n a_1 [a_2 ...]");
    return build_primes(params[0], {params.begin() + 2, params.end()}, params[1]);
  }
  if (family == "abc") return need(3), build_abc(params[0], params[1], params[2]);
  if (family == "fig5") return need(1), build_fig5(params[0]);
  if (family == "fig6") return need(1), build_fig6(params[0]);
  if (family == "dipole") return need(1), build_cyclic_dipole(params[0]);
  throw Error(ErrorKind::InvalidArgument, "unknown family " + family);
}

std::optional<std::array<long, 3>> represent_abc(long t) {
  if (t < 2) return std::nullopt;
  for (long a = 1; 3 * a * a + 1 <= t; ++a)
    for (long b = a; a * b + (a + b) * b + 1 <= t; ++b) {
      const long rest = t - 1 - a * b;
      if (rest % (a + b) == 0 && rest / (a + b) >= b) return std::array<long, 3>{a, b, rest / (a + b)};
    }
  return std::nullopt;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Construct: return "Construct";
    case Verdict::NonExistent: return "NonExistent";
    case Verdict::Unknown: return "Unknown";
  }
  return "?";
}

Plan plan_group(const AbelianGroup& g) {
  if (!g.is_finite()) throw Error(ErrorKind::InfiniteGroup, "planner needs a finite group");
  if (g.is_trivial()) throw Error(ErrorKind::InvalidArgument, "planner needs a nontrivial group");
  Plan plan;
  std::vector<long> d;
  for (const auto& f : g.invariant_factors()) {
    if (!f.fits_slong_p() || f > 1000000000L) {
      plan.notes = "invariant factor too large for the planner";
      return plan;
    }
    d.push_back(f.get_si());
  }
  const std::size_t k = d.size();

  auto construct = [&](Recipe r, std::string notes) {
    plan.recipe = r;
    plan.notes = std::move(notes);
    FamilyInstance f = build_family(r.family, r.params);
    const FamilyCheck c = verify_instance(f, f.embedded.digraph().arc_count() <= 400);
    if (c.ok() && c.computed == g) {
      plan.verdict = Verdict::Construct;
      plan.instance = std::move(f);
    } else {
      plan.verdict = Verdict::Unknown;
      plan.notes += "; construction failed verification: " +
                    (c.problems.empty() ? std::string("group mismatch") : c.problems.front());
    }
    return plan;
  };

  if (k == 1) return construct({"dipole", {d[0]}}, "cyclic group: dipole with N arcs each way");

  if (k == 2 && d[0] == d[1])
    if (auto abc = represent_abc(d[0]))
      return construct({"abc", {(*abc)[0], (*abc)[1], (*abc)[2]}}, "Z_t + Z_t with t = ab + bc + ca + 1");

  if (!is_prime(d[0])) {
    const long p = smallest_prime_factor(d[0]);
    std::vector<long> params{p};
    for (long x : d) params.push_back(x / p);
    return construct({"composites", params}, "all invariant factors composite: D_{p;a} with p = " + std::to_string(p));
  }

  const long p = d[0];
  long n = 0, bound = 1;
  std::vector<long> a;
  for (long x : d) {
    if (x == p) ++n;
    else a.push_back(x / p), bound += 2 * (x / p - 1);
  }
  if (!a.empty() && n <= bound) {
    std::vector<long> params{p, n};
    params.insert(params.end(), a.begin(), a.end());
    return construct({"primes", params}, "Z_p^n + sum Z_{p a_i} with n <= 1 + 2 sum(a_i - 1)");
  }

  if (k == 2 && d[0] == d[1]) {
    const long t = d[0];
    if (t == 2) {
      plan.verdict = Verdict::NonExistent;
      plan.notes = "no spherical latin bitrade has canonical group Z_2 + Z_2";
      return plan;
    }
    if (t == 3 || t == 5) {
      plan.notes = "Z_t + Z_t with t in {3,5}: may or may not exist";
      return plan;
    }
    static const long exceptions[] = {7, 11, 19, 23, 31, 43, 59, 71, 79, 103, 131, 191, 211, 331, 463};
    if (std::find(std::begin(exceptions), std::end(exceptions), t) != std::end(exceptions)) {
      if (t % 6 == 5) return construct({"fig5", {(t - 5) / 6}}, "t = 6m + 5 not of the form ab+bc+ca+1");
      return construct({"fig6", {(t - 1) / 3}}, "t = 3m + 1 not of the form ab+bc+ca+1");
    }
    plan.notes = "t is not of the form ab+bc+ca+1 and not a listed exception; "
                 "such t exceeds 10^11 and its existence is conditional on the Generalised Riemann Hypothesis";
    return plan;
  }

  if (p == 2 && a.empty() && n >= 2) {
    plan.verdict = Verdict::NonExistent;
    plan.notes = "no spherical latin bitrade has canonical group Z_2^k for k >= 2";
    return plan;
  }

  plan.notes = "no known construction for this group";
  return plan;
}

FixturePair build_reduction_fixture(FixtureKind kind, const FixtureParams& q) {
  if (kind == FixtureKind::PrimeComps) {
    require(q.p >= 2 && q.a >= 2, "prime+comps fixture needs p, a >= 2");
    require(q.x >= 0 && q.y >= 0, "prime+comps fixture needs x, y >= 0");
    const bool empty = q.block.rows() == 0;
    require(empty || q.block.rows() >= 2, "prime+comps trailing block needs at least two rows");
    const long p = q.p, a = q.a, x = q.x, y = q.y;
    const std::size_t m = empty ? 2 : q.block.rows();
    const std::size_t l = empty ? 0 : q.block.cols();
    const std::size_t X = x, Y = y;
    const std::size_t z = 2 + X + Y;  // the column after the identity blocks
    const std::size_t rows = 2 + X + Y + m, cols = 3 + X + Y + l;
    const std::size_t t1 = 2 + X + Y, t2 = t1 + 1;
    const long r = p * (x + 1) + a - x - 1, s = p * (y + 1) + a - y - 1;
    IntMatrix before(rows, cols), after(rows, cols);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < l; ++j) {
        before(t1 + i, z + 1 + j) = q.block(i, j);
        after(t1 + i, z + 1 + j) = q.block(i, j);
      }
    before(0, 0) = p;
    before(0, 1) = -p + 1;
    before(0, z) = -1;
    before(1, 0) = -p;
    before(1, 1) = r;
    for (std::size_t i = 0; i < X; ++i) before(1, 2 + i) = -p;
    before(1, z) = x + 1 - a;
    for (std::size_t i = 0; i < X; ++i) {
      before(2 + i, 1) = -p + 1;
      before(2 + i, 2 + i) = p;
      before(2 + i, z) = -1;
    }
    for (std::size_t j = 0; j < Y; ++j) {
      before(2 + X + j, 1) = -1;
      before(2 + X + j, 2 + X + j) = p;
      before(2 + X + j, z) = -p + 1;
    }
    before(t1, 1) = y + 1 - a;
    for (std::size_t j = 0; j < Y; ++j) before(t1, 2 + X + j) = -p;
    before(t1, z) = s;
    before(t2, 1) = -1;
    before(t2, z) = -p + 1;

    after(0, 0) = 1;
    after(1, 1) = a * p;
    for (std::size_t i = 0; i < X + Y; ++i) after(2 + i, 2 + i) = p;
    after(t1, z) = p;
    after(t2, z) = -p;
    return {before, after};
  }

  require(q.d >= 2, "121 fixture needs d >= 2");
  require(q.block.rows() >= 1 && q.block.cols() >= 2, "121 fixture needs an x by y block with x >= 1, y >= 2");
  const std::size_t d = q.d, x = q.block.rows(), y = q.block.cols();
  const std::size_t rows = d - 1 + x, cols = d + y - 2;
  IntMatrix before(rows, cols), after(rows, cols);
  for (std::size_t i = 0; i + 1 < d; ++i) {
    before(i, i) = 2;
    if (i > 0) before(i, i - 1) = -1;
    before(i, i + 1) = -1;
  }
  for (std::size_t i = 0; i + 2 < d; ++i) after(i, i) = 1;
  after(d - 2, d - 2) = static_cast<long>(d);
  after(d - 2, d - 1) = 1 - static_cast<long>(d);
  for (std::size_t i = 0; i < x; ++i)
    for (std::size_t j = 0; j < y; ++j) {
      before(d - 1 + i, d - 2 + j) = q.block(i, j);
      after(d - 1 + i, d - 2 + j) = q.block(i, j);
    }
  return {before, after};
}

}  // namespace trinity
