// Acceptance suite: one PASS/FAIL line per criterion, each with its time limit.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "trinity/digraph.hpp"
#include "trinity/families.hpp"
#include "trinity/latin.hpp"
#include "trinity/verify.hpp"
#include "trinity/zlinalg.hpp"

using namespace trinity;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& what) {
    if (ok) detail = what;
    ok = false;
  }
};

std::vector<std::vector<long>> sequences_over(const std::vector<long>& values, std::size_t max_len) {
  std::vector<std::vector<long>> all, frontier{{}};
  for (std::size_t k = 0; k < max_len; ++k) {
    std::vector<std::vector<long>> next;
    for (const auto& s : frontier)
      for (long v : values) {
        auto t = s;
        t.push_back(v);
        next.push_back(t);
        all.push_back(t);
      }
    frontier = std::move(next);
  }
  return all;
}

AbelianGroup expected_sum(long p, long n, long m, const std::vector<long>& a) {
  std::vector<Integer> orders(n, Integer(p));
  for (long x : a) orders.emplace_back(m * x);
  return group_from_cyclic_orders(orders);
}

void expect_group(Outcome& o, const FamilyInstance& f, const AbelianGroup& want) {
  const AbelianGroup got = sandpile_group(f.embedded.digraph());
  if (got != want) o.fail(f.name() + ": got " + got.to_string() + ", want " + want.to_string());
}

// Instances of criteria 1-4, shared by criteria 5 and 6.
std::vector<FamilyInstance> criterion1_instances() {
  std::vector<FamilyInstance> out;
  for (long m = 2; m <= 5; ++m)
    for (const auto& a : sequences_over({2, 3, 4}, 4)) out.push_back(build_composites(m, a));
  return out;
}

std::vector<std::vector<long>> criterion2_sequences() {
  std::vector<std::vector<long>> out;
  for (const auto& a : sequences_over({2, 3, 4, 5}, 4)) {
    long s = 0;
    for (long x : a) s += x - 1;
    if (s <= 4) out.push_back(a);
  }
  return out;
}

std::vector<FamilyInstance> criterion2_instances() {
  std::vector<FamilyInstance> out;
  for (long p : {2, 3, 5})
    for (const auto& a : criterion2_sequences()) {
      long bound = 1;
      for (long x : a) bound += 2 * (x - 1);
      for (long n = 0; n <= bound; ++n) out.push_back(build_primes(p, a, n));
    }
  return out;
}

std::vector<FamilyInstance> criterion3_instances() {
  std::vector<FamilyInstance> out;
  for (long a = 1; a <= 4; ++a)
    for (long b = a; b <= 4; ++b)
      for (long c = b; c <= 4; ++c) out.push_back(build_abc(a, b, c));
  return out;
}

std::vector<FamilyInstance> criterion4_instances() {
  std::vector<FamilyInstance> out;
  for (long m = 1; m <= 10; ++m) out.push_back(build_fig5(m)), out.push_back(build_fig6(m));
  return out;
}

Outcome criterion1() {
  Outcome o;
  const auto all = criterion1_instances();
  for (const auto& f : all) {
    std::vector<long> a = f.params;
    const long m = a.front();
    a.erase(a.begin());
    expect_group(o, f, expected_sum(1, 0, m, a));
  }
  o.detail = o.ok ? std::to_string(all.size()) + " instances" : o.detail;
  return o;
}

Outcome criterion2() {
  Outcome o;
  std::size_t count = 0;
  for (long p : {2, 3, 5})
    for (const auto& a : criterion2_sequences()) {
      long bound = 1;
      for (long x : a) bound += 2 * (x - 1);
      for (long n = 0; n <= bound; ++n, ++count) expect_group(o, build_primes(p, a, n), expected_sum(p, n, p, a));
    }
  o.detail = o.ok ? std::to_string(count) + " instances" : o.detail;
  return o;
}

Outcome criterion3() {
  Outcome o;
  const auto all = criterion3_instances();
  for (const auto& f : all) {
    const long a = f.params[0], b = f.params[1], c = f.params[2], t = a * b + b * c + c * a + 1;
    expect_group(o, f, group_from_cyclic_orders({t, t}));
  }
  const auto k4 = build_abc(1, 1, 1).embedded.digraph();
  const IntMatrix l = reduced_laplacian(k4, "delta");
  if (!(l == IntMatrix{{3, -1, -1}, {-1, 3, -1}, {-1, -1, 3}})) o.fail("D_{1,1,1} reduced Laplacian differs");
  if (smith_diagonal(l) != std::vector<Integer>{1, 4, 4}) o.fail("D_{1,1,1} does not reduce to diag(1,4,4)");
  o.detail = o.ok ? std::to_string(all.size()) + " instances, (1,1,1) -> diag(1,4,4)" : o.detail;
  return o;
}

// Spanning trees of the underlying simple graph by subset enumeration.
long spanning_trees_simple(const MultiDigraph& d) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& a : d.arcs()) {
    auto e = std::minmax(a.tail, a.head);
    if (std::find(edges.begin(), edges.end(), std::pair{e.first, e.second}) == edges.end())
      edges.push_back({e.first, e.second});
  }
  const std::size_t n = d.vertex_count();
  long trees = 0;
  for (unsigned mask = 0; mask < (1u << edges.size()); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != n - 1) continue;
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
      return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    bool acyclic = true;
    for (std::size_t i = 0; i < edges.size() && acyclic; ++i)
      if (mask >> i & 1) {
        const auto a = find(edges[i].first), b = find(edges[i].second);
        if (a == b) acyclic = false;
        parent[a] = b;
      }
    trees += acyclic;
  }
  return trees;
}

Outcome criterion4() {
  Outcome o;
  for (long m = 1; m <= 10; ++m) {
    expect_group(o, build_fig6(m), group_from_cyclic_orders({3 * m + 1, 3 * m + 1}));
    expect_group(o, build_fig5(m), group_from_cyclic_orders({6 * m + 5, 6 * m + 5}));
  }
  const auto k4 = build_fig6(1).embedded.digraph();
  bool bidirected_k4 = k4.vertex_count() == 4 && k4.arc_count() == 12;
  for (std::size_t u = 0; u < 4; ++u)
    for (std::size_t v = 0; v < 4; ++v) {
      long n = 0;
      for (const auto& a : k4.arcs()) n += a.tail == u && a.head == v;
      bidirected_k4 = bidirected_k4 && n == (u == v ? 0 : 1);
    }
  if (!bidirected_k4) o.fail("fig6(1) is not the bidirected K4");
  const long trees = spanning_trees_simple(k4);
  if (trees != 16 || sandpile_group(k4).torsion_order() != trees)
    o.fail("fig6(1): " + std::to_string(trees) + " spanning trees");
  o.detail = o.ok ? "m = 1..10; fig6(1) = K4 with 16 spanning trees" : o.detail;
  return o;
}

Outcome criterion5() {
  Outcome o;
  std::size_t count = 0;
  for (auto* build : {&criterion1_instances, &criterion2_instances, &criterion3_instances, &criterion4_instances})
    for (const auto& f : build()) {
      ++count;
      const auto r = audit(f.embedded.digraph());
      if (!r.prop_simple_ok) o.fail(f.name() + ": audit fails");
      const auto faces = trace_faces(f.embedded);
      if (faces.genus != 0 || !faces.all_directed) o.fail(f.name() + ": rotation is not directed spherical");
    }
  o.detail = o.ok ? std::to_string(count) + " instances audited" : o.detail;
  return o;
}

Outcome criterion6() {
  Outcome o;
  std::vector<FamilyInstance> pool;
  for (auto* build : {&criterion1_instances, &criterion2_instances, &criterion3_instances, &criterion4_instances})
    for (auto& f : build()) pool.push_back(std::move(f));
  std::mt19937 rng(2024);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (int i = 0; i < 20; ++i) {
    const auto r = check_removed_vertex_invariance(pool[pick(rng)]);
    if (!r.passed) o.fail(r.name + ": " + r.detail);
  }
  o.detail = o.ok ? "20 random instances, every removed vertex" : o.detail;
  return o;
}

Outcome criterion7() {
  Outcome o;
  const auto result = enumerate_spherical_bitrades(8);
  for (const auto& x : result.bitrades) {
    const auto t = check_trinity(x);
    if (!t.passed) o.fail("trinity: " + t.detail);
    const auto r = check_roundtrip(x);
    if (!r.passed) o.fail("round trip: " + r.detail);
  }
  o.detail = o.ok ? std::to_string(result.bitrades.size()) + " bitrades" : o.detail;
  return o;
}

Outcome criterion8() {
  Outcome o;
  const auto result = enumerate_spherical_bitrades(8);
  if (result.bitrades.empty()) o.fail("enumeration is empty");
  if (result.group_tally.count(group_from_cyclic_orders({2, 2}))) o.fail("found Z/2 + Z/2");
  for (const auto& x : result.bitrades) {
    const auto g = canonical_group(x.W()).group.torsion();
    for (const auto* half : {&x.W(), &x.B()}) {
      const auto e = embed_search(*half, g);
      if (!e || !check_embedding(*half, *e)) o.fail("no embedding into " + g.to_string());
    }
  }
  o.detail = o.ok ? std::to_string(result.bitrades.size()) + " bitrades, no Z/2 + Z/2, all embed" : o.detail;
  return o;
}

// d_k = gcd of all k x k minors; diagonal entry k is d_k / d_{k-1}.
std::vector<Integer> minor_gcd_diagonal(const IntMatrix& a) {
  const std::size_t r = std::min(a.rows(), a.cols());
  std::vector<Integer> out;
  Integer prev = 1;
  for (std::size_t k = 1; k <= r; ++k) {
    Integer g = 0;
    std::vector<std::size_t> rows(k), cols(k);
    std::function<void(std::size_t, std::size_t)> pick_cols;
    std::function<void(std::size_t, std::size_t)> pick_rows = [&](std::size_t i, std::size_t from) {
      if (i == k) return pick_cols(0, 0);
      for (std::size_t x = from; x < a.rows(); ++x) rows[i] = x, pick_rows(i + 1, x + 1);
    };
    pick_cols = [&](std::size_t j, std::size_t from) {
      if (j == k) {
        g = gcd(g, determinant(a.submatrix(rows, cols)));
        return;
      }
      for (std::size_t y = from; y < a.cols(); ++y) cols[j] = y, pick_cols(j + 1, y + 1);
    };
    pick_rows(0, 0);
    out.push_back(prev == 0 ? Integer(0) : Integer(g / prev));
    prev = g;
  }
  return out;
}

Outcome criterion9() {
  Outcome o;
  std::mt19937 rng(9);
  std::uniform_int_distribution<long> dim(1, 6), entry(-9, 9);
  for (int i = 0; i < 500; ++i) {
    IntMatrix a(dim(rng), dim(rng));
    for (std::size_t r = 0; r < a.rows(); ++r)
      for (std::size_t c = 0; c < a.cols(); ++c) a(r, c) = entry(rng);
    const SnfResult s = snf(a);
    if (!(s.U * a * s.V == s.S)) o.fail("U A V != S for " + a.to_string());
    std::vector<Integer> diag;
    for (std::size_t k = 0; k < std::min(a.rows(), a.cols()); ++k) diag.push_back(s.S(k, k));
    if (diag != minor_gcd_diagonal(a)) o.fail("diagonal differs from determinant divisors for " + a.to_string());
  }
  o.detail = o.ok ? "500 matrices" : o.detail;
  return o;
}

Outcome criterion10() {
  Outcome o;
  std::size_t constructed = 0;
  for (long d1 = 2; d1 <= 20; ++d1)
    for (long d2 = d1; d2 <= 20; d2 += d1) {
      const AbelianGroup g = group_from_cyclic_orders({d1, d2});
      const Plan p = plan_group(g);
      Verdict want = Verdict::Construct;
      if (d1 == 2 && d2 == 2) want = Verdict::NonExistent;
      if ((d1 == 3 && d2 == 3) || (d1 == 5 && d2 == 5)) want = Verdict::Unknown;
      if (p.verdict != want) {
        o.fail(g.to_string() + ": " + to_string(p.verdict) + ", want " + to_string(want));
        continue;
      }
      if (want != Verdict::Construct) continue;
      if (!p.instance || sandpile_group(p.instance->embedded.digraph()) != g ||
          !is_directed_eulerian_spherical(p.instance->embedded))
        o.fail(g.to_string() + ": instance does not verify");
      ++constructed;
    }
  o.detail = o.ok ? std::to_string(constructed) + " constructed, exceptions Z/2+Z/2, Z/3+Z/3, Z/5+Z/5" : o.detail;
  return o;
}

Outcome criterion11() {
  Outcome o;
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> entry(-5, 5);
  auto random_block = [&](std::size_t r, std::size_t c) {
    IntMatrix b(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) b(i, j) = entry(rng);
    return b;
  };
  std::size_t count = 0;
  auto check = [&](FixtureKind kind, const FixtureParams& q, const std::string& name) {
    const auto pair = build_reduction_fixture(kind, q);
    ++count;
    if (smith_diagonal(pair.before) != smith_diagonal(pair.after)) o.fail(name + " SNF differs");
  };
  for (long p : {2, 3, 5})
    for (long a = 2; a <= 4; ++a)
      for (long x = 0; x <= 2; ++x)
        for (long y = 0; y <= 2; ++y)
          for (auto [m, l] : {std::pair<std::size_t, std::size_t>{0, 0}, {2, 1}, {3, 2}, {4, 3}}) {
            FixtureParams q;
            q.p = p, q.a = a, q.x = x, q.y = y;
            q.block = random_block(m, l);
            check(FixtureKind::PrimeComps, q, "prime+comps");
          }
  for (long d = 2; d <= 7; ++d)
    for (std::size_t x = 1; x <= 3; ++x)
      for (std::size_t y = 2; y <= 4; ++y) {
        FixtureParams q;
        q.d = d;
        q.block = random_block(x, y);
        check(FixtureKind::OneTwoOne, q, "121 d=" + std::to_string(d));
      }
  o.detail = o.ok ? std::to_string(count) + " fixtures" : o.detail;
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    double limit_s;
    Outcome (*run)();
  };
  const std::vector<Criterion> criteria{
      {1, "composites groups", 10, criterion1},
      {2, "primes and composites groups", 30, criterion2},
      {3, "ab+bc+ca+1 groups", 5, criterion3},
      {4, "figure families", 5, criterion4},
      {5, "connectivity audit and spherical rotations", 60, criterion5},
      {6, "sandpile group independent of removed vertex", 30, criterion6},
      {7, "trinity and round trip, size <= 8", 120, criterion7},
      {8, "no Z/2+Z/2 and embeddings, size <= 8", 300, criterion8},
      {9, "SNF against determinant divisors", 30, criterion9},
      {10, "planner totality, d1 | d2 <= 20", 120, criterion10},
      {11, "reduction fixtures", 30, criterion11},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = s < c.limit_s;
    if (!in_time) o.fail("too slow");
    failures += !o.ok;
    std::printf("%s criterion %2d: %s (%.3f s, limit %.0f s) %s\n", o.ok ? "PASS" : "FAIL", c.id, c.title, s,
                c.limit_s, o.detail.c_str());
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
