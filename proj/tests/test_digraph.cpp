#include <doctest.h>

#include "trinity/digraph.hpp"
#include "trinity/error.hpp"
#include "trinity/families.hpp"

using namespace trinity;

namespace {

MultiDigraph dipole(int p) {
  MultiDigraph d;
  d.add_vertex("u");
  d.add_vertex("v");
  d.add_arcs(0, 1, p);
  d.add_arcs(1, 0, p);
  return d;
}

MultiDigraph bidirected(const std::vector<std::string>& vs, const std::vector<std::pair<int, int>>& edges) {
  MultiDigraph d;
  for (const auto& v : vs) d.add_vertex(v);
  for (auto [a, b] : edges) {
    d.add_arc(a, b);
    d.add_arc(b, a);
  }
  return d;
}

}  // namespace

TEST_CASE("MultiDigraph construction and validation") {
  MultiDigraph d({"a", "b"}, {{5, "a", "b"}, {2, "b", "a"}});
  CHECK(d.arc_count() == 2);
  CHECK(d.arc_by_id(5).tail == 0);
  CHECK(d.is_eulerian());
  CHECK(d.is_connected());
  CHECK_THROWS_AS(MultiDigraph({"a", "a"}, {}), Error);
  CHECK_THROWS_AS(MultiDigraph({"a"}, {{0, "a", "b"}}), Error);
  CHECK_THROWS_AS(MultiDigraph({"a", "b"}, {{0, "a", "b"}, {0, "b", "a"}}), Error);
  try {
    d.vertex_index("zz");
    FAIL("expected UnknownLabel");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnknownLabel);
  }
}

TEST_CASE("laplacian") {
  MultiDigraph single;
  single.add_vertex("x");
  CHECK(laplacian(single) == IntMatrix{{0}});
  CHECK(laplacian(dipole(3)) == IntMatrix{{3, -3}, {-3, 3}});

  // loops cancel on the diagonal
  MultiDigraph loop = dipole(1);
  loop.add_arc(0, 0);
  CHECK(laplacian(loop) == IntMatrix{{1, -1}, {-1, 1}});
}

TEST_CASE("reduced laplacian") {
  CHECK(reduced_laplacian(dipole(3), "u") == IntMatrix{{3}});
  CHECK(reduced_laplacian(dipole(3), "v") == IntMatrix{{3}});

  const auto d22 = build_composites(2, {2}).embedded.digraph();
  CHECK(d22.vertices() == std::vector<std::string>{"alpha1", "gamma1", "alpha0"});
  CHECK(reduced_laplacian(d22, "alpha0") == IntMatrix{{2, -1}, {-2, 3}});

  const auto k4 = build_abc(1, 1, 1).embedded.digraph();
  CHECK(k4.vertices() == std::vector<std::string>{"gamma1", "beta1", "alpha1", "delta"});
  CHECK(reduced_laplacian(k4, "delta") == IntMatrix{{3, -1, -1}, {-1, 3, -1}, {-1, -1, 3}});
  CHECK_THROWS_AS(reduced_laplacian(k4, "nope"), Error);
}

TEST_CASE("sandpile group") {
  CHECK(sandpile_group(dipole(5)) == group_from_cyclic_orders({5}));
  CHECK(sandpile_group(build_composites(2, {2}).embedded.digraph()) == group_from_cyclic_orders({4}));
  CHECK(sandpile_group(build_abc(1, 1, 1).embedded.digraph()) == group_from_cyclic_orders({4, 4}));
  CHECK(sandpile_group(dipole(1)).is_trivial());

  MultiDigraph path;
  path.add_vertex("a");
  path.add_vertex("b");
  path.add_arc(0, 1);
  CHECK_THROWS_AS(sandpile_group(path), Error);

  MultiDigraph two = dipole(1);
  two.add_vertex("c");
  try {
    sandpile_group(two);
    FAIL("expected NotConnected");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotConnected);
  }
}

TEST_CASE("sandpile group does not depend on the removed vertex") {
  const auto d = build_primes(3, {3, 2}, 4).embedded.digraph();
  const auto g = sandpile_group(d, 0);
  for (std::size_t v = 0; v < d.vertex_count(); ++v) {
    CHECK(sandpile_group(d, v) == g);
    CHECK(abs(determinant(reduced_laplacian(d, v))) == g.torsion_order());
  }
}

TEST_CASE("audit") {
  const auto r = audit(dipole(2));
  CHECK(r.connected);
  CHECK(r.eulerian);
  CHECK(r.cut_vertices.empty());
  CHECK(r.two_edge_cuts.empty());
  CHECK(r.prop_simple_ok);

  // two bidirected triangles sharing vertex "x"
  const auto bow = bidirected({"x", "a", "b", "c", "d"}, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}});
  const auto rb = audit(bow);
  CHECK(rb.cut_vertices == std::set<std::string>{"x"});
  CHECK_FALSE(rb.prop_simple_ok);

  // dipole(1): both underlying edges form the only 2-edge-cut
  const auto r1 = audit(dipole(1));
  CHECK(r1.two_edge_cuts.size() == 1);
  CHECK_FALSE(r1.prop_simple_ok);

  MultiDigraph loop = dipole(2);
  loop.add_arc(0, 0);
  CHECK(audit(loop).has_loops);
  CHECK_FALSE(audit(loop).prop_simple_ok);

  for (const auto& f : {build_composites(3, {2, 4}), build_abc(1, 2, 3), build_fig5(2), build_fig6(3)})
    CHECK(audit(f.embedded.digraph()).prop_simple_ok);
}

TEST_CASE("audit 2-edge-cuts agree with brute force") {
  // two bidirected triangles joined by one bidirected edge
  const auto d = bidirected({"a", "b", "c", "d", "e", "f"}, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {2, 3}});
  const auto r = audit(d);
  std::set<std::pair<int, int>> brute;
  const auto& arcs = d.arcs();
  for (std::size_t i = 0; i < arcs.size(); ++i)
    for (std::size_t j = i + 1; j < arcs.size(); ++j) {
      MultiDigraph h;
      for (const auto& v : d.vertices()) h.add_vertex(v);
      for (std::size_t k = 0; k < arcs.size(); ++k)
        if (k != i && k != j) h.add_arc(arcs[k].tail, arcs[k].head);
      if (!h.is_connected()) brute.insert({arcs[i].id, arcs[j].id});
    }
  CHECK(r.two_edge_cuts == brute);
  CHECK_FALSE(brute.empty());
}
