#include <doctest.h>

#include <random>

#include "trinity/digraph.hpp"
#include "trinity/error.hpp"
#include "trinity/families.hpp"

using namespace trinity;

namespace {

// D_{m;a_1..a_k} straight from its arc list, vertices alpha_k, gamma_k, ..., alpha_1, gamma_1, alpha_0.
MultiDigraph composites_from_definition(long m, const std::vector<long>& a) {
  const long k = static_cast<long>(a.size());
  MultiDigraph d;
  for (long i = k; i >= 1; --i) {
    d.add_vertex("alpha" + std::to_string(i));
    d.add_vertex("gamma" + std::to_string(i));
  }
  d.add_vertex("alpha0");
  auto al = [](long i) { return "alpha" + std::to_string(i); };
  auto ga = [](long i) { return "gamma" + std::to_string(i); };
  auto arcs = [&](const std::string& u, const std::string& v, long n) {
    for (long j = 0; j < n; ++j) d.add_arc(u, v);
  };
  for (long i = 1; i <= k; ++i) {
    arcs(al(i), ga(i), m - 1);
    arcs(ga(i), al(i), m - 1);
    arcs(al(i - 1), ga(i), a[i - 1] - 1);
    arcs(ga(i), al(i - 1), a[i - 1] - 1);
    arcs(al(i), al(i - 1), 1);
  }
  for (long i = 1; i < k; ++i) arcs(ga(i), ga(i + 1), 1);
  arcs(al(0), ga(1), 1);
  arcs(ga(k), al(k), 1);
  return d;
}

// D_{a,b,c} from its arc list, vertices gamma_1..gamma_c, beta_1..beta_b, alpha_1..alpha_a, delta.
MultiDigraph abc_from_definition(long a, long b, long c) {
  MultiDigraph d;
  for (long i = 1; i <= c; ++i) d.add_vertex("gamma" + std::to_string(i));
  for (long i = 1; i <= b; ++i) d.add_vertex("beta" + std::to_string(i));
  for (long i = 1; i <= a; ++i) d.add_vertex("alpha" + std::to_string(i));
  d.add_vertex("delta");
  auto both = [&](const std::string& u, const std::string& v, long n) {
    for (long j = 0; j < n; ++j) d.add_arc(u, v), d.add_arc(v, u);
  };
  for (auto [name, len] : {std::pair{"alpha", a}, {"beta", b}, {"gamma", c}}) {
    for (long i = 1; i < len; ++i) both(name + std::to_string(i), name + std::to_string(i + 1), 1);
    both("delta", std::string(name) + "1", 1);
  }
  const auto A = "alpha" + std::to_string(a), B = "beta" + std::to_string(b), C = "gamma" + std::to_string(c);
  both(B, C, a);
  both(A, C, b);
  both(A, B, c);
  return d;
}

AbelianGroup cyc(std::initializer_list<long> o) { return group_from_cyclic_orders(o); }

void check_instance(const FamilyInstance& f) {
  const FamilyCheck c = verify_instance(f);
  INFO(f.name());
  for (const auto& p : c.problems) INFO(p);
  CHECK(c.ok());
}

}  // namespace

TEST_CASE("composites") {
  const auto d2 = build_composites(2, {2});
  CHECK(d2.name() == "composites(2,2)");
  CHECK(sandpile_group(d2.embedded.digraph()) == cyc({4}));
  CHECK(reduced_laplacian(d2.embedded.digraph(), "alpha0") == IntMatrix{{2, -1}, {-2, 3}});
  CHECK(sandpile_group(build_composites(2, {2, 2}).embedded.digraph()) == cyc({4, 4}));

  for (long m : {2, 3, 5})
    for (const std::vector<long>& a : {std::vector<long>{2}, {3, 2}, {2, 4, 3}, {4, 4, 2, 3}}) {
      const auto f = build_composites(m, a);
      long arcs = static_cast<long>(a.size()) + 1;
      for (long x : a) arcs += 2 * (m - 1) + 2 * (x - 1) + 1;
      CHECK(static_cast<long>(f.embedded.digraph().arc_count()) == arcs);
      CHECK(laplacian(f.embedded.digraph()) == laplacian(composites_from_definition(m, a)));
      std::vector<Integer> orders;
      for (long x : a) orders.emplace_back(m * x);
      CHECK(f.expected_group == group_from_cyclic_orders(orders));
      check_instance(f);
    }
  CHECK_THROWS_AS(build_composites(1, {2}), Error);
  CHECK_THROWS_AS(build_composites(2, {1}), Error);
  CHECK_THROWS_AS(build_composites(2, {}), Error);
}

TEST_CASE("primes") {
  CHECK(sandpile_group(build_primes(2, {2}, 1).embedded.digraph()) == cyc({2, 4}));
  CHECK(sandpile_group(build_primes(2, {2}, 3).embedded.digraph()) == cyc({2, 2, 2, 4}));
  CHECK_THROWS_AS(build_primes(2, {2}, 4), Error);
  CHECK(verify_instance(build_primes(4, {2}, 1)).computed == cyc({4, 8}));
  CHECK(build_primes(3, {2, 3}, 0).embedded.digraph() == build_composites(3, {2, 3}).embedded.digraph());
  CHECK(build_primes(3, {2, 3}, 0).embedded.rotation() == build_composites(3, {2, 3}).embedded.rotation());
  for (long p : {2, 3, 5, 7})
    for (const std::vector<long>& a : {std::vector<long>{3}, {2, 2}, {2, 3}}) {
      long bound = 1;
      for (long x : a) bound += 2 * (x - 1);
      for (long n = 0; n <= bound; ++n) check_instance(build_primes(p, a, n));
    }
}

TEST_CASE("abc") {
  const auto k4 = build_abc(1, 1, 1);
  CHECK(k4.embedded.digraph().vertex_count() == 4);
  CHECK(k4.embedded.digraph().arc_count() == 12);
  CHECK(sandpile_group(k4.embedded.digraph()) == cyc({4, 4}));
  CHECK(smith_diagonal(reduced_laplacian(k4.embedded.digraph(), "delta")) == std::vector<Integer>{1, 4, 4});
  CHECK(sandpile_group(build_abc(1, 1, 2).embedded.digraph()) == cyc({6, 6}));
  CHECK(sandpile_group(build_abc(2, 2, 2).embedded.digraph()) == cyc({13, 13}));
  for (long a = 1; a <= 3; ++a)
    for (long b = a; b <= 3; ++b)
      for (long c = b; c <= 4; ++c) {
        const auto f = build_abc(a, b, c);
        CHECK(laplacian(f.embedded.digraph()) == laplacian(abc_from_definition(a, b, c)));
        check_instance(f);
      }
  CHECK_THROWS_AS(build_abc(0, 1, 1), Error);
}

TEST_CASE("figure families") {
  CHECK(sandpile_group(build_fig6(1).embedded.digraph()) == cyc({4, 4}));
  CHECK(laplacian(build_fig6(1).embedded.digraph()).rows() == 4);
  CHECK(sandpile_group(build_fig6(2).embedded.digraph()) == cyc({7, 7}));
  CHECK(sandpile_group(build_fig5(1).embedded.digraph()) == cyc({11, 11}));
  for (long m = 1; m <= 10; ++m) {
    check_instance(build_fig5(m));
    check_instance(build_fig6(m));
  }
  CHECK_THROWS_AS(build_fig5(0), Error);
  CHECK_THROWS_AS(build_fig6(0), Error);
}

TEST_CASE("cyclic dipole") {
  CHECK(sandpile_group(build_cyclic_dipole(2).embedded.digraph()) == cyc({2}));
  CHECK(sandpile_group(build_cyclic_dipole(5).embedded.digraph()) == cyc({5}));
  check_instance(build_cyclic_dipole(7));
  CHECK_THROWS_AS(build_cyclic_dipole(1), Error);
}

TEST_CASE("build_family dispatch") {
  CHECK(build_family("composites", {2, 2}).name() == build_composites(2, {2}).name());
  CHECK(build_family("primes", {2, 1, 2}).expected_group == cyc({2, 4}));
  CHECK(build_family("abc", {1, 1, 1}).expected_group == cyc({4, 4}));
  CHECK(build_family("dipole", {5}).embedded.digraph().vertex_count() == 2);
  CHECK_THROWS_AS(build_family("nope", {1}), Error);
  CHECK_THROWS_AS(build_family("abc", {1, 1}), Error);
}

TEST_CASE("represent_abc") {
  CHECK(represent_abc(4) == std::array<long, 3>{1, 1, 1});
  CHECK(represent_abc(13) == std::array<long, 3>{2, 2, 2});
  for (long t : {2, 3, 5, 7, 11, 19, 23, 31, 43, 59, 71, 79, 103, 131, 191, 211, 331, 463})
    CHECK_FALSE(represent_abc(t));
  for (long t = 4; t <= 600; ++t)
    if (auto r = represent_abc(t)) {
      const auto [a, b, c] = *r;
      CHECK(a * b + b * c + c * a + 1 == t);
      CHECK((1 <= a && a <= b && b <= c));
    }
}

TEST_CASE("plan_group") {
  CHECK(plan_group(cyc({2, 2})).verdict == Verdict::NonExistent);
  CHECK(plan_group(cyc({3, 3})).verdict == Verdict::Unknown);
  CHECK(plan_group(cyc({5, 5})).verdict == Verdict::Unknown);
  CHECK(plan_group(cyc({2, 2, 2})).verdict == Verdict::NonExistent);

  const Plan p24 = plan_group(cyc({2, 4}));
  CHECK(p24.verdict == Verdict::Construct);
  REQUIRE(p24.recipe);
  CHECK(p24.recipe->family == "primes");
  CHECK(p24.recipe->params == std::vector<long>{2, 1, 2});

  const Plan p44 = plan_group(cyc({4, 4}));
  CHECK(p44.verdict == Verdict::Construct);
  CHECK(p44.recipe->family == "abc");
  CHECK(p44.recipe->params == std::vector<long>{1, 1, 1});
  REQUIRE(p44.instance);
  CHECK(sandpile_group(p44.instance->embedded.digraph()) == cyc({4, 4}));

  CHECK(plan_group(cyc({7})).recipe->family == "dipole");
  CHECK(plan_group(cyc({7, 7})).recipe->family == "fig6");
  CHECK(plan_group(cyc({11, 11})).recipe->family == "fig5");

  CHECK_THROWS_AS(plan_group(AbelianGroup::trivial()), Error);
  CHECK_THROWS_AS(plan_group(AbelianGroup(1, {})), Error);
  CHECK(to_string(Verdict::NonExistent) == "NonExistent");
}

TEST_CASE("reduction fixtures") {
  FixtureParams q;
  const auto base = build_reduction_fixture(FixtureKind::PrimeComps, q);
  CHECK(smith_diagonal(base.before) == smith_diagonal(base.after));
  CHECK(base.before.rows() == 4);

  FixtureParams t;
  t.d = 2;
  t.block = IntMatrix{{3, 1, 4}};
  const auto triv = build_reduction_fixture(FixtureKind::OneTwoOne, t);
  CHECK(triv.before == triv.after);

  std::mt19937 rng(11);
  std::uniform_int_distribution<long> small(0, 3), entry(-4, 4);
  for (int iter = 0; iter < 60; ++iter) {
    FixtureParams r;
    r.p = 2 + small(rng);
    r.a = 2 + small(rng);
    r.x = small(rng);
    r.y = small(rng);
    IntMatrix block(2 + small(rng), small(rng));
    for (std::size_t i = 0; i < block.rows(); ++i)
      for (std::size_t j = 0; j < block.cols(); ++j) block(i, j) = entry(rng);
    r.block = block;
    const auto pc = build_reduction_fixture(FixtureKind::PrimeComps, r);
    CHECK(smith_diagonal(pc.before) == smith_diagonal(pc.after));

    FixtureParams o;
    o.d = 2 + small(rng) + small(rng);
    IntMatrix ob(1 + small(rng), 2 + small(rng));
    for (std::size_t i = 0; i < ob.rows(); ++i)
      for (std::size_t j = 0; j < ob.cols(); ++j) ob(i, j) = entry(rng);
    o.block = ob;
    const auto ot = build_reduction_fixture(FixtureKind::OneTwoOne, o);
    CHECK(smith_diagonal(ot.before) == smith_diagonal(ot.after));
  }

  FixtureParams bad;
  bad.p = 1;
  CHECK_THROWS_AS(build_reduction_fixture(FixtureKind::PrimeComps, bad), Error);
  FixtureParams bad121;
  bad121.block = IntMatrix{{1}};
  CHECK_THROWS_AS(build_reduction_fixture(FixtureKind::OneTwoOne, bad121), Error);
}
