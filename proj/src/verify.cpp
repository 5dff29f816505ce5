#include "trinity/verify.hpp"

#include <algorithm>

#include "trinity/digraph.hpp"
#include "trinity/error.hpp"

namespace trinity {

namespace {

std::string bitrade_name(const LatinBitrade& x, std::size_t i) {
  return "bitrade#" + std::to_string(i) + "(size " + std::to_string(x.size()) + ")";
}

std::vector<long> primes_up_to(long max) {
  std::vector<long> out;
  for (long n = 2; n <= std::max(2L, max); ++n) {
    bool prime = true;
    for (long q = 2; q * q <= n; ++q) prime = prime && n % q != 0;
    if (prime) out.push_back(n);
  }
  return out;
}

// Non-empty sequences over [2, top] of length <= len.
std::vector<std::vector<long>> sequences(long top, std::size_t len) {
  std::vector<std::vector<long>> all, frontier{{}};
  for (std::size_t k = 0; k < len; ++k) {
    std::vector<std::vector<long>> next;
    for (const auto& s : frontier)
      for (long a = 2; a <= top; ++a) {
        auto t = s;
        t.push_back(a);
        next.push_back(t);
        all.push_back(t);
      }
    frontier = std::move(next);
  }
  return all;
}

}  // namespace

bool SuiteReport::passed() const { return failures() == 0; }

std::size_t SuiteReport::failures() const {
  return std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.passed; });
}

Json SuiteReport::to_json() const {
  Json checks_json = Json::array();
  for (const auto& c : checks) checks_json.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return {{"suite", suite},
          {"max", max},
          {"passed", passed()},
          {"total", checks.size()},
          {"failures", failures()},
          {"summary", summary},
          {"checks", checks_json}};
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"families", "trinity", "roundtrip", "enumerate"};
  return names;
}

std::size_t default_suite_max(const std::string& suite) { return suite == "families" ? 4 : 8; }

std::vector<FamilyInstance> family_sweep(long max) {
  std::vector<FamilyInstance> out;
  const std::size_t len = max <= 4 ? 3 : 2;
  for (long m = 2; m <= max; ++m)
    for (const auto& a : sequences(max, len)) out.push_back(build_composites(m, a));
  for (long p : primes_up_to(max))
    for (const auto& a : sequences(max, 2)) {
      long bound = 1;
      for (long x : a) bound += 2 * (x - 1);
      for (long n = 1; n <= bound; ++n) out.push_back(build_primes(p, a, n));
    }
  for (long a = 1; a <= max; ++a)
    for (long b = a; b <= max; ++b)
      for (long c = b; c <= max; ++c) out.push_back(build_abc(a, b, c));
  for (long m = 1; m <= max; ++m) out.push_back(build_fig5(m)), out.push_back(build_fig6(m));
  for (long n = 2; n <= max + 1; ++n) out.push_back(build_cyclic_dipole(n));
  return out;
}

CheckResult check_trinity(const LatinBitrade& x) {
  CheckResult r{"", false, ""};
  try {
    const auto gw = canonical_group(x.W()).group;
    const auto gb = canonical_group(x.B()).group;
    const auto t = triangulation_from_bitrade(x);
    std::vector<AbelianGroup> s;
    for (auto c : {VertexClass::R, VertexClass::C, VertexClass::S}) s.push_back(sandpile_group(tutte_digraph(t, c).digraph()));
    r.passed = gw.free_rank() == 2 && gb.free_rank() == 2 && gw.torsion() == gb.torsion() && s[0] == gw.torsion() &&
               s[1] == s[0] && s[2] == s[0];
    r.detail = "A_W=" + gw.to_string() + " A_B=" + gb.to_string() + " S(D_R)=" + s[0].to_string() +
               " S(D_C)=" + s[1].to_string() + " S(D_S)=" + s[2].to_string();
  } catch (const Error& e) {
    r.detail = e.what();
  }
  return r;
}

CheckResult check_roundtrip(const LatinBitrade& x) {
  CheckResult r{"", true, ""};
  try {
    const auto g = canonical_group(x.W()).group;
    const auto t = triangulation_from_bitrade(x);
    for (auto c : {VertexClass::R, VertexClass::C, VertexClass::S}) {
      const auto back = bitrade_from_embedding(tutte_digraph(t, c));
      std::string part = std::string(1, class_letter(c)) + ":";
      if (!back.bitrade) {
        r.passed = false;
        part += "no bitrade";
      } else {
        const auto h = canonical_group(back.bitrade->W()).group;
        r.passed = r.passed && h == g;
        part += h.to_string();
        if (c == VertexClass::R) part += normalized_form(*back.bitrade) == normalized_form(x) ? " (isotopic)" : "";
      }
      r.detail += (r.detail.empty() ? "" : " ") + part;
    }
  } catch (const Error& e) {
    r.passed = false;
    r.detail = e.what();
  }
  return r;
}

CheckResult check_removed_vertex_invariance(const FamilyInstance& f) {
  CheckResult r{f.name(), true, ""};
  const auto& d = f.embedded.digraph();
  const AbelianGroup g0 = sandpile_group(d, 0);
  for (std::size_t v = 0; v < d.vertex_count(); ++v) {
    const IntMatrix l = reduced_laplacian(d, v);
    const AbelianGroup g = cokernel(l);
    Integer det = determinant(l);
    if (det < 0) det = -det;
    if (g != g0 || g.torsion_order() != det) {
      r.passed = false;
      r.detail = "vertex " + d.label(v) + ": " + g.to_string() + ", |det| = " + det.get_str();
      return r;
    }
  }
  r.detail = g0.to_string() + " for all " + std::to_string(d.vertex_count()) + " removed vertices";
  return r;
}

SuiteReport run_suite(const std::string& suite, std::size_t max, std::size_t threads) {
  if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end())
    throw Error(ErrorKind::InvalidArgument, "unknown suite " + suite);
  SuiteReport rep;
  rep.suite = suite;
  rep.max = max;

  if (suite == "families") {
    for (const auto& f : family_sweep(static_cast<long>(max))) {
      const FamilyCheck c = verify_instance(f);
      CheckResult r{f.name(), c.ok(), c.computed.to_string()};
      for (const auto& p : c.problems) r.detail += "; " + p;
      rep.checks.push_back(r);
      if (c.ok()) rep.checks.push_back(check_removed_vertex_invariance(f));
      if (c.ok() && f.embedded.digraph().arc_count() <= 40) {
        // Proposition: the embedding yields a bitrade with canonical group S(D).
        const auto back = bitrade_from_embedding(f.embedded);
        CheckResult b{f.name() + " -> bitrade", false, "no bitrade"};
        if (back.bitrade) {
          const auto g = canonical_group(back.bitrade->W()).group;
          b.passed = g.free_rank() == 2 && g.torsion() == f.expected_group;
          b.detail = g.to_string();
        }
        rep.checks.push_back(b);
      }
    }
    return rep;
  }

  EnumerationOptions options;
  options.threads = threads;
  const auto result = enumerate_spherical_bitrades(max, options);
  Json tally = Json::object();
  for (const auto& [g, n] : result.group_tally) tally[g.to_string()] = n;
  Json sizes = Json::object();
  for (const auto& [s, n] : result.size_tally) sizes[std::to_string(s)] = n;
  rep.summary = {{"normalized_forms", result.bitrades.size()}, {"group_tally", tally}, {"size_tally", sizes}};

  for (std::size_t i = 0; i < result.bitrades.size(); ++i) {
    const auto& x = result.bitrades[i];
    if (suite == "trinity" || suite == "roundtrip") {
      CheckResult r = suite == "trinity" ? check_trinity(x) : check_roundtrip(x);
      r.name = bitrade_name(x, i);
      rep.checks.push_back(r);
    } else {
      const auto g = canonical_group(x.W()).group.torsion();
      CheckResult r{bitrade_name(x, i), true, g.to_string()};
      r.passed = x.vertex_count() == x.size() + 2;
      for (const auto* half : {&x.W(), &x.B()}) {
        const auto e = embed_search(*half, g);
        if (!e || !check_embedding(*half, *e)) {
          r.passed = false;
          r.detail += half == &x.W() ? "; W does not embed" : "; B does not embed";
        }
      }
      rep.checks.push_back(r);
    }
  }
  if (suite == "enumerate") {
    const bool found = result.group_tally.count(group_from_cyclic_orders({2, 2})) != 0;
    rep.checks.push_back({"no Z/2 + Z/2", !found, found ? "Z/2 + Z/2 found" : "no Z/2+Z/2 found"});
  }
  return rep;
}

}  // namespace trinity
