#pragma once

// Verification suites run by `trinity verify` and the acceptance tests.

#include <cstddef>
#include <string>
#include <vector>

#include "trinity/families.hpp"
#include "trinity/io.hpp"
#include "trinity/latin.hpp"

namespace trinity {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::size_t max = 0;
  std::vector<CheckResult> checks;
  Json summary = Json::object();

  bool passed() const;
  std::size_t failures() const;
  Json to_json() const;
};

/// families, trinity, roundtrip, enumerate.
const std::vector<std::string>& suite_names();
std::size_t default_suite_max(const std::string& suite);

/// Throws InvalidArgument for an unknown suite.
SuiteReport run_suite(const std::string& suite, std::size_t max, std::size_t threads = 1);

/// Family instances with every parameter bounded by `max`.
std::vector<FamilyInstance> family_sweep(long max);

/// S(D_R), S(D_C), S(D_S) and the torsion of A_W, A_B agree.
CheckResult check_trinity(const LatinBitrade& x);
/// For each class I the bitrade rebuilt from D_I has the same canonical group.
CheckResult check_roundtrip(const LatinBitrade& x);
/// L'(D, v) has the same cokernel for every v and |S(D)| = |det L'(D, v)|.
CheckResult check_removed_vertex_invariance(const FamilyInstance& f);

}  // namespace trinity
