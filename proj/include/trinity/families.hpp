#pragma once

// Digraph families with stored directed Eulerian spherical embeddings,
// the reduction fixtures and the group-to-construction planner.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "trinity/surface.hpp"
#include "trinity/zlinalg.hpp"

namespace trinity {

struct FamilyInstance {
  std::string family;
  std::vector<long> params;
  EmbeddedDigraph embedded;
  AbelianGroup expected_group;

  /// Family and parameters in build_family order, e.g. "composites(2,2,2)", "abc(1,1,1)".
  std::string name() const;
};

struct FamilyCheck {
  bool audit_ok = false;
  bool spherical_ok = false;
  bool group_ok = false;
  AbelianGroup computed;
  std::vector<std::string> problems;

  bool ok() const { return audit_ok && spherical_ok && group_ok; }
};

/// Audit + embedding + sandpile group against the expected group.
/// `with_audit = false` skips the connectivity audit.
FamilyCheck verify_instance(const FamilyInstance& f, bool with_audit = true);

/// D_{m;a_1..a_k}; vertex order alpha_k, gamma_k, ..., alpha_1, gamma_1, alpha_0.
FamilyInstance build_composites(long m, const std::vector<long>& a);
/// D^n_{p;a_1..a_k}; n = 0 gives build_composites(p, a).
FamilyInstance build_primes(long p, const std::vector<long>& a, long n);
/// D_{a,b,c}; vertex order gamma_1..gamma_c, beta_1..beta_b, alpha_1..alpha_a, delta.
FamilyInstance build_abc(long a, long b, long c);
FamilyInstance build_fig5(long m);
FamilyInstance build_fig6(long m);
FamilyInstance build_cyclic_dipole(long n);

/// Dispatch by name: composites m a.., primes p n a.., abc a b c, fig5 m,
/// fig6 m, dipole N.
FamilyInstance build_family(const std::string& family, const std::vector<long>& params);

/// Lexicographically smallest a <= b <= c with ab + bc + ca + 1 = t.
std::optional<std::array<long, 3>> represent_abc(long t);

enum class Verdict { Construct, NonExistent, Unknown };
std::string to_string(Verdict v);

struct Recipe {
  std::string family;
  std::vector<long> params;
};

struct Plan {
  Verdict verdict = Verdict::Unknown;
  std::optional<Recipe> recipe;
  std::string notes;
  /// Present for Construct; its sandpile group has been checked.
  std::optional<FamilyInstance> instance;
};

/// Throws InfiniteGroup / InvalidArgument (trivial group).
Plan plan_group(const AbelianGroup& g);

enum class FixtureKind { PrimeComps, OneTwoOne };

struct FixtureParams {
  long p = 2, a = 2, x = 0, y = 0;
  long d = 2;
  /// Trailing block: m x l for PrimeComps (m >= 2, or 0 x 0 for two
  /// empty rows), x x y for OneTwoOne.
  IntMatrix block;
};

struct FixturePair {
  IntMatrix before;
  IntMatrix after;
};

/// Throws InvalidArgument when the parameters are out of range.
FixturePair build_reduction_fixture(FixtureKind kind, const FixtureParams& params);

}  // namespace trinity
