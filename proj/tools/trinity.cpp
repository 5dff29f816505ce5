// trinity: command-line front end for the sandpile / bitrade library.
// Exit codes: 0 success, 1 verification failure, 2 input or parse error.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "trinity/digraph.hpp"
#include "trinity/error.hpp"
#include "trinity/families.hpp"
#include "trinity/io.hpp"
#include "trinity/verify.hpp"

using namespace trinity;

namespace {

constexpr int kOk = 0, kVerifyFailed = 1, kInputError = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Parse, "cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write " + path);
  out << text;
}

Json family_metadata(const FamilyInstance& f) {
  return {{"family", f.family}, {"params", f.params}, {"name", f.name()},
          {"expected_group", group_json(f.expected_group)}};
}

EmbeddedDigraph embedding_of(const DigraphDocument& doc) {
  if (doc.rotation) return doc.embedded();
  auto found = find_spherical_rotation(doc.digraph);
  if (!found) throw Error(ErrorKind::NonSpherical, "no directed Eulerian spherical embedding exists");
  return *found;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sandpile groups, spherical latin bitrades and their constructions"};
  app.require_subcommand(1);

  // construct
  std::string family, out_path;
  std::vector<long> params;
  auto* construct = app.add_subcommand("construct", "Build a family digraph with its embedding");
  construct->add_option("family", family, "composites | primes | abc | fig5 | fig6 | dipole")->required();
  construct->add_option("params", params,
                        "composites: m a1 [a2 ..]; primes: p n a1 [a2 ..]; abc: a b c; fig5/fig6: m; dipole: N");
  construct->add_option("--out,-o", out_path, "Output file (default stdout)");

  // group
  std::string digraph_path, bitrade_path, side = "W";
  bool as_json = false;
  auto* group = app.add_subcommand("group", "Sandpile group of a digraph or canonical group of a bitrade half");
  auto* gd = group->add_option("--digraph", digraph_path, "Digraph document");
  auto* gb = group->add_option("--bitrade", bitrade_path, "Bitrade document");
  gd->excludes(gb);
  group->add_option("--side", side, "W or B")->check(CLI::IsMember({"W", "B"}));
  group->add_flag("--json", as_json, "Print JSON instead of text");

  // plan
  std::string spec;
  auto* plan = app.add_subcommand("plan", "Plan a spherical latin bitrade for a finite abelian group");
  plan->add_option("spec", spec, "Group spec, e.g. 4+4 or 2^3+4")->required();
  plan->add_option("--out,-o", out_path, "Write the constructed digraph document here");
  plan->add_flag("--json", as_json, "Print JSON instead of text");

  // verify
  std::string suite;
  std::size_t max = 0, threads = 1;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", suite, "families | trinity | roundtrip | enumerate")->required();
  verify->add_option("--max", max, "Size bound (default: 4 for families, 8 otherwise)");
  verify->add_option("--threads", threads, "Enumeration worker threads");
  verify->add_flag("--json", as_json, "Print the full JSON report");

  // convert
  std::string to, cls = "R";
  auto* convert = app.add_subcommand("convert", "Tutte's construction and its reverse");
  auto* cd = convert->add_option("--digraph", digraph_path, "Digraph document (to bitrade)");
  auto* cb = convert->add_option("--bitrade", bitrade_path, "Bitrade document (to digraph)");
  cd->excludes(cb);
  convert->add_option("--to", to, "digraph | bitrade")->required()->check(CLI::IsMember({"digraph", "bitrade"}));
  convert->add_option("--class", cls, "R, C or S")->check(CLI::IsMember({"R", "C", "S"}));
  convert->add_option("--out,-o", out_path, "Output file (default stdout)");

  // export-dot
  auto* dot = app.add_subcommand("export-dot", "Export a digraph document as DOT");
  dot->add_option("--digraph", digraph_path, "Digraph document")->required();
  dot->add_option("--out,-o", out_path, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*construct) {
      const FamilyInstance f = build_family(family, params);
      write_output(dump(to_json(make_document(f.embedded, family_metadata(f)))), out_path);
      return kOk;
    }

    if (*group) {
      AbelianGroup g;
      if (!digraph_path.empty()) {
        g = sandpile_group(parse_digraph_document(read_file(digraph_path)).digraph);
      } else if (!bitrade_path.empty()) {
        const auto doc = parse_bitrade_document(read_file(bitrade_path));
        const LatinBitrade x(doc.W, doc.B);
        g = canonical_group(side == "W" ? x.W() : x.B()).group;
      } else {
        throw Error(ErrorKind::InvalidArgument, "give --digraph or --bitrade");
      }
      std::cout << (as_json ? dump(group_json(g)) : g.to_string() + "\n");
      return kOk;
    }

    if (*plan) {
      const AbelianGroup g = parse_group_spec(spec);
      const Plan p = plan_group(g);
      Json j = {{"group", g.to_string()}, {"verdict", to_string(p.verdict)}, {"notes", p.notes}};
      if (p.recipe) j["recipe"] = {{"family", p.recipe->family}, {"params", p.recipe->params}};
      j["verified"] = p.instance.has_value();
      if (as_json) {
        std::cout << dump(j);
      } else {
        std::cout << "group: " << g.to_string() << "\nverdict: " << to_string(p.verdict) << "\n";
        if (p.recipe) {
          std::cout << "recipe: " << p.recipe->family;
          for (long x : p.recipe->params) std::cout << ' ' << x;
          std::cout << "\n";
        }
        if (p.verdict == Verdict::Construct) std::cout << "verified: sandpile group matches\n";
        std::cout << "notes: " << p.notes << "\n";
      }
      if (p.instance && !out_path.empty())
        write_output(dump(to_json(make_document(p.instance->embedded, family_metadata(*p.instance)))), out_path);
      // A recipe that did not verify is a verification failure.
      return p.recipe && p.verdict != Verdict::Construct ? kVerifyFailed : kOk;
    }

    if (*verify) {
      if (max == 0) max = default_suite_max(suite);
      const SuiteReport rep = run_suite(suite, max, threads);
      if (as_json) {
        std::cout << dump(rep.to_json());
      } else {
        for (const auto& c : rep.checks)
          std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << (c.detail.empty() ? "" : "  " + c.detail) << "\n";
        if (!rep.summary.empty()) std::cout << "summary " << rep.summary.dump() << "\n";
        std::cout << "suite " << suite << ": " << rep.checks.size() - rep.failures() << "/" << rep.checks.size()
                  << " passed\n";
      }
      return rep.passed() ? kOk : kVerifyFailed;
    }

    if (*convert) {
      if (to == "digraph") {
        if (bitrade_path.empty()) throw Error(ErrorKind::InvalidArgument, "--to digraph needs --bitrade");
        const auto doc = parse_bitrade_document(read_file(bitrade_path));
        const LatinBitrade x(doc.W, doc.B);
        const auto e = tutte_digraph(triangulation_from_bitrade(x), class_from_letter(cls[0]));
        const auto s = sandpile_group(e.digraph());
        const auto c = canonical_group(x.W()).group;
        Json meta = {{"source", "bitrade"}, {"class", cls}, {"sandpile_group", group_json(s)},
                     {"canonical_group", group_json(c)}, {"groups_agree", s == c.torsion()}};
        write_output(dump(to_json(make_document(e, meta))), out_path);
        return s == c.torsion() ? kOk : kVerifyFailed;
      }
      if (digraph_path.empty()) throw Error(ErrorKind::InvalidArgument, "--to bitrade needs --digraph");
      const auto doc = parse_digraph_document(read_file(digraph_path));
      const auto e = embedding_of(doc);
      const auto back = bitrade_from_embedding(e);
      if (!back.bitrade)
        throw Error(ErrorKind::NotABitrade, "triangulation is not simple; the embedding gives no latin bitrade");
      const auto s = sandpile_group(e.digraph());
      const auto c = canonical_group(back.bitrade->W()).group;
      Json out = to_json(make_document(*back.bitrade));
      out["metadata"] = {{"source", "digraph"}, {"sandpile_group", group_json(s)},
                         {"canonical_group", group_json(c)}, {"groups_agree", s == c.torsion()}};
      write_output(dump(out), out_path);
      return s == c.torsion() ? kOk : kVerifyFailed;
    }

    if (*dot) {
      const auto doc = parse_digraph_document(read_file(digraph_path));
      write_output(export_dot(doc), out_path);
      return kOk;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kOk;
}
