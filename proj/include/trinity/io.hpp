#pragma once

// JSON documents, group-spec parsing and DOT export.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "trinity/latin.hpp"
#include "trinity/surface.hpp"
#include "trinity/zlinalg.hpp"

namespace trinity {

using Json = nlohmann::json;

struct DigraphDocument {
  MultiDigraph digraph;
  std::optional<std::vector<std::vector<ArcEnd>>> rotation;
  Json metadata = Json::object();

  /// Throws MalformedRotation when no rotation is stored or it is invalid.
  EmbeddedDigraph embedded() const;
};

struct BitradeDocument {
  std::vector<Triple> W;
  std::vector<Triple> B;
};

/// {"vertices": [...], "arcs": [{"id","tail","head"}], "rotation": [{"vertex",
/// "ends": [{"arc","dir"}]}], "metadata": {...}}. Throws Parse.
DigraphDocument parse_digraph_document(const Json& j);
DigraphDocument parse_digraph_document(std::string_view text);
DigraphDocument parse_digraph_document(const std::string& text);
DigraphDocument parse_digraph_document(const char* text);
Json to_json(const DigraphDocument& doc);
DigraphDocument make_document(const EmbeddedDigraph& e, Json metadata = Json::object());
DigraphDocument make_document(const MultiDigraph& d, Json metadata = Json::object());

/// {"W": [[r,c,s], ...], "B": [...]}. Throws Parse.
BitradeDocument parse_bitrade_document(const Json& j);
BitradeDocument parse_bitrade_document(std::string_view text);
BitradeDocument parse_bitrade_document(const std::string& text);
BitradeDocument parse_bitrade_document(const char* text);
Json to_json(const BitradeDocument& doc);
BitradeDocument make_document(const LatinBitrade& x);

Json group_json(const AbelianGroup& g);

/// "+"-separated cyclic orders with "^" repetition: "2^3+4", "4+4".
/// "Z/4" and "Z4" terms are accepted; "1" is the trivial group.
AbelianGroup parse_group_spec(std::string_view spec);

/// Deterministic DOT; one edge per arc, rotations as comment lines.
std::string export_dot(const DigraphDocument& doc, const std::string& name = "D");

/// Stable serialization used by the CLI: two-space indent, trailing newline.
std::string dump(const Json& j);

}  // namespace trinity
