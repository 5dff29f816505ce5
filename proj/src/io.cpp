#include "trinity/io.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include "trinity/error.hpp"

namespace trinity {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorKind::Parse, what); }

Json parse_text(std::string_view text) {
  if (text.find_first_not_of(" \t\r\n") == std::string_view::npos) parse_error("empty document");
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    parse_error(std::string("invalid JSON: ") + e.what());
  }
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) parse_error("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) parse_error(std::string("missing field \"") + key + "\"");
  return *it;
}

std::string label_of(const Json& j, const char* what) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  parse_error(std::string(what) + " must be a string or integer label");
}

}  // namespace

EmbeddedDigraph DigraphDocument::embedded() const {
  if (!rotation) throw Error(ErrorKind::MalformedRotation, "document has no rotation");
  return EmbeddedDigraph(digraph, *rotation);
}

DigraphDocument parse_digraph_document(const Json& j) {
  DigraphDocument doc;
  const Json& vs = field(j, "vertices");
  const Json& as = field(j, "arcs");
  if (!vs.is_array() || !as.is_array()) parse_error("\"vertices\" and \"arcs\" must be arrays");
  if (vs.empty()) parse_error("digraph has no vertices");
  std::vector<std::string> vertices;
  for (const auto& v : vs) vertices.push_back(label_of(v, "vertex"));
  std::vector<ArcSpec> arcs;
  for (const auto& a : as) {
    const Json& id = field(a, "id");
    if (!id.is_number_integer()) parse_error("arc id must be an integer");
    arcs.push_back({id.get<int>(), label_of(field(a, "tail"), "tail"), label_of(field(a, "head"), "head")});
  }
  try {
    doc.digraph = MultiDigraph(vertices, arcs);
  } catch (const Error& e) {
    parse_error(e.what());
  }
  if (auto it = j.find("rotation"); it != j.end() && !it->is_null()) {
    if (!it->is_array()) parse_error("\"rotation\" must be an array");
    std::vector<std::vector<ArcEnd>> rotation(doc.digraph.vertex_count());
    std::vector<bool> seen(doc.digraph.vertex_count(), false);
    for (const auto& entry : *it) {
      const std::string v = label_of(field(entry, "vertex"), "rotation vertex");
      if (!doc.digraph.has_vertex(v)) parse_error("rotation names unknown vertex " + v);
      const std::size_t vi = doc.digraph.vertex_index(v);
      if (seen[vi]) parse_error("rotation lists vertex " + v + " twice");
      seen[vi] = true;
      const Json& ends = field(entry, "ends");
      if (!ends.is_array()) parse_error("rotation ends must be an array");
      for (const auto& e : ends) {
        const Json& arc = field(e, "arc");
        const Json& dir = field(e, "dir");
        if (!arc.is_number_integer() || !dir.is_string()) parse_error("rotation end needs integer arc and string dir");
        const std::string ds = dir.get<std::string>();
        if (ds != "in" && ds != "out") parse_error("dir must be \"in\" or \"out\"");
        rotation[vi].push_back(ArcEnd{arc.get<int>(), ds == "out"});
      }
    }
    doc.rotation = std::move(rotation);
    doc.embedded();  // validates
  }
  if (auto it = j.find("metadata"); it != j.end()) doc.metadata = *it;
  return doc;
}

DigraphDocument parse_digraph_document(std::string_view text) { return parse_digraph_document(parse_text(text)); }
DigraphDocument parse_digraph_document(const std::string& text) { return parse_digraph_document(std::string_view(text)); }
DigraphDocument parse_digraph_document(const char* text) { return parse_digraph_document(std::string_view(text)); }

Json to_json(const DigraphDocument& doc) {
  Json j;
  j["vertices"] = doc.digraph.vertices();
  Json arcs = Json::array();
  for (const auto& a : doc.digraph.arcs())
    arcs.push_back({{"id", a.id}, {"tail", doc.digraph.label(a.tail)}, {"head", doc.digraph.label(a.head)}});
  j["arcs"] = std::move(arcs);
  if (doc.rotation) {
    Json rot = Json::array();
    for (std::size_t v = 0; v < doc.rotation->size(); ++v) {
      Json ends = Json::array();
      for (const auto& e : (*doc.rotation)[v]) ends.push_back({{"arc", e.arc}, {"dir", e.outgoing ? "out" : "in"}});
      rot.push_back({{"vertex", doc.digraph.label(v)}, {"ends", std::move(ends)}});
    }
    j["rotation"] = std::move(rot);
  }
  j["metadata"] = doc.metadata;
  return j;
}

DigraphDocument make_document(const EmbeddedDigraph& e, Json metadata) {
  return {e.digraph(), e.rotation(), std::move(metadata)};
}

DigraphDocument make_document(const MultiDigraph& d, Json metadata) { return {d, std::nullopt, std::move(metadata)}; }

BitradeDocument parse_bitrade_document(const Json& j) {
  BitradeDocument doc;
  auto half = [&](const char* key) {
    const Json& h = field(j, key);
    if (!h.is_array()) parse_error(std::string("\"") + key + "\" must be an array");
    std::vector<Triple> out;
    for (const auto& t : h) {
      if (!t.is_array() || t.size() != 3) parse_error(std::string(key) + " entries must be [row, col, sym]");
      out.push_back({label_of(t[0], "row"), label_of(t[1], "column"), label_of(t[2], "symbol")});
    }
    return out;
  };
  doc.W = half("W");
  doc.B = half("B");
  return doc;
}

BitradeDocument parse_bitrade_document(std::string_view text) { return parse_bitrade_document(parse_text(text)); }
BitradeDocument parse_bitrade_document(const std::string& text) { return parse_bitrade_document(std::string_view(text)); }
BitradeDocument parse_bitrade_document(const char* text) { return parse_bitrade_document(std::string_view(text)); }

Json to_json(const BitradeDocument& doc) {
  Json j;
  j["W"] = doc.W;
  j["B"] = doc.B;
  return j;
}

BitradeDocument make_document(const LatinBitrade& x) { return {x.W().triples(), x.B().triples()}; }

Json group_json(const AbelianGroup& g) {
  Json factors = Json::array();
  for (const auto& f : g.invariant_factors()) factors.push_back(f.get_str());
  return {{"free_rank", g.free_rank()}, {"invariant_factors", factors}, {"text", g.to_string()}};
}

AbelianGroup parse_group_spec(std::string_view spec) {
  std::string s;
  for (char c : spec)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) parse_error("empty group spec");
  std::vector<Integer> orders;
  std::size_t pos = 0;
  auto number = [&](const char* what) {
    const std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) parse_error(std::string("expected ") + what + " at position " + std::to_string(start) + " in \"" + s + "\"");
    return Integer(s.substr(start, pos - start));
  };
  while (true) {
    if (s.compare(pos, 2, "Z/") == 0) pos += 2;
    else if (pos < s.size() && s[pos] == 'Z') pos += 1;
    const Integer order = number("a cyclic order");
    long repeat = 1;
    if (pos < s.size() && s[pos] == '^') {
      ++pos;
      const Integer r = number("a repetition count");
      if (!r.fits_slong_p() || r > 10000) parse_error("repetition count too large");
      repeat = r.get_si();
    }
    if (order == 0) parse_error("cyclic order 0 (infinite) is not allowed in a group spec");
    for (long i = 0; i < repeat; ++i) orders.push_back(order);
    if (pos == s.size()) break;
    if (s[pos] != '+') parse_error("unexpected '" + std::string(1, s[pos]) + "' in group spec \"" + s + "\"");
    ++pos;
  }
  return group_from_cyclic_orders(orders);
}

std::string export_dot(const DigraphDocument& doc, const std::string& name) {
  const auto& d = doc.digraph;
  auto quote = [](const std::string& s) {
    std::string q = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') q += '\\';
      q += c;
    }
    return q + "\"";
  };
  std::ostringstream out;
  out << "digraph " << quote(name) << " {\n";
  if (doc.rotation) {
    for (std::size_t v = 0; v < d.vertex_count(); ++v) {
      out << "  // rotation " << quote(d.label(v)) << ":";
      for (const auto& e : (*doc.rotation)[v]) out << ' ' << (e.outgoing ? "out:" : "in:") << e.arc;
      out << "\n";
    }
  }
  for (const auto& label : d.vertices()) out << "  " << quote(label) << ";\n";
  for (const auto& a : d.arcs())
    out << "  " << quote(d.label(a.tail)) << " -> " << quote(d.label(a.head)) << " [id=" << a.id << "];\n";
  out << "}\n";
  return out.str();
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace trinity
