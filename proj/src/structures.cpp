#include "sl3/structures.hpp"

#include <sstream>

#include "json.hpp"
#include "sl3/embedded.hpp"
#include "sl3/errors.hpp"

namespace sl3 {

std::string kind_name(ModuleKind k) {
  switch (k) {
    case ModuleKind::Delta: return "delta";
    case ModuleKind::Tilting: return "tilting";
    case ModuleKind::M: return "M";
  }
  return "delta";
}

ModuleKind parse_kind(std::string_view name) {
  if (name == "delta") return ModuleKind::Delta;
  if (name == "tilting") return ModuleKind::Tilting;
  if (name == "M") return ModuleKind::M;
  throw DomainError("unknown module kind '" + std::string(name) + "'");
}

FacetMultiset AlperinDiagram::layer_multiset() const {
  FacetMultiset m;
  for (const auto& layer : layers)
    for (Facet f : layer) ++m[f];
  return m;
}

FacetMultiset sigma(const FacetMultiset& m) {
  FacetMultiset out;
  for (const auto& [f, k] : m) out[sigma(f)] += k;
  return out;
}

namespace {

struct Store {
  std::map<Facet, FacetMultiset> delta;
  std::map<Facet, FacetMultiset> tilting;
  std::map<std::pair<Facet, ModuleKind>, AlperinDiagram> diagrams;
};

FacetMultiset to_multiset(const nlohmann::json& arr) {
  FacetMultiset m;
  for (const auto& x : arr) ++m[parse_facet(x.get<std::string>())];
  return m;
}

AlperinDiagram mirror(const AlperinDiagram& d) {
  AlperinDiagram m = d;
  m.facet = sigma(d.facet);
  for (auto& layer : m.layers)
    for (Facet& f : layer) f = sigma(f);
  m.source = d.source + " (mirror image)";
  return m;
}

Store load() {
  Store s;
  const auto doc = nlohmann::json::parse(embedded::structures_json());
  for (const auto& rec : doc.at("records")) {
    AlperinDiagram d;
    d.facet = parse_facet(rec.at("facet").get<std::string>());
    d.kind = parse_kind(rec.at("kind").get<std::string>());
    d.source = rec.at("source").get<std::string>();
    for (const auto& layer : rec.at("layers")) {
      std::vector<Facet> l;
      for (const auto& x : layer) l.push_back(parse_facet(x.get<std::string>()));
      d.layers.push_back(std::move(l));
    }
    for (const auto& e : rec.at("edges")) {
      DiagramNode u{e[0][0].get<int>(), e[0][1].get<int>()};
      DiagramNode v{e[1][0].get<int>(), e[1][1].get<int>()};
      if (v.layer != u.layer + 1 || u.layer < 0 || v.layer >= int(d.layers.size()) || u.index < 0 ||
          v.index < 0 || u.index >= int(d.layers[u.layer].size()) ||
          v.index >= int(d.layers[v.layer].size()))
        throw DataError("structures: bad edge in record " + to_string(d.facet));
      d.edges.emplace_back(u, v);
    }
    if (d.kind == ModuleKind::Delta) s.delta[d.facet] = to_multiset(rec.at("factors"));
    if (d.kind == ModuleKind::Tilting) s.tilting[d.facet] = to_multiset(rec.at("factors"));
    s.diagrams[{d.facet, d.kind}] = std::move(d);
  }
  // Primed records follow from the stored ones by the diagram symmetry.
  auto complete = [](auto& table) {
    auto copy = table;
    for (const auto& [f, m] : copy)
      if (!table.count(sigma(f))) table[sigma(f)] = sigma(m);
  };
  complete(s.delta);
  complete(s.tilting);
  auto dcopy = s.diagrams;
  for (const auto& [key, d] : dcopy) {
    const auto mk = std::make_pair(sigma(key.first), key.second);
    if (!s.diagrams.count(mk)) s.diagrams[mk] = mirror(d);
  }
  for (Facet f : region_facets()) {
    if (!s.delta.count(f)) throw DataError("structures: no Weyl-module entry for " + to_string(f));
    if (!s.tilting.count(f)) throw DataError("structures: no tilting entry for " + to_string(f));
  }
  return s;
}

const Store& store() {
  static const Store s = load();
  return s;
}

}  // namespace

const FacetMultiset& delta_factors(Facet f) {
  if (!f.in_region()) throw DomainError("delta_factors: facet outside the region");
  return store().delta.at(f);
}

const FacetMultiset& tilting_delta_factors(Facet f) {
  if (!f.in_region()) throw DomainError("tilting_delta_factors: facet outside the region");
  return store().tilting.at(f);
}

bool has_diagram(Facet f, ModuleKind kind) { return store().diagrams.count({f, kind}) > 0; }

const AlperinDiagram& diagram(Facet f, ModuleKind kind) {
  auto it = store().diagrams.find({f, kind});
  if (it == store().diagrams.end())
    throw DomainError("no stored " + kind_name(kind) + " diagram for facet " + to_string(f));
  return it->second;
}

FacetMultiset expand_delta(const FacetMultiset& m) {
  FacetMultiset out;
  for (const auto& [f, k] : m)
    for (const auto& [g, j] : delta_factors(f)) out[g] += k * j;
  return out;
}

std::string to_string(const FacetMultiset& m) {
  std::string s = "{";
  bool first = true;
  for (const auto& [f, k] : m) {
    if (!first) s += ", ";
    s += to_string(f);
    if (k != 1) s += "^" + std::to_string(k);
    first = false;
  }
  return s + "}";
}

namespace {
std::string escape(const std::string& s) {
  std::string o;
  for (char c : s) {
    if (c == '"' || c == '\\') o += '\\';
    o += c;
  }
  return o;
}
}  // namespace

std::string to_dot(const AlperinDiagram& d, const std::function<std::string(Facet)>& label) {
  std::ostringstream os;
  os << "graph \"" << kind_name(d.kind) << "_" << escape(to_string(d.facet)) << "\" {\n";
  os << "  node [shape=plaintext];\n";
  for (std::size_t i = 0; i < d.layers.size(); ++i) {
    os << "  { rank=same;";
    for (std::size_t j = 0; j < d.layers[i].size(); ++j)
      os << " n" << i << "_" << j << " [label=\"" << escape(label(d.layers[i][j])) << "\"];";
    os << " }\n";
  }
  // Invisible chain keeps empty-edge diagrams layered.
  for (std::size_t i = 0; i + 1 < d.layers.size(); ++i)
    os << "  n" << i << "_0 -- n" << i + 1 << "_0 [style=invis];\n";
  for (const auto& [u, v] : d.edges)
    os << "  n" << u.layer << "_" << u.index << " -- n" << v.layer << "_" << v.index << ";\n";
  os << "}\n";
  return os.str();
}

std::string to_dot(const AlperinDiagram& d) {
  return to_dot(d, [](Facet f) { return to_string(f); });
}

}  // namespace sl3
