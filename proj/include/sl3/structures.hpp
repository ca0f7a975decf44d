#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sl3/alcoves.hpp"

namespace sl3 {

enum class ModuleKind { Delta, Tilting, M };

std::string kind_name(ModuleKind k);
ModuleKind parse_kind(std::string_view name);

using FacetMultiset = std::map<Facet, int>;

struct DiagramNode {
  int layer;
  int index;
  friend auto operator<=>(const DiagramNode&, const DiagramNode&) = default;
};

// Layered (Alperin) diagram; edges join entries of adjacent layers, upper first.
struct AlperinDiagram {
  Facet facet;
  ModuleKind kind = ModuleKind::Delta;
  std::vector<std::vector<Facet>> layers;
  std::vector<std::pair<DiagramNode, DiagramNode>> edges;
  std::string source;

  FacetMultiset layer_multiset() const;
};

const FacetMultiset& delta_factors(Facet f);
const FacetMultiset& tilting_delta_factors(Facet f);
bool has_diagram(Facet f, ModuleKind kind);
const AlperinDiagram& diagram(Facet f, ModuleKind kind);

FacetMultiset sigma(const FacetMultiset& m);
// Sum of delta_factors over the entries of m, with multiplicity.
FacetMultiset expand_delta(const FacetMultiset& m);
std::string to_string(const FacetMultiset& m);

// One node per layer entry, ranks pinned per layer.
std::string to_dot(const AlperinDiagram& d, const std::function<std::string(Facet)>& label);
std::string to_dot(const AlperinDiagram& d);

}  // namespace sl3
