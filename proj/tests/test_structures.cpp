#include "doctest.h"
#include "sl3/errors.hpp"
#include "sl3/structures.hpp"

using namespace sl3;

namespace {

Facet F(const char* s) { return parse_facet(s); }

FacetMultiset ms(std::initializer_list<const char*> xs) {
  FacetMultiset m;
  for (const char* x : xs) ++m[F(x)];
  return m;
}

std::vector<std::vector<Facet>> layers(std::initializer_list<std::initializer_list<const char*>> xs) {
  std::vector<std::vector<Facet>> out;
  for (const auto& l : xs) {
    out.emplace_back();
    for (const char* x : l) out.back().push_back(F(x));
  }
  return out;
}

// Layers compared as multisets.
bool same_layers(const AlperinDiagram& d, const std::vector<std::vector<Facet>>& want) {
  if (d.layers.size() != want.size()) return false;
  for (std::size_t i = 0; i < want.size(); ++i) {
    FacetMultiset x, y;
    for (Facet f : d.layers[i]) ++x[f];
    for (Facet f : want[i]) ++y[f];
    if (x != y) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("Weyl module composition factors") {
  CHECK(delta_factors(F("C2")) == ms({"C2", "C1"}));
  CHECK(delta_factors(F("W3|4")) == ms({"W3|4", "W2|3p"}));
  CHECK(delta_factors(F("Vrho")) == ms({"Vrho"}));
}

TEST_CASE("tilting Delta-filtrations") {
  CHECK(tilting_delta_factors(F("C4")) == ms({"C4", "C3", "C3p", "C2"}));
  CHECK(tilting_delta_factors(F("W5|7")) == ms({"W5|7", "W4|6", "W4p|6p", "W1|2"}));
  CHECK(tilting_delta_factors(F("C1")) == ms({"C1"}));
  CHECK(tilting_delta_factors(F("W6|8")) == ms({"W6|8", "W4|5", "W2|3"}));
}

TEST_CASE("tables cover the region, are sigma-equivariant, and contain their facet once") {
  for (Facet f : region_facets()) {
    CHECK(delta_factors(f).at(f) == 1);
    CHECK(tilting_delta_factors(f).at(f) == 1);
    CHECK(delta_factors(sigma(f)) == sigma(delta_factors(f)));
    CHECK(tilting_delta_factors(sigma(f)) == sigma(tilting_delta_factors(f)));
  }
  CHECK_THROWS(delta_factors(Facet::out()));
}

TEST_CASE("counting oracle: tilting diagrams match Delta expansions") {
  int tilting = 0;
  for (Facet f : region_facets()) {
    REQUIRE_MESSAGE(has_diagram(f, ModuleKind::Tilting), to_string(f));
    const auto& d = diagram(f, ModuleKind::Tilting);
    CHECK_MESSAGE(d.layer_multiset() == expand_delta(tilting_delta_factors(f)), to_string(f));
    ++tilting;
  }
  CHECK(tilting == 33);
}

TEST_CASE("Delta diagrams have the facet alone on top and match the tables") {
  for (Facet f : region_facets()) {
    if (!has_diagram(f, ModuleKind::Delta)) continue;
    const auto& d = diagram(f, ModuleKind::Delta);
    REQUIRE(!d.layers.empty());
    CHECK(d.layers.front() == std::vector<Facet>{f});
    CHECK(d.layer_multiset() == delta_factors(f));
  }
}

TEST_CASE("diagrams are sigma-equivariant") {
  for (Facet f : region_facets())
    for (ModuleKind k : {ModuleKind::Delta, ModuleKind::Tilting, ModuleKind::M}) {
      if (!has_diagram(f, k)) continue;
      REQUIRE(has_diagram(sigma(f), k));
      const auto& d = diagram(f, k);
      const auto& e = diagram(sigma(f), k);
      CHECK(d.layers.size() == e.layers.size());
      CHECK(sigma(d.layer_multiset()) == e.layer_multiset());
      CHECK(d.edges == e.edges);
    }
}

TEST_CASE("diagram examples") {
  CHECK(same_layers(diagram(F("C2"), ModuleKind::M), layers({{"C2"}, {"C3", "C1", "C3p"}, {"C2"}})));
  CHECK(same_layers(diagram(F("W4|5"), ModuleKind::Tilting),
                    layers({{"W2|3"}, {"W3p|4p"}, {"W4|5", "W2|3"}, {"W3p|4p"}, {"W2|3"}})));
  CHECK(same_layers(diagram(F("C3"), ModuleKind::Tilting), layers({{"C2"}, {"C3", "C1"}, {"C2"}})));
  CHECK(same_layers(diagram(F("W3|4"), ModuleKind::Tilting), layers({{"W2|3p"}, {"W3|4"}, {"W2|3p"}})));
  CHECK_FALSE(has_diagram(F("C4"), ModuleKind::M));
}

TEST_CASE("diagram edges join adjacent layers") {
  for (Facet f : region_facets())
    for (ModuleKind k : {ModuleKind::Delta, ModuleKind::Tilting, ModuleKind::M}) {
      if (!has_diagram(f, k)) continue;
      const auto& d = diagram(f, k);
      for (const auto& [u, v] : d.edges) {
        CHECK(v.layer == u.layer + 1);
        CHECK(u.index < int(d.layers[u.layer].size()));
        CHECK(v.index < int(d.layers[v.layer].size()));
      }
    }
}

TEST_CASE("DOT output") {
  const std::string dot = to_dot(diagram(F("W3|4"), ModuleKind::Tilting));
  CHECK(dot.find("graph") != std::string::npos);
  CHECK(dot.find("W2|3p") != std::string::npos);
  CHECK(parse_kind("tilting") == ModuleKind::Tilting);
  CHECK_THROWS_AS(parse_kind("projective"), DomainError);
}
