#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sl3/weights.hpp"

namespace sl3 {

// Alcoves of the fundamental region; the "p" suffix is the prime (mirror) label.
enum class Alcove : std::uint8_t { A1, A2, A3, A3p, A4, A4p, A5, A6, A6p, A7, A8, A8p, A9, A9p };
enum class Vertex : std::uint8_t { Rho, V1, V2 };
enum class FacetKind : std::uint8_t { Alcove, Wall, Vertex, Out };

int alcove_number(Alcove c);
bool is_primed(Alcove c);
Alcove sigma(Alcove c);

// Label of a facet of the region. Unused fields stay at their defaults
// so that the defaulted comparison is a comparison of labels.
struct Facet {
  FacetKind kind = FacetKind::Out;
  Alcove lo = Alcove::A1;  // the alcove, or the lower-numbered side of a wall
  Alcove hi = Alcove::A1;
  Vertex vertex = Vertex::Rho;

  static Facet alcove(Alcove c) { return {FacetKind::Alcove, c, Alcove::A1, Vertex::Rho}; }
  static Facet wall(Alcove x, Alcove y);  // normalizes the order
  static Facet at_vertex(Vertex v) { return {FacetKind::Vertex, Alcove::A1, Alcove::A1, v}; }
  static Facet out() { return {}; }

  bool in_region() const { return kind != FacetKind::Out; }
  bool is_alcove(Alcove c) const { return kind == FacetKind::Alcove && lo == c; }

  friend auto operator<=>(const Facet&, const Facet&) = default;
};

Facet sigma(Facet f);
std::string to_string(Facet f);
std::string to_string(Alcove c);  // "3'" style, used in diagrams
Facet parse_facet(std::string_view text);

// The 33 facets of the region: 14 alcoves, 16 walls, 3 vertices.
const std::vector<Facet>& region_facets();
bool is_region_wall(Alcove x, Alcove y);

Facet classify(Weight w, int p);
Weight canonical_rep(Weight w, int p);
std::optional<Weight> linked_weight(Weight w, Facet target, int p);
bool is_restricted(Weight w, int p);

// True when the canonical representative lies in the open lowest alcove.
bool is_regular_rep(Weight rep, int p);

}  // namespace sl3
