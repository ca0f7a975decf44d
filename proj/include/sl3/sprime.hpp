#pragma once

#include <memory>
#include <string>
#include <vector>

#include "sl3/fdmodule.hpp"

namespace sl3 {

// The algebra S' = S(1,2,3,3') shipped with the library.
std::shared_ptr<const Presentation> sprime_presentation();
const AlgebraBasis& sprime_algebra();
ProjectiveModule sprime_projective(const std::string& vertex);

// Named modules: P1, P2, P3, P3p, M2, S1, S2, S3, S3p. DomainError otherwise.
FDModule sprime_module(const std::string& name);
std::vector<std::string> sprime_module_names();

// Parse one basis path, accepting "a'.a" and the dotless "a'a".
Path parse_loose_path(const Quiver& q, const std::string& text);

// Coefficient quiver of a projective. `overrides` replaces the basis at the
// target vertex of each given path, in order, keeping the head idempotent first;
// for P2 the two bottom paths such as {"a'a", "b2'b2"}.
CoefficientQuiver projective_coefficient_quiver(const std::string& vertex, const std::vector<std::string>& overrides);

// Reference drawings of the three P(2) coefficient quivers, as undirected edges between
// top, the middle nodes 3, 1, 3' and the bottom-left / bottom-right 2s.
struct DrawnDiagram {
  std::vector<std::string> bottom_basis;
  std::vector<std::pair<std::string, std::string>> edges;
};
const std::vector<DrawnDiagram>& drawn_diagrams();

struct DiagramComparison {
  bool match = false;
  int computed_edges = 0;
  int drawn_edges = 0;
  std::vector<std::string> extra;    // computed but not drawn
  std::vector<std::string> missing;  // drawn but not computed
};
// Bottom nodes may be matched in either order.
DiagramComparison compare_with_drawing(const CoefficientQuiver& cq, const DrawnDiagram& d);

struct SuiteCheck {
  std::string name;
  bool ok = false;
  std::string detail;
};
std::vector<SuiteCheck> run_sprime_suite();
std::vector<SuiteCheck> run_drawing_comparison();

}  // namespace sl3
