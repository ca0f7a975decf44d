#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sl3/linalg.hpp"

namespace sl3 {

struct Arrow {
  std::string name;
  int source;
  int target;
};

class Quiver {
 public:
  int add_vertex(const std::string& name);
  int add_arrow(const std::string& name, int source, int target);
  int vertex_count() const { return int(vertices_.size()); }
  int arrow_count() const { return int(arrows_.size()); }
  const std::string& vertex_name(int v) const { return vertices_.at(v); }
  const Arrow& arrow(int a) const { return arrows_.at(a); }
  std::optional<int> find_vertex(std::string_view name) const;
  std::optional<int> find_arrow(std::string_view name) const;

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
};

// A path composed left to right: arrows[0] first. Length 0 is the idempotent at `source`.
struct Path {
  int source = 0;
  int target = 0;
  std::vector<int> arrows;
  int length() const { return int(arrows.size()); }
  friend auto operator<=>(const Path&, const Path&) = default;
};

// p then q, or nullopt when they do not compose.
std::optional<Path> concat(const Path& p, const Path& q);
std::string to_string(const Quiver& q, const Path& p);  // "a'.a", "e(2)"
Path parse_path(const Quiver& q, std::string_view text);

struct PathCombination {
  std::vector<std::pair<Q, Path>> terms;
};
PathCombination parse_combination(const Quiver& q, std::string_view text);

struct Presentation {
  Quiver quiver;
  std::vector<PathCombination> relations;
  std::vector<int> partner;  // duality pairing on arrows, -1 when absent
  bool has_duality() const;
};

// Text format: "vertices: ...", "name: src -> tgt", "dual: x y", and
// relations "lhs = rhs" of dot-separated paths; '#' starts a comment.
Presentation parse_presentation(std::string_view text);

// Basis of the quotient path algebra by length, with the reduction map.
class AlgebraBasis {
 public:
  bool stabilized = false;
  int stabilization_length = -1;  // longest nonzero path length when stabilized
  int length_bound = 0;

  // Normal (basis) paths, grouped by length.
  const std::vector<Path>& basis() const { return basis_; }
  std::size_t dimension() const { return basis_.size(); }
  // Coordinates of a path in the basis; empty when the path is zero.
  std::map<int, Q> reduce(const Path& p) const;
  std::map<int, Q> reduce(const PathCombination& c) const;
  int index_of(const Path& p) const;  // -1 unless p is itself a basis path

 private:
  friend AlgebraBasis algebra_basis(const Presentation& P, int length_bound);
  struct Level {
    std::vector<Path> paths;
    std::map<Path, int> index;
    Matrix rref;  // ideal I_k in these coordinates
    std::vector<int> pivots;
  };
  std::vector<Level> levels_;
  std::vector<Path> basis_;
  std::map<Path, int> basis_index_;
};

// Throws DomainError for non-homogeneous relations. Non-stabilization is
// reported through `stabilized`, not thrown.
AlgebraBasis algebra_basis(const Presentation& P, int length_bound);

}  // namespace sl3
