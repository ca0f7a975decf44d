#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sl3/quiver.hpp"

namespace sl3 {

// Finite-dimensional representation: one space per vertex, one matrix per arrow
// (maps[a] is dims[target] x dims[source], acting on column vectors).
struct FDModule {
  std::shared_ptr<const Presentation> pres;
  std::vector<int> dims;
  std::vector<Matrix> maps;
  std::vector<std::vector<std::string>> labels;  // optional basis labels per vertex

  int total_dim() const;
  // Composite map of a path.
  Matrix path_map(const Path& p) const;
  // Throws IntegrityError unless every relation holds identically.
  void check_relations() const;
};

// Element given by its component in each vertex space.
using ModuleElement = std::vector<std::vector<Q>>;

FDModule vertex_simple(std::shared_ptr<const Presentation> P, int v);

// Projective P(v) = span of reduced paths starting at v, together with the
// data needed to turn path combinations into elements.
struct ProjectiveModule {
  FDModule module;
  int vertex = 0;
  std::vector<std::vector<Path>> basis;  // per vertex, the basis paths ending there
  ModuleElement element(const PathCombination& c) const;
  ModuleElement element(std::string_view text) const;
};
ProjectiveModule projective(std::shared_ptr<const Presentation> P, const AlgebraBasis& A, int v);

using PerVertex = std::vector<Subspace>;
PerVertex generated_submodule(const FDModule& M, const ModuleElement& m);
FDModule quotient(const FDModule& M, const PerVertex& sub);
FDModule quotient_by(const FDModule& M, const ModuleElement& m);

struct LoewyData {
  std::vector<std::vector<int>> radical_layers;  // top first; multiplicity per vertex
  std::vector<std::vector<int>> socle_layers;    // top first
  bool rigid = false;
};
std::vector<PerVertex> radical_series(const FDModule& M);  // rad^0 = M, ..., 0
std::vector<PerVertex> socle_series(const FDModule& M);    // soc^0 = 0, ..., M
LoewyData loewy(const FDModule& M);
std::string layers_to_string(const Quiver& q, const std::vector<std::vector<int>>& layers);

FDModule contravariant_dual(const FDModule& M);

// Basis of Hom(M, N); each element is one matrix per vertex.
std::vector<std::vector<Matrix>> hom_basis(const FDModule& M, const FDModule& N);
inline constexpr int kIsoCutoff = 48;
// Throws DomainError above kIsoCutoff total dimension.
bool isomorphic(const FDModule& M, const FDModule& N);

struct CoefficientEdge {
  int arrow;
  int from;  // basis element indices
  int to;
  Q coeff;
};
struct CoefficientQuiver {
  std::vector<int> node_vertex;
  std::vector<std::string> node_label;
  std::vector<int> node_layer;  // radical layer of the basis vector
  std::vector<CoefficientEdge> edges;
};
// basis[v] holds the chosen basis vectors of the space at v (rows), in the module's coordinates.
CoefficientQuiver coefficient_quiver(const FDModule& M, const std::vector<Matrix>& basis,
                                     const std::vector<std::vector<std::string>>& labels = {});
std::string to_dot(const Quiver& q, const CoefficientQuiver& cq, const std::string& name);

}  // namespace sl3
