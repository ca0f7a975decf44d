#include <memory>

#include "doctest.h"
#include "sl3/embedded.hpp"
#include "sl3/errors.hpp"
#include "sl3/sprime.hpp"

using namespace sl3;

namespace {

bool self_dual(const FDModule& M) { return isomorphic(contravariant_dual(M), M); }

}  // namespace

TEST_CASE("presentation parsing") {
  const auto P = sprime_presentation();
  CHECK(P->quiver.vertex_count() == 4);
  CHECK(P->quiver.arrow_count() == 6);
  CHECK(P->relations.size() == 10);
  CHECK(P->has_duality());
  const Path p = parse_path(P->quiver, "a'.a");
  CHECK(p.source == *P->quiver.find_vertex("2"));
  CHECK(p.target == *P->quiver.find_vertex("2"));
  CHECK(to_string(P->quiver, p) == "a'.a");
  CHECK(to_string(P->quiver, parse_loose_path(P->quiver, "b1'b1")) == "b1'.b1");
  CHECK_THROWS_AS(parse_path(P->quiver, "a.b1"), DomainError);  // does not compose
  CHECK_THROWS_AS(parse_path(P->quiver, "c"), DomainError);
  CHECK_THROWS_AS(parse_presentation("vertices: 1 2\nx: 1 -> 2\nx: 2 -> 1\n"), DomainError);
  CHECK_THROWS_AS(parse_presentation("vertices: 1 2\nx: 1 -> 2\ny: 2 -> 1\nx - y = 0\n"), DomainError);
}

TEST_CASE("one loop without relations does not stabilize") {
  const Presentation P = parse_presentation("vertices: 1\nx: 1 -> 1\n");
  const AlgebraBasis A = algebra_basis(P, 5);
  CHECK_FALSE(A.stabilized);
  CHECK(A.dimension() == 6);
  CHECK_THROWS_AS(projective(std::make_shared<const Presentation>(P), A, 0), DomainError);
  // x^3 = 0 gives a 3-dimensional algebra
  const AlgebraBasis B = algebra_basis(parse_presentation("vertices: 1\nx: 1 -> 1\nx.x.x = 0\n"), 5);
  CHECK(B.stabilized);
  CHECK(B.stabilization_length == 2);
  CHECK(B.dimension() == 3);
}

TEST_CASE("non-homogeneous relations are rejected") {
  CHECK_THROWS_AS(algebra_basis(parse_presentation("vertices: 1\nx: 1 -> 1\nx.x - x = 0\n"), 4), DomainError);
}

TEST_CASE("the S' algebra") {
  const AlgebraBasis& A = sprime_algebra();
  CHECK(A.stabilized);
  CHECK(A.stabilization_length == 2);
  CHECK(A.dimension() == 13);
  const auto& q = sprime_presentation()->quiver;
  // a'a reduces to b1'b1 + b2'b2
  const auto r = A.reduce(parse_path(q, "a'.a"));
  CHECK(r.size() == 2);
  for (const auto& [i, c] : r) CHECK(c == 1);
  CHECK(A.reduce(parse_path(q, "a.a'.a")).empty());
  CHECK(A.reduce(parse_path(q, "b1.b1'")).empty());
  const Presentation extra =
      parse_presentation(std::string(embedded::sprime_presentation()) + "\nb1'.b1 - b2'.b2 = 0\n");
  CHECK(algebra_basis(extra, 6).dimension() == 12);
}

TEST_CASE("projectives and Loewy layers") {
  const auto& q = sprime_presentation()->quiver;
  const FDModule P1 = sprime_module("P1");
  const LoewyData l1 = loewy(P1);
  CHECK(layers_to_string(q, l1.radical_layers) == "[1 | 2 | 1]");
  CHECK(l1.rigid);
  CHECK(layers_to_string(q, loewy(sprime_module("P3")).radical_layers) == "[3 | 2]");
  CHECK(layers_to_string(q, loewy(sprime_module("P3p")).radical_layers) == "[3' | 2]");
  const FDModule P2 = sprime_module("P2");
  CHECK(P2.total_dim() == 6);
  const LoewyData l2 = loewy(P2);
  CHECK(layers_to_string(q, l2.radical_layers) == "[2 | 1,3,3' | 2,2]");
  CHECK(layers_to_string(q, l2.socle_layers) == "[2 | 1,3,3' | 2,2]");
  const FDModule S2 = sprime_module("S2");
  const LoewyData ls = loewy(S2);
  CHECK(ls.radical_layers.size() == 1);
  CHECK(ls.rigid);
  CHECK_THROWS_AS(sprime_module("P9"), DomainError);
}

TEST_CASE("M(2)") {
  const auto& q = sprime_presentation()->quiver;
  const FDModule M2 = sprime_module("M2");
  CHECK(M2.total_dim() == 5);
  const LoewyData l = loewy(M2);
  CHECK(layers_to_string(q, l.radical_layers) == "[2 | 1,3,3' | 2]");
  CHECK(l.rigid);
  CHECK(self_dual(M2));
  CHECK(M2.dims == std::vector<int>{1, 2, 1, 1});
}

TEST_CASE("quotients of P(2) by a bottom line") {
  const auto P2 = sprime_projective("2");
  CHECK(quotient_by(P2.module, P2.element("e(2)")).total_dim() == 0);
  CHECK(quotient_by(P2.module, P2.element("0")).total_dim() == 6);
  // x b1'b1 + y b2'b2: self-dual exactly when x, y and x - y are nonzero
  for (int x = -3; x <= 3; ++x)
    for (int y = -3; y <= 3; ++y) {
      if (x == 0 && y == 0) continue;
      const std::string line = std::to_string(x) + "*b1'.b1 + " + std::to_string(y) + "*b2'.b2";
      const FDModule N = quotient_by(P2.module, P2.element(line));
      CHECK(N.total_dim() == 5);
      CHECK_MESSAGE(self_dual(N) == (x != 0 && y != 0 && x != y), line);
    }
  // the a'a line is not self-dual either
  CHECK_FALSE(self_dual(quotient_by(P2.module, P2.element("a'.a"))));
}

TEST_CASE("isomorphism tests") {
  const FDModule P1 = sprime_module("P1");
  CHECK(isomorphic(P1, P1));
  CHECK(self_dual(P1));
  const FDModule P2 = sprime_module("P2");
  CHECK(isomorphic(contravariant_dual(contravariant_dual(P2)), P2));
  CHECK_FALSE(isomorphic(sprime_module("P3"), sprime_module("P3p")));
  CHECK_FALSE(isomorphic(sprime_module("M2"), P2));
  CHECK(hom_basis(P2, sprime_module("S2")).size() == 1);
  CHECK(hom_basis(P2, P2).size() == 3);  // dim e2 A e2
}

TEST_CASE("invariant suite passes") {
  for (const auto& c : run_sprime_suite()) CHECK_MESSAGE(c.ok, c.name << " " << c.detail);
}

TEST_CASE("coefficient quivers of P(2)") {
  const auto cq1 = projective_coefficient_quiver("2", {"b1'b1", "b2'b2"});
  CHECK(cq1.edges.size() == 7);
  for (const auto& e : cq1.edges) CHECK(e.coeff == 1);
  CHECK(compare_with_drawing(cq1, drawn_diagrams()[0]).match);
  // with a'a in the basis one middle node must meet both bottom nodes
  for (int i : {1, 2}) {
    const auto cq = projective_coefficient_quiver("2", drawn_diagrams()[i].bottom_basis);
    CHECK(cq.edges.size() == 7);
    int negative = 0;
    for (const auto& e : cq.edges) negative += e.coeff == -1;
    CHECK(negative == 1);
    const auto c = compare_with_drawing(cq, drawn_diagrams()[i]);
    CHECK(c.missing.empty());
    CHECK(c.extra.size() == 1);
  }
  CHECK_THROWS_AS(projective_coefficient_quiver("2", {"b1'b1", "b1'b1"}), DomainError);
  CHECK_THROWS_AS(projective_coefficient_quiver("2", {"a"}), DomainError);
  const std::string dot = to_dot(sprime_presentation()->quiver,
                                 projective_coefficient_quiver("2", {"a'a", "b2'b2"}), "P2");
  CHECK(dot.find("(-1)") != std::string::npos);
}
