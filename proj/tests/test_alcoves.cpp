#include <map>
#include <set>

#include "doctest.h"
#include "sl3/alcoves.hpp"
#include "sl3/errors.hpp"

using namespace sl3;

namespace {
Facet C(Alcove a) { return Facet::alcove(a); }
}  // namespace

TEST_CASE("classify examples") {
  CHECK(classify({0, 0}, 5) == C(Alcove::A1));
  CHECK(classify({4, 4}, 5) == Facet::at_vertex(Vertex::Rho));
  CHECK(classify({6, 2}, 5) == Facet::wall(Alcove::A3, Alcove::A4));
  CHECK(classify({4, 3}, 5) == Facet::wall(Alcove::A2, Alcove::A3));
  CHECK(classify({8, 8}, 5) == C(Alcove::A7));
  CHECK(to_string(classify({6, 2}, 5)) == "W3|4");
  CHECK(to_string(classify({1, 3}, 5)) == "C2");
}

TEST_CASE("facet labels round trip") {
  CHECK(region_facets().size() == 33);
  for (Facet f : region_facets()) {
    CHECK(parse_facet(to_string(f)) == f);
    CHECK(sigma(sigma(f)) == f);
  }
  CHECK(sigma(C(Alcove::A2)) == C(Alcove::A2));
  CHECK(sigma(Facet::wall(Alcove::A2, Alcove::A3)) == Facet::wall(Alcove::A2, Alcove::A3p));
  CHECK(to_string(Facet::wall(Alcove::A2, Alcove::A3p)) == "W2|3p");
  CHECK(parse_facet("out") == Facet::out());
  CHECK_THROWS_AS(parse_facet("C10"), DomainError);
}

TEST_CASE("classify is sigma-equivariant") {
  for (int p : {5, 7})
    for (int a = 0; a <= 3 * p; ++a)
      for (int b = 0; b <= 3 * p; ++b) {
        const Facet f = classify({a, b}, p);
        CHECK(classify(tau({a, b}), p) == sigma(f));
      }
}

TEST_CASE("every region facet occurs, walls separate their two alcoves") {
  for (int p : {5, 7, 11}) {
    std::set<Facet> seen;
    std::set<Facet> confirmed;
    for (int a = 0; a <= 3 * p; ++a)
      for (int b = 0; b <= 3 * p; ++b) {
        const Facet f = classify({a, b}, p);
        if (!f.in_region()) continue;
        seen.insert(f);
        if (f.kind != FacetKind::Wall) continue;
        const Pairings q = pairings({a, b});
        // step off the wall along the singular pairing
        Weight lo{a, b}, hi{a, b};
        if (q.r % p == 0) {
          lo.a -= 1, hi.a += 1;
        } else if (q.s % p == 0) {
          lo.b -= 1, hi.b += 1;
        } else {
          lo.a -= 1, hi.a += 1;
        }
        if (!is_dominant(lo) || !is_dominant(hi)) continue;
        const Facet x = classify(lo, p), y = classify(hi, p);
        if (x.kind != FacetKind::Alcove || y.kind != FacetKind::Alcove) continue;
        CHECK(std::set<Alcove>{x.lo, y.lo} == std::set<Alcove>{f.lo, f.hi});
        confirmed.insert(f);
      }
    CHECK(seen.size() == region_facets().size());
    for (Facet f : region_facets())
      if (f.kind == FacetKind::Wall) CHECK_MESSAGE(confirmed.count(f), to_string(f));
  }
}

TEST_CASE("canonical representatives") {
  CHECK(canonical_rep({0, 0}, 5) == Weight{0, 0});
  CHECK(canonical_rep({2, 2}, 5) == Weight{1, 1});
  CHECK(canonical_rep({7, 0}, 5) == Weight{0, 2});
  for (int p : {5, 7})
    for (int a = 0; a <= 3 * p; ++a)
      for (int b = 0; b <= 3 * p; ++b) {
        const Weight w{a, b};
        const Weight rep = canonical_rep(w, p);
        const Pairings q = pairings(rep);
        CHECK(q.r >= 0);
        CHECK(q.s >= 0);
        CHECK(q.t <= p);
        for (Root r : {Root::Alpha1, Root::Alpha2, Root::Theta})
          for (int m = 0; m <= 3; ++m) {
            const Weight v = dot_reflect(w, r, m, p);
            if (is_dominant(v)) CHECK(canonical_rep(v, p) == rep);
          }
      }
}

TEST_CASE("linked weights") {
  CHECK(linked_weight({1, 3}, C(Alcove::A3), 5) == Weight{7, 0});
  CHECK(linked_weight({1, 3}, C(Alcove::A1), 5) == Weight{0, 2});
  CHECK(linked_weight({1, 3}, C(Alcove::A3p), 5) == Weight{0, 5});
  // (2,0) sits in C1 and its C3 partner (5,0) is dominant
  CHECK(linked_weight({2, 0}, C(Alcove::A3), 5) == Weight{5, 0});
  // a regular weight has no wall partner
  CHECK_FALSE(linked_weight({1, 3}, Facet::wall(Alcove::A3, Alcove::A4), 5).has_value());
  // (6,2) on W3|4 is linked to (2,4) on W2|3'
  CHECK(linked_weight({6, 2}, Facet::wall(Alcove::A2, Alcove::A3p), 5) == Weight{2, 4});
  for (int p : {5, 7})
    for (int a = 0; a <= 2 * p; ++a)
      for (int b = 0; b <= 2 * p; ++b) {
        const Facet f = classify({a, b}, p);
        if (f.in_region()) CHECK(linked_weight({a, b}, f, p) == Weight{a, b});
      }
}

TEST_CASE("restricted weights") {
  CHECK(is_restricted({4, 4}, 5));
  CHECK_FALSE(is_restricted({5, 0}, 5));
  CHECK(is_restricted({3, 1}, 5));
}
