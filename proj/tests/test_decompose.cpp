#include <set>

#include "doctest.h"
#include "sl3/alcoves.hpp"
#include "sl3/decompose.hpp"
#include "sl3/errors.hpp"
#include "sl3/modchar.hpp"

using namespace sl3;

namespace {

using K = SummandKind;

std::set<std::tuple<K, Weight, Coeff>> as_set(const Decomposition& d) {
  std::set<std::tuple<K, Weight, Coeff>> s;
  for (const auto& x : d.summands) s.insert({x.kind, x.weight, x.mult});
  return s;
}

Character weyl(std::initializer_list<std::pair<Weight, Coeff>> ts) {
  Character c(Basis::Weyl);
  for (auto [w, k] : ts) c.add(w, k);
  return c;
}

}  // namespace

TEST_CASE("tensor characters") {
  const Character c = tensor_char({3, 1}, {3, 1}, 5);
  CHECK(c == weyl({{{6, 2}, 1}, {{7, 0}, 1}, {{4, 3}, 1}, {{2, 4}, 1}, {{0, 5}, 1}, {{0, 2}, 2}}));
  CHECK(dimension(c, 5) == 324);
  CHECK(tensor_char({0, 0}, {4, 4}, 5) == weyl({{{4, 4}, 1}}));
  const Character c2 = tensor_char({2, 2}, {1, 1}, 5);
  Character want(Basis::Simple);
  for (Weight w : {Weight{3, 3}, Weight{1, 4}, Weight{4, 1}, Weight{2, 2}}) want.add(w, 1);
  CHECK(to_simple_basis(c2, 5) == want);
  CHECK(dimension(c2, 5) == 152);
  CHECK_THROWS_AS(tensor_char({5, 0}, {0, 0}, 5), DomainError);
}

TEST_CASE("linkage blocks") {
  const auto b3 = split_blocks(to_simple_basis(tensor_char({3, 1}, {3, 1}, 5), 5), 5);
  REQUIRE(b3.size() == 3);
  std::set<std::set<Weight>> supports;
  for (const auto& [rep, c] : b3) {
    std::set<Weight> s;
    for (const auto& [w, k] : c.terms()) s.insert(w);
    supports.insert(s);
  }
  CHECK(supports == std::set<std::set<Weight>>{{{7, 0}, {0, 5}, {1, 3}, {0, 2}}, {{6, 2}, {2, 4}}, {{4, 3}}});
  CHECK(split_blocks(weyl({{{0, 0}, 1}}), 5).size() == 1);
  CHECK(split_blocks(tensor_char({2, 2}, {1, 1}, 5), 5).size() == 4);
}

TEST_CASE("greedy tilting resolution") {
  Character s(Basis::Simple);
  s.add({6, 2}, 1);
  s.add({2, 4}, 2);
  const auto g = greedy_tilting(s, 5);
  REQUIRE(g.summands.size() == 1);
  CHECK(g.summands[0] == Summand{K::T, {6, 2}, 1});
  CHECK(g.residual.empty());
  const auto st = greedy_tilting(weyl({{{4, 4}, 1}}), 5);
  REQUIRE(st.summands.size() == 1);
  CHECK(st.summands[0] == Summand{K::T, {4, 4}, 1});
  const auto five = greedy_tilting(tensor_char({1, 1}, {1, 1}, 5), 5);
  CHECK(five.summands.size() == 5);
  CHECK(five.residual.empty());
  // a negative coefficient cannot be resolved
  CHECK_THROWS_AS(greedy_tilting(weyl({{{4, 4}, -1}}), 5), IntegrityError);
}

TEST_CASE("case-3 floor solve") {
  CHECK(case3_floor_solve(1, 1, 2, 2) == FloorSolution{0, 0, 0, 1});
  CHECK(case3_floor_solve(1, 0, 2, 1) == FloorSolution{1, 0, 0, 0});
  CHECK_THROWS_AS(case3_floor_solve(1, 1, 2, 1), IntegrityError);
  // closed form w = (a1 - 2 a2 + 3 a3 + 3 a3') / 4 on random feasible data
  for (Coeff x = 0; x < 3; ++x)
    for (Coeff y = 0; y < 3; ++y)
      for (Coeff z = 0; z < 3; ++z)
        for (Coeff w = 0; w < 3; ++w) {
          const Coeff a3 = x + w, a3p = y + w, a2 = 2 * x + 2 * y + z + 2 * w, a1 = x + y + 2 * z + 2 * w;
          CHECK(case3_floor_solve(a3, a3p, a2, a1) == FloorSolution{x, y, z, w});
          CHECK((a1 - 2 * a2 + 3 * a3 + 3 * a3p) == 4 * w);
        }
}

TEST_CASE("worked example, case 3") {
  const Decomposition d = decompose({3, 1}, {3, 1}, 5);
  CHECK(d.product_case == 3);
  CHECK(as_set(d) == std::set<std::tuple<K, Weight, Coeff>>{
                         {K::M, {1, 3}, 1}, {K::T, {0, 2}, 1}, {K::T, {6, 2}, 1}, {K::T, {4, 3}, 1}});
  CHECK(summand_dim({K::M, {1, 3}, 1}, 5) == 63);
  CHECK(summand_dim({K::T, {0, 2}, 1}, 5) == 6);
  CHECK(summand_dim({K::T, {6, 2}, 1}, 5) == 165);
  CHECK(summand_dim({K::T, {4, 3}, 1}, 5) == 90);
  CHECK(d.dim_product == 324);
  CHECK(verify(d).ok());
  CHECK(to_text(d) == "T(6,2) + T(4,3) + M(1,3) + T(0,2)");
}

TEST_CASE("worked example, case 2") {
  const Decomposition d = decompose({2, 2}, {1, 1}, 5);
  CHECK(d.product_case == 2);
  CHECK(as_set(d) == std::set<std::tuple<K, Weight, Coeff>>{
                         {K::L, {3, 3}, 1}, {K::T, {1, 4}, 1}, {K::T, {4, 1}, 1}, {K::L, {2, 2}, 1}});
  CHECK(summand_dim({K::L, {3, 3}, 1}, 5) == 63);
  CHECK(summand_dim({K::T, {1, 4}, 1}, 5) == 35);
  CHECK(summand_dim({K::L, {2, 2}, 1}, 5) == 19);
  CHECK(d.dim_product == 152);
  CHECK(verify(d).ok());
}

TEST_CASE("small products") {
  const Decomposition one = decompose({0, 0}, {0, 0}, 5);
  CHECK(to_text(one) == "T(0,0)");
  const Decomposition adj = decompose({1, 1}, {1, 1}, 5);
  CHECK(as_set(adj) == std::set<std::tuple<K, Weight, Coeff>>{
                           {K::T, {2, 2}, 1}, {K::T, {3, 0}, 1}, {K::T, {0, 3}, 1}, {K::T, {1, 1}, 1}, {K::T, {0, 0}, 1}});
  CHECK(adj.dim_product == 64);
  CHECK_THROWS_AS(decompose({5, 0}, {0, 0}, 5), DomainError);
  CHECK_THROWS_AS(decompose({0, 0}, {0, 0}, 4), DomainError);
}

TEST_CASE("Steinberg square") {
  const Decomposition d = decompose({4, 4}, {4, 4}, 5);
  Coeff total = 0;
  for (const auto& s : d.summands) {
    CHECK(s.kind == K::T);
    total += s.mult * summand_dim(s, 5);
  }
  CHECK(total == 15625);
}

TEST_CASE("a perturbed multiplicity fails verification") {
  Decomposition d = decompose({3, 1}, {3, 1}, 5);
  d.summands[0].mult += 1;
  const VerifyReport r = verify(d);
  CHECK_FALSE(r.ok());
  CHECK_FALSE(r.character_ok);
  Decomposition e = decompose({2, 2}, {1, 1}, 5);
  e.summands.back().weight = {3, 3};
  CHECK_FALSE(verify(e).ok());
}

TEST_CASE("tau-equivariance, shape and purity at p = 5") {
  const int p = 5;
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b)
      for (int c = 0; c < p; ++c)
        for (int e = 0; e < p; ++e) {
          const Weight x{a, b}, y{c, e};
          const Decomposition d = decompose(x, y, p);
          const Decomposition t = decompose(tau(x), tau(y), p);
          std::vector<Summand> mirrored;
          for (auto s : d.summands) {
            s.weight = tau(s.weight);
            mirrored.push_back(s);
          }
          canonicalize(mirrored);
          CHECK(mirrored == t.summands);
          const bool both_c2 = classify(x, p).is_alcove(Alcove::A2) && classify(y, p).is_alcove(Alcove::A2);
          for (const auto& s : d.summands) {
            const Facet f = classify(s.weight, p);
            CHECK(f.in_region());
            if (s.kind != K::T) CHECK(f.is_alcove(Alcove::A2));
            if (s.kind == K::M) CHECK(both_c2);
            CHECK(s.mult > 0);
          }
        }
}

TEST_CASE("monomial oracle verification") {
  VerifyOptions o;
  o.monomial_oracle = true;
  for (int p : {5, 7})
    CHECK(verify(decompose({p - 2, 1}, {1, p - 2}, p), o).ok());
}

TEST_CASE("JSON output") {
  const auto j = to_json(decompose({3, 1}, {3, 1}, 5), true);
  CHECK(j["case"] == 3);
  CHECK(j["dim"] == 324);
  CHECK(j["summands"].size() == 4);
  CHECK(j["summands"][0]["kind"] == "T");
  CHECK(j["verified"] == true);
}
