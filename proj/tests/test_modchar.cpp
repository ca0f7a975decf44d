#include "doctest.h"
#include "sl3/alcoves.hpp"
#include "sl3/errors.hpp"
#include "sl3/modchar.hpp"
#include "sl3/weylchar.hpp"

using namespace sl3;

namespace {

Character weyl(std::initializer_list<std::pair<Weight, Coeff>> ts) {
  Character c(Basis::Weyl);
  for (auto [w, k] : ts) c.add(w, k);
  return c;
}

Character simple(std::initializer_list<std::pair<Weight, Coeff>> ts) {
  Character c(Basis::Simple);
  for (auto [w, k] : ts) c.add(w, k);
  return c;
}

Character monomial(const Character& weyl_basis) {
  Character m(Basis::Monomial);
  for (const auto& [w, k] : weyl_basis.terms()) m.add_scaled(weyl_to_monomial(w), k);
  return m;
}

// Frobenius twist of a monomial character.
Character twist(const Character& m, int p) {
  Character out(Basis::Monomial);
  for (const auto& [w, k] : m.terms()) out.add({p * w.a, p * w.b}, k);
  return out;
}

}  // namespace

TEST_CASE("Weyl composition factors") {
  CHECK(weyl_comp_factors({3, 1}, 5) == std::vector<Weight>{{3, 1}, {2, 0}});
  CHECK(weyl_comp_factors({6, 2}, 5) == std::vector<Weight>{{6, 2}, {2, 4}});
  CHECK(weyl_comp_factors({1, 1}, 5) == std::vector<Weight>{{1, 1}});
}

TEST_CASE("simple characters") {
  CHECK(simple_char({3, 1}, 5) == weyl({{{3, 1}, 1}, {{2, 0}, -1}}));
  CHECK(simple_dim({3, 1}, 5) == 18);
  CHECK(simple_char({0, 5}, 5) == weyl({{{0, 5}, 1}, {{1, 3}, -1}, {{0, 2}, 1}}));
  CHECK(simple_dim({0, 5}, 5) == 3);
  CHECK(simple_char({4, 4}, 5) == weyl({{{4, 4}, 1}}));
  CHECK(simple_dim({4, 4}, 5) == 125);
}

TEST_CASE("tilting characters") {
  CHECK(tilting_char({6, 2}, 5) == weyl({{{6, 2}, 1}, {{2, 4}, 1}}));
  CHECK(tilting_char({1, 3}, 5) == weyl({{{1, 3}, 1}, {{0, 2}, 1}}));
  CHECK(tilting_char({4, 4}, 5) == weyl({{{4, 4}, 1}}));
}

TEST_CASE("M characters") {
  CHECK(m_char({1, 3}, 5) == simple({{{1, 3}, 2}, {{7, 0}, 1}, {{0, 5}, 1}, {{0, 2}, 1}}));
  CHECK(dimension(m_char({1, 3}, 5), 5) == 63);
  CHECK(from_simple_basis(m_char({1, 3}, 5), 5) == weyl({{{7, 0}, 1}, {{0, 5}, 1}, {{0, 2}, 1}}));
  CHECK(m_char({2, 2}, 5) == simple({{{2, 2}, 2}, {{6, 0}, 1}, {{0, 6}, 1}, {{1, 1}, 1}}));
  const MFloor fl = m_floor({1, 3}, 5);
  CHECK(fl.mu3 == Weight{7, 0});
  CHECK(fl.mu3p == Weight{0, 5});
  CHECK(fl.mu2 == Weight{1, 3});
  CHECK(fl.mu1 == Weight{0, 2});
  CHECK_THROWS_AS(m_char({6, 2}, 5), DomainError);
}

TEST_CASE("basis changes") {
  CHECK(to_simple_basis(Character::unit(Basis::Weyl, {7, 0}), 5) == simple({{{7, 0}, 1}, {{1, 3}, 1}}));
  for (Weight w : {Weight{0, 0}, Weight{3, 1}, Weight{6, 2}})
    CHECK(to_simple_basis(simple_char(w, 5), 5) == Character::unit(Basis::Simple, w));
}

TEST_CASE("unitriangularity and dimension bounds") {
  for (int p : {5, 7})
    for (int a = 0; a <= 2 * p; ++a)
      for (int b = 0; b <= 2 * p; ++b) {
        const Weight w{a, b};
        if (!classify(w, p).in_region()) continue;
        const Character s = simple_char(w, p);
        CHECK(s.coeff(w) == 1);
        for (const auto& [v, k] : s.terms())
          if (v != w) CHECK((dominance_leq(v, w) && v != w));
        const Coeff d = simple_dim(w, p);
        CHECK(d > 0);
        CHECK(d <= dim_weyl(w));
        CHECK((d == dim_weyl(w)) == (weyl_comp_factors(w, p).size() == 1));
        const Character t = tilting_char(w, p);
        CHECK(t.coeff(w) == 1);
        CHECK(t.nonnegative());
        for (const auto& [v, k] : t.terms())
          if (v != w) CHECK(dominance_leq(v, w));
        CHECK(tilting_char(tau(w), p) == t.tau());
      }
}

// L(l0 + p l1) = L(l0) (x) L(l1)^[1]; for l1 in the lowest alcove L(l1) has the Weyl character.
TEST_CASE("Steinberg tensor product oracle") {
  for (int p : {5, 7}) {
    int tested = 0;
    for (Weight l1 : {Weight{1, 0}, Weight{0, 1}, Weight{1, 1}, Weight{2, 0}})
      for (int a = 0; a < p; ++a)
        for (int b = 0; b < p; ++b) {
          const Weight l0{a, b};
          const Weight w{a + p * l1.a, b + p * l1.b};
          if (!classify(w, p).in_region()) continue;
          const Character lhs = monomial(simple_char(w, p));
          const Character rhs =
              monomial_product(monomial(simple_char(l0, p)), twist(weyl_to_monomial(l1), p));
          CHECK_MESSAGE(lhs == rhs, format_weight(w));
          ++tested;
        }
    CHECK(tested > 20);
  }
}

// E (x) T is tilting: its character is a nonnegative sum of tilting characters.
TEST_CASE("tilting characters are closed under tensoring with the natural module") {
  for (int p : {5, 7}) {
    int tested = 0;
    for (int a = 0; a <= 2 * p; ++a)
      for (int b = 0; b <= 2 * p; ++b) {
        const Weight w{a, b};
        if (!classify(w, p).in_region() || !classify(w + Weight{1, 0}, p).in_region()) continue;
        Character c = mult(Character::unit(Basis::Weyl, {1, 0}), tilting_char(w, p));
        bool ok = true, skipped = false;
        while (!c.empty() && ok) {
          const Weight top = *c.top();
          if (!classify(top, p).in_region()) {
            skipped = true;
            break;
          }
          const Coeff k = c.coeff(top);
          ok = k > 0;
          c.add_scaled(tilting_char(top, p), -k);
        }
        if (skipped) continue;
        CHECK_MESSAGE(ok, "E x T(" << format_weight(w) << ") at p=" << p);
        ++tested;
      }
    CHECK(tested > 40);
  }
}

TEST_CASE("M plus L(mu1) has the pattern 2,2,1,1 over the floor") {
  for (int p : {5, 7})
    for (int a = 0; a < p; ++a)
      for (int b = 0; b < p; ++b) {
        const Weight w{a, b};
        if (!classify(w, p).is_alcove(Alcove::A2)) continue;
        const MFloor fl = m_floor(w, p);
        Character c = m_char(w, p);
        c.add(fl.mu1, 1);
        CHECK(c == simple({{fl.mu3, 1}, {fl.mu3p, 1}, {w, 2}, {fl.mu1, 2}}));
      }
}
