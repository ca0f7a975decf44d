#include "sl3/modchar.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>

#include "sl3/alcoves.hpp"
#include "sl3/structures.hpp"
#include "sl3/weylchar.hpp"

namespace sl3 {

namespace {

class Memo {
 public:
  template <class F>
  Character get(int p, Weight w, F compute) {
    const auto key = std::make_pair(p, w);
    {
      std::shared_lock lock(mu_);
      if (auto it = map_.find(key); it != map_.end()) return it->second;
    }
    Character v = compute();
    std::unique_lock lock(mu_);
    return map_.try_emplace(key, std::move(v)).first->second;
  }

 private:
  std::shared_mutex mu_;
  std::map<std::pair<int, Weight>, Character> map_;
};

Facet region_facet(Weight w, int p, const char* op) {
  require_prime(p);
  if (!is_dominant(w)) throw DomainError(std::string(op) + ": non-dominant weight " + format_weight(w));
  const Facet f = classify(w, p);
  if (!f.in_region())
    throw DomainError(std::string(op) + ": " + format_weight(w) + " is outside the region for p=" +
                      std::to_string(p));
  return f;
}

}  // namespace

std::vector<Weight> weyl_comp_factors(Weight lambda, int p) {
  const Facet f = region_facet(lambda, p, "weyl_comp_factors");
  std::vector<Weight> out;
  for (const auto& [g, k] : delta_factors(f))
    if (auto mu = linked_weight(lambda, g, p))
      for (int i = 0; i < k; ++i) out.push_back(*mu);
  std::sort(out.begin(), out.end(), HigherFirst{});
  return out;
}

Character simple_char(Weight lambda, int p) {
  static Memo memo;
  region_facet(lambda, p, "simple_char");
  return memo.get(p, lambda, [&] {
    Character c = Character::unit(Basis::Weyl, lambda);
    bool seen_self = false;
    for (Weight mu : weyl_comp_factors(lambda, p)) {
      if (mu == lambda && !seen_self) {
        seen_self = true;
        continue;
      }
      if (!dominance_leq(mu, lambda) || mu == lambda)
        throw IntegrityError("simple_char " + format_weight(lambda),
                             "composition factor " + format_weight(mu) + " is not below the highest weight");
      c -= simple_char(mu, p);
    }
    return c;
  });
}

Character tilting_char(Weight lambda, int p) {
  static Memo memo;
  const Facet f = region_facet(lambda, p, "tilting_char");
  return memo.get(p, lambda, [&] {
    Character c(Basis::Weyl);
    for (const auto& [g, k] : tilting_delta_factors(f))
      if (auto mu = linked_weight(lambda, g, p)) c.add(*mu, k);
    return c;
  });
}

Character tilting_char_simple(Weight lambda, int p) {
  static Memo memo;
  return memo.get(p, lambda, [&] { return to_simple_basis(tilting_char(lambda, p), p); });
}

MFloor m_floor(Weight lambda, int p) {
  const Facet f = region_facet(lambda, p, "m_char");
  if (!f.is_alcove(Alcove::A2))
    throw DomainError("M(lambda) needs lambda in C2; " + format_weight(lambda) + " is in " + to_string(f));
  auto m3 = linked_weight(lambda, Facet::alcove(Alcove::A3), p);
  auto m3p = linked_weight(lambda, Facet::alcove(Alcove::A3p), p);
  auto m1 = linked_weight(lambda, Facet::alcove(Alcove::A1), p);
  if (!m3 || !m3p || !m1)
    throw DomainError("M(" + format_weight(lambda) + "): a reflected weight is not dominant");
  return {*m3, *m3p, lambda, *m1};
}

Character m_char(Weight lambda, int p) {
  const MFloor fl = m_floor(lambda, p);
  Character c(Basis::Simple);
  c.add(fl.mu2, 2);
  c.add(fl.mu3, 1);
  c.add(fl.mu3p, 1);
  c.add(fl.mu1, 1);
  return c;
}

Character to_simple_basis(const Character& c, int p) {
  if (c.basis() == Basis::Simple) return c;
  if (c.basis() != Basis::Weyl) throw DomainError("to_simple_basis expects a Weyl-basis character");
  Character rest = c;
  Character out(Basis::Simple);
  while (auto top = rest.top()) {
    const Coeff k = rest.coeff(*top);
    out.add(*top, k);
    rest.add_scaled(simple_char(*top, p), -k);
  }
  return out;
}

Character from_simple_basis(const Character& c, int p) {
  if (c.basis() == Basis::Weyl) return c;
  if (c.basis() != Basis::Simple) throw DomainError("from_simple_basis expects a simple-basis character");
  Character out(Basis::Weyl);
  for (const auto& [w, k] : c.terms()) out.add_scaled(simple_char(w, p), k);
  return out;
}

Coeff simple_dim(Weight lambda, int p) { return dimension(simple_char(lambda, p)); }

Coeff dimension(const Character& c, int p) {
  if (c.basis() != Basis::Simple) return dimension(c);
  Coeff total = 0;
  for (const auto& [w, k] : c.terms()) total = checked_add(total, checked_mul(k, simple_dim(w, p)));
  return total;
}

}  // namespace sl3
