#include "sl3/weylchar.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

namespace sl3 {

std::vector<Weight> weyl_orbit(Weight w) {
  std::vector<Weight> orbit{w};
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    const Weight x = orbit[i];
    for (Weight y : {Weight{-x.a, x.a + x.b}, Weight{x.a + x.b, -x.b}})
      if (std::find(orbit.begin(), orbit.end(), y) == orbit.end()) orbit.push_back(y);
  }
  return orbit;
}

namespace {

// Dominant weights mu <= lambda have multiplicity 1 + min(c1, c2, a, b)
// where lambda - mu = c1 alpha1 + c2 alpha2.
Character shell_rule(Weight lambda) {
  Character out(Basis::Monomial);
  const int h = lambda.a + lambda.b;
  for (int a = 0; a <= h; ++a) {
    for (int b = 0; a + b <= h; ++b) {
      const Weight mu{a, b};
      if (!dominance_leq(mu, lambda)) continue;
      const Weight d = lambda - mu;
      const int c1 = (2 * d.a + d.b) / 3, c2 = (d.a + 2 * d.b) / 3;
      const Coeff m = 1 + std::min({c1, c2, lambda.a, lambda.b});
      for (Weight x : weyl_orbit(mu)) out.add(x, m);
    }
  }
  return out;
}

template <class Key, class Hash>
class MemoCache {
 public:
  template <class F>
  Character get(const Key& k, F compute) {
    {
      std::shared_lock lock(mu_);
      if (auto it = map_.find(k); it != map_.end()) return it->second;
    }
    Character v = compute();
    std::unique_lock lock(mu_);
    return map_.try_emplace(k, std::move(v)).first->second;
  }

 private:
  std::shared_mutex mu_;
  std::unordered_map<Key, Character, Hash> map_;
};

struct PairHash {
  std::size_t operator()(const std::pair<Weight, Weight>& k) const noexcept {
    return WeightHash{}(k.first) * 1000003u ^ WeightHash{}(k.second);
  }
};

// GL3 Littlewood-Richardson: skew shape nu/lambda filled with content mu
// (mu3 = 0), x_ij = number of j's in row i.
Character lr_uncached(Weight l, Weight m) {
  const int l1 = l.a + l.b, l2 = l.b, l3 = 0;
  const int m1 = m.a + m.b, m2 = m.b;
  Character out(Basis::Weyl);
  for (int x21 = 0; x21 <= m1; ++x21) {
    if (l2 + x21 > l1) break;
    for (int x31 = 0; x21 + x31 <= m1; ++x31) {
      if (l3 + x31 > l2) break;
      const int x11 = m1 - x21 - x31;
      for (int x22 = 0; x22 <= m2; ++x22) {
        const int x32 = m2 - x22;
        if (x22 > x11) break;
        if (x22 + x32 > x11 + x21) continue;
        if (l3 + x31 + x32 > l2 + x21) continue;
        const int n1 = l1 + x11, n2 = l2 + x21 + x22, n3 = l3 + x31 + x32;
        if (n2 > n1 || n3 > n2) continue;
        out.add({n1 - n2, n2 - n3}, 1);
      }
    }
  }
  return out;
}

}  // namespace

Character weyl_to_monomial(Weight lambda) {
  if (!is_dominant(lambda)) throw DomainError("weyl_to_monomial: non-dominant " + format_weight(lambda));
  static MemoCache<Weight, WeightHash> cache;
  return cache.get(lambda, [&] { return shell_rule(lambda); });
}

Character monomial_to_weyl(const Character& c) {
  if (c.basis() != Basis::Monomial) throw DomainError("monomial_to_weyl expects a monomial character");
  for (const auto& [w, k] : c.terms())
    for (Weight x : weyl_orbit(w))
      if (c.coeff(x) != k)
        throw DomainError("monomial_to_weyl: character is not W-symmetric at " + format_weight(w));
  Character rest = c;
  Character out(Basis::Weyl);
  // Each round removes the highest dominant weight; bounded by the support size.
  std::size_t guard = c.size() + 1;
  while (!rest.empty()) {
    if (guard-- == 0) throw DomainError("monomial_to_weyl: leading-term subtraction did not terminate");
    std::optional<Weight> best;
    for (const auto& [w, k] : rest.terms())
      if (is_dominant(w) && (!best || HigherFirst{}(w, *best))) best = w;
    if (!best) throw DomainError("monomial_to_weyl: no dominant leading term");
    const Coeff k = rest.coeff(*best);
    out.add(*best, k);
    rest.add_scaled(weyl_to_monomial(*best), -k);
  }
  return out;
}

Character monomial_product(const Character& x, const Character& y) {
  if (x.basis() != Basis::Monomial || y.basis() != Basis::Monomial)
    throw DomainError("monomial_product expects monomial characters");
  Character out(Basis::Monomial);
  for (const auto& [u, c] : x.terms())
    for (const auto& [v, d] : y.terms()) out.add(u + v, checked_mul(c, d));
  return out;
}

Character lr_tensor(Weight lambda, Weight mu) {
  if (!is_dominant(lambda) || !is_dominant(mu))
    throw DomainError("lr_tensor: non-dominant argument");
  // Fewer fillings when the smaller factor supplies the content.
  if (mu.a + mu.b > lambda.a + lambda.b) std::swap(lambda, mu);
  static MemoCache<std::pair<Weight, Weight>, PairHash> cache;
  return cache.get({lambda, mu}, [&] { return lr_uncached(lambda, mu); });
}

Character mult(const Character& x, const Character& y) {
  if (x.basis() != Basis::Weyl || y.basis() != Basis::Weyl)
    throw DomainError("mult expects Weyl-basis characters");
  Character out(Basis::Weyl);
  for (const auto& [u, c] : x.terms())
    for (const auto& [v, d] : y.terms()) out.add_scaled(lr_tensor(u, v), checked_mul(c, d));
  return out;
}

Coeff dimension(const Character& c) {
  Coeff total = 0;
  switch (c.basis()) {
    case Basis::Weyl:
      for (const auto& [w, k] : c.terms()) total = checked_add(total, checked_mul(k, dim_weyl(w)));
      return total;
    case Basis::Monomial:
      for (const auto& [w, k] : c.terms()) total = checked_add(total, k);
      return total;
    case Basis::Simple:
      throw DomainError("dimension of a simple-basis character needs p; use modchar");
  }
  return total;
}

}  // namespace sl3
