#include "sl3/character.hpp"

#include <algorithm>

namespace sl3 {

std::string basis_name(Basis b) {
  switch (b) {
    case Basis::Weyl: return "weyl";
    case Basis::Simple: return "simple";
    case Basis::Monomial: return "monomial";
  }
  return "weyl";
}

Basis parse_basis(std::string_view name) {
  if (name == "weyl") return Basis::Weyl;
  if (name == "simple") return Basis::Simple;
  if (name == "monomial") return Basis::Monomial;
  throw DomainError("unknown basis '" + std::string(name) + "'");
}

Character Character::unit(Basis b, Weight w, Coeff c) {
  Character x(b);
  x.add(w, c);
  return x;
}

Coeff Character::coeff(Weight w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? 0 : it->second;
}

void Character::add(Weight w, Coeff c) {
  if (c == 0) return;
  if (basis_ != Basis::Monomial && !is_dominant(w))
    throw DomainError("non-dominant weight " + format_weight(w) + " in " + basis_name(basis_) +
                      " basis");
  auto [it, fresh] = terms_.try_emplace(w, c);
  if (fresh) return;
  it->second = checked_add(it->second, c);
  if (it->second == 0) terms_.erase(it);
}

Character& Character::add_scaled(const Character& other, Coeff k) {
  if (other.basis_ != basis_) throw DomainError("adding characters in different bases");
  if (k == 0) return *this;
  if (&other == this) {
    const Character copy = other;
    return add_scaled(copy, k);
  }
  for (const auto& [w, c] : other.terms_) add(w, checked_mul(c, k));
  return *this;
}

std::vector<std::pair<Weight, Coeff>> Character::sorted_terms() const {
  std::vector<std::pair<Weight, Coeff>> v(terms_.begin(), terms_.end());
  std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return HigherFirst{}(x.first, y.first); });
  return v;
}

std::optional<Weight> Character::top() const {
  std::optional<Weight> best;
  for (const auto& [w, c] : terms_)
    if (!best || HigherFirst{}(w, *best)) best = w;
  return best;
}

bool Character::nonnegative() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.second > 0; });
}

Character Character::tau() const {
  Character x(basis_);
  for (const auto& [w, c] : terms_) x.add(sl3::tau(w), c);
  return x;
}

Character operator+(Character x, const Character& y) { return x += y; }
Character operator-(Character x, const Character& y) { return x -= y; }
Character operator*(Coeff k, const Character& x) {
  Character r(x.basis());
  return r.add_scaled(x, k);
}

std::string to_string(const Character& c) {
  if (c.empty()) return "0";
  const char* sym = c.basis() == Basis::Weyl ? "chi" : (c.basis() == Basis::Simple ? "chi_p" : "e");
  std::string out;
  bool first = true;
  for (const auto& [w, k] : c.sorted_terms()) {
    Coeff m = k;
    if (first) {
      if (m < 0) out += "-";
    } else {
      out += m < 0 ? " - " : " + ";
    }
    if (m < 0) m = -m;
    if (m != 1) out += std::to_string(m) + " ";
    out += std::string(sym) + "(" + format_weight(w) + ")";
    first = false;
  }
  return out;
}

nlohmann::json to_json(const Character& c) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [w, k] : c.sorted_terms())
    terms.push_back({{"weight", {w.a, w.b}}, {"coeff", k}});
  return {{"basis", basis_name(c.basis())}, {"terms", terms}};
}

}  // namespace sl3
