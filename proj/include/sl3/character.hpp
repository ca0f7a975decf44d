#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "sl3/errors.hpp"
#include "sl3/weights.hpp"

namespace sl3 {

// Weyl: chi(lambda); Simple: chi_p(lambda); Monomial: weight multiplicities e(mu).
enum class Basis { Weyl, Simple, Monomial };

std::string basis_name(Basis b);
Basis parse_basis(std::string_view name);

class Character {
 public:
  Character() = default;
  explicit Character(Basis b) : basis_(b) {}
  static Character unit(Basis b, Weight w, Coeff c = 1);

  Basis basis() const { return basis_; }
  Coeff coeff(Weight w) const;
  void add(Weight w, Coeff c);
  Character& add_scaled(const Character& other, Coeff k);
  Character& operator+=(const Character& o) { return add_scaled(o, 1); }
  Character& operator-=(const Character& o) { return add_scaled(o, -1); }

  const std::map<Weight, Coeff>& terms() const { return terms_; }
  std::vector<std::pair<Weight, Coeff>> sorted_terms() const;  // (t,r) descending
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  // Highest support weight in (t,r) order.
  std::optional<Weight> top() const;
  bool nonnegative() const;
  Character tau() const;

  friend bool operator==(const Character&, const Character&) = default;

 private:
  Basis basis_ = Basis::Weyl;
  std::map<Weight, Coeff> terms_;
};

Character operator+(Character x, const Character& y);
Character operator-(Character x, const Character& y);
Character operator*(Coeff k, const Character& x);

// "chi(6,2) + 2 chi(2,4)"; "0" for the zero character.
std::string to_string(const Character& c);
nlohmann::json to_json(const Character& c);

}  // namespace sl3
