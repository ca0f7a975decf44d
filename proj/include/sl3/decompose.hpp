#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "sl3/character.hpp"

namespace sl3 {

enum class SummandKind { T, L, M };
std::string kind_symbol(SummandKind k);

struct Summand {
  SummandKind kind = SummandKind::T;
  Weight weight;
  Coeff mult = 1;
  friend auto operator<=>(const Summand&, const Summand&) = default;
};

struct Decomposition {
  int p = 5;
  Weight left, right;
  int product_case = 1;  // 1, 2 or 3
  std::vector<Summand> summands;  // canonical order, merged multiplicities
  Coeff dim_product = 0;
};

Character tensor_char(Weight nu, Weight nu2, int p);
// Keyed by canonical representative of the linkage class.
std::map<Weight, Character> split_blocks(const Character& c, int p);

struct GreedyResult {
  std::vector<Summand> summands;
  Character residual;
};
// Greedy tilting resolution of one block. The block may be given in the Weyl or
// simple basis; the residual comes back in the same basis. Weights in `floor`
// are never selected. With `c2_simples`, C2 maxima become L summands.
GreedyResult greedy_tilting(const Character& block, int p, const std::set<Weight>& floor = {},
                            bool c2_simples = false, const std::string& block_id = "");

struct FloorSolution {
  Coeff x = 0, y = 0, z = 0, w = 0;
  friend bool operator==(const FloorSolution&, const FloorSolution&) = default;
};
// x+w = a3, y+w = a3', 2x+2y+z+2w = a2, x+y+2z+2w = a1.
FloorSolution case3_floor_solve(Coeff a3, Coeff a3p, Coeff a2, Coeff a1);
// Same system with the variables of missing floor weights removed.
FloorSolution case3_floor_solve(Coeff a3, Coeff a3p, Coeff a2, Coeff a1, bool has3, bool has3p, bool has2,
                                bool has1, const std::string& block_id = "");

Decomposition decompose(Weight nu, Weight nu2, int p);

// Weyl-basis character of a summand (one copy).
Character summand_char(const Summand& s, int p);
Coeff summand_dim(const Summand& s, int p);
void canonicalize(std::vector<Summand>& summands);

struct VerifyOptions {
  // Recompute the tensor character by monomial convolution instead of LR.
  bool monomial_oracle = false;
  bool tau_check = true;
};

struct VerifyReport {
  bool character_ok = false;
  bool dimension_ok = false;
  bool shape_ok = false;
  bool tau_ok = false;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};
VerifyReport verify(const Decomposition& d, const VerifyOptions& opt = {});

std::string to_text(const Decomposition& d);  // "M(1,3) + T(0,2) + ..."
nlohmann::json to_json(const Decomposition& d, bool verified);

}  // namespace sl3
