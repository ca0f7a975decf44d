#pragma once

#include <vector>

#include "sl3/character.hpp"

namespace sl3 {

// Highest weights of the composition factors of Delta(lambda), (t,r)-descending.
std::vector<Weight> weyl_comp_factors(Weight lambda, int p);

// Weyl-basis expansions, memoized per (p, lambda).
Character simple_char(Weight lambda, int p);
Character tilting_char(Weight lambda, int p);
// Tilting character rewritten in the simple basis.
Character tilting_char_simple(Weight lambda, int p);

struct MFloor {
  Weight mu3, mu3p, mu2, mu1;
};
// Linked weights of lambda in C3, C3', C2, C1; DomainError unless lambda is in C2
// and all of them are dominant.
MFloor m_floor(Weight lambda, int p);
// Simple-basis character 2 chi_p(lambda) + chi_p(mu3) + chi_p(mu3') + chi_p(mu1).
Character m_char(Weight lambda, int p);

Character to_simple_basis(const Character& c, int p);
Character from_simple_basis(const Character& c, int p);

Coeff simple_dim(Weight lambda, int p);
// Dimension of a character in any basis.
Coeff dimension(const Character& c, int p);

}  // namespace sl3
