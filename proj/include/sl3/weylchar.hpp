#pragma once

#include "sl3/character.hpp"

namespace sl3 {

// Weight multiplicities of chi(lambda) (A2 shell rule), memoized.
Character weyl_to_monomial(Weight lambda);
Character monomial_to_weyl(const Character& c);
// Pointwise (convolution) product of two monomial characters.
Character monomial_product(const Character& x, const Character& y);
// chi(lambda) * chi(mu) by the Littlewood-Richardson rule.
Character lr_tensor(Weight lambda, Weight mu);
// Bilinear extension of lr_tensor to Weyl-basis characters.
Character mult(const Character& x, const Character& y);

// Sum of coeff * dim over a Weyl or Monomial character.
Coeff dimension(const Character& c);

// The W-orbit of a weight under s1(a,b) = (-a,a+b), s2(a,b) = (a+b,-b).
std::vector<Weight> weyl_orbit(Weight w);

}  // namespace sl3
