#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace sl3 {

// A weight a*w1 + b*w2 in fundamental-weight coordinates.
struct Weight {
  int a = 0;
  int b = 0;
  friend auto operator<=>(const Weight&, const Weight&) = default;
  Weight operator+(Weight o) const { return {a + o.a, b + o.b}; }
  Weight operator-(Weight o) const { return {a - o.a, b - o.b}; }
};

// <lambda+rho, alpha^vee> for alpha1, alpha2 and the highest root theta.
struct Pairings {
  int r;
  int s;
  int t;
  friend bool operator==(const Pairings&, const Pairings&) = default;
};

enum class Root { Alpha1, Alpha2, Theta };

inline constexpr Weight kRho{1, 1};
inline constexpr Weight kAlpha1{2, -1};
inline constexpr Weight kAlpha2{-1, 2};
inline constexpr Weight kTheta{1, 1};

Pairings pairings(Weight w);
Weight tau(Weight w);
bool is_dominant(Weight w);
bool dominance_leq(Weight mu, Weight lambda);
std::int64_t dim_weyl(Weight w);
Weight root_vector(Root alpha);
int root_pairing(Weight w, Root alpha);
Weight dot_reflect(Weight w, Root alpha, int m, int p);

bool is_prime(int n);
// Throws DomainError unless p is a prime >= 5.
void require_prime(int p);

// "a,b" with optional spaces.
Weight parse_weight(std::string_view text);
std::string format_weight(Weight w);  // "a,b"

// Total order refining dominance: larger t first, then larger r.
struct HigherFirst {
  bool operator()(Weight x, Weight y) const {
    const int tx = x.a + x.b, ty = y.a + y.b;
    if (tx != ty) return tx > ty;
    if (x.a != y.a) return x.a > y.a;
    return x.b > y.b;
  }
};

struct WeightHash {
  std::size_t operator()(Weight w) const noexcept {
    return std::hash<std::int64_t>{}((static_cast<std::int64_t>(w.a) << 32) ^
                                     static_cast<std::uint32_t>(w.b));
  }
};

}  // namespace sl3
