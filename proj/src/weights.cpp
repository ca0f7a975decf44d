#include "sl3/weights.hpp"

#include <charconv>

#include "sl3/errors.hpp"

namespace sl3 {

Pairings pairings(Weight w) { return {w.a + 1, w.b + 1, w.a + w.b + 2}; }

Weight tau(Weight w) { return {w.b, w.a}; }

bool is_dominant(Weight w) { return w.a >= 0 && w.b >= 0; }

bool dominance_leq(Weight mu, Weight lambda) {
  const Weight d = lambda - mu;
  const int n1 = 2 * d.a + d.b;
  const int n2 = d.a + 2 * d.b;
  return n1 >= 0 && n2 >= 0 && n1 % 3 == 0 && n2 % 3 == 0;
}

std::int64_t dim_weyl(Weight w) {
  if (!is_dominant(w)) throw DomainError("dim_weyl: non-dominant weight " + format_weight(w));
  const std::int64_t r = w.a + 1, s = w.b + 1;
  return r * s * (r + s) / 2;
}

Weight root_vector(Root alpha) {
  switch (alpha) {
    case Root::Alpha1: return kAlpha1;
    case Root::Alpha2: return kAlpha2;
    case Root::Theta: return kTheta;
  }
  return kTheta;
}

int root_pairing(Weight w, Root alpha) {
  const Pairings q = pairings(w);
  switch (alpha) {
    case Root::Alpha1: return q.r;
    case Root::Alpha2: return q.s;
    case Root::Theta: return q.t;
  }
  return q.t;
}

// s_{alpha,mp} . w = w - (<w+rho,alpha^vee> - mp) alpha
Weight dot_reflect(Weight w, Root alpha, int m, int p) {
  const int k = root_pairing(w, alpha) - m * p;
  const Weight v = root_vector(alpha);
  return {w.a - k * v.a, w.b - k * v.b};
}

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

void require_prime(int p) {
  if (p < 5 || !is_prime(p))
    throw DomainError("p = " + std::to_string(p) + " is not a prime >= 5");
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view s, std::string_view whole) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw DomainError("bad weight '" + std::string(whole) + "': expected \"a,b\"");
  return v;
}

}  // namespace

Weight parse_weight(std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos || text.find(',', comma + 1) != std::string_view::npos)
    throw DomainError("bad weight '" + std::string(text) + "': expected \"a,b\"");
  return {parse_int(text.substr(0, comma), text), parse_int(text.substr(comma + 1), text)};
}

std::string format_weight(Weight w) { return std::to_string(w.a) + "," + std::to_string(w.b); }

}  // namespace sl3
