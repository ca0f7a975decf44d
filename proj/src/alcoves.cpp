#include "sl3/alcoves.hpp"

#include <array>
#include <map>
#include <memory>
#include <mutex>

#include "sl3/errors.hpp"

namespace sl3 {

namespace {

struct AlcoveInfo {
  Alcove id;
  int number;
  bool primed;
  const char* name;
};

constexpr std::array<AlcoveInfo, 14> kAlcoves{{
    {Alcove::A1, 1, false, "1"},   {Alcove::A2, 2, false, "2"},   {Alcove::A3, 3, false, "3"},
    {Alcove::A3p, 3, true, "3'"},  {Alcove::A4, 4, false, "4"},   {Alcove::A4p, 4, true, "4'"},
    {Alcove::A5, 5, false, "5"},   {Alcove::A6, 6, false, "6"},   {Alcove::A6p, 6, true, "6'"},
    {Alcove::A7, 7, false, "7"},   {Alcove::A8, 8, false, "8"},   {Alcove::A8p, 8, true, "8'"},
    {Alcove::A9, 9, false, "9"},   {Alcove::A9p, 9, true, "9'"},
}};

const AlcoveInfo& info(Alcove c) { return kAlcoves[static_cast<int>(c)]; }

using A = Alcove;

// Walls of the region, with 7'|9' written 7|9'.
constexpr std::array<std::pair<Alcove, Alcove>, 16> kWalls{{
    {A::A1, A::A2},  {A::A2, A::A3},  {A::A2, A::A3p}, {A::A3, A::A4},
    {A::A3p, A::A4p}, {A::A4, A::A5},  {A::A4p, A::A5}, {A::A4, A::A6},
    {A::A4p, A::A6p}, {A::A5, A::A7},  {A::A6, A::A8},  {A::A6p, A::A8p},
    {A::A7, A::A9},  {A::A7, A::A9p}, {A::A8, A::A9},  {A::A8p, A::A9p},
}};

// Cell scheme: (i, j, upper) -> alcove, i = floor(r/p), j = floor(s/p).
std::optional<Alcove> cell_alcove(int i, int j, bool upper) {
  struct Cell { int i, j; bool upper; Alcove c; };
  static constexpr std::array<Cell, 14> cells{{
      {0, 0, false, A::A1}, {0, 0, true, A::A2},  {1, 0, false, A::A3}, {1, 0, true, A::A4},
      {0, 1, false, A::A3p}, {0, 1, true, A::A4p}, {1, 1, false, A::A5}, {1, 1, true, A::A7},
      {2, 0, false, A::A6}, {2, 0, true, A::A8},  {0, 2, false, A::A6p}, {0, 2, true, A::A8p},
      {2, 1, false, A::A9}, {1, 2, false, A::A9p},
  }};
  for (const auto& c : cells)
    if (c.i == i && c.j == j && c.upper == upper) return c.c;
  return std::nullopt;
}

// Open-alcove lookup on doubled coordinates, none of which is a multiple of P = 2p.
std::optional<Alcove> open_alcove(int R, int S, int P) {
  if (R <= 0 || S <= 0) return std::nullopt;
  const int i = R / P, j = S / P, k = (R + S) / P;
  if (k == i + j) return cell_alcove(i, j, false);
  if (k == i + j + 1) return cell_alcove(i, j, true);
  return std::nullopt;
}

}  // namespace

int alcove_number(Alcove c) { return info(c).number; }
bool is_primed(Alcove c) { return info(c).primed; }

Alcove sigma(Alcove c) {
  switch (c) {
    case A::A3: return A::A3p;
    case A::A3p: return A::A3;
    case A::A4: return A::A4p;
    case A::A4p: return A::A4;
    case A::A6: return A::A6p;
    case A::A6p: return A::A6;
    case A::A8: return A::A8p;
    case A::A8p: return A::A8;
    case A::A9: return A::A9p;
    case A::A9p: return A::A9;
    default: return c;
  }
}

Facet Facet::wall(Alcove x, Alcove y) {
  if (alcove_number(y) < alcove_number(x) || (x != y && alcove_number(x) == alcove_number(y) && is_primed(x)))
    std::swap(x, y);
  return {FacetKind::Wall, x, y, Vertex::Rho};
}

Facet sigma(Facet f) {
  switch (f.kind) {
    case FacetKind::Alcove: return Facet::alcove(sigma(f.lo));
    case FacetKind::Wall: return Facet::wall(sigma(f.lo), sigma(f.hi));
    case FacetKind::Vertex:
      if (f.vertex == Vertex::V1) return Facet::at_vertex(Vertex::V2);
      if (f.vertex == Vertex::V2) return Facet::at_vertex(Vertex::V1);
      return f;
    case FacetKind::Out: return f;
  }
  return f;
}

std::string to_string(Alcove c) { return info(c).name; }

namespace {
std::string alcove_token(Alcove c) {
  return std::to_string(alcove_number(c)) + (is_primed(c) ? "p" : "");
}
}  // namespace

std::string to_string(Facet f) {
  switch (f.kind) {
    case FacetKind::Alcove: return "C" + alcove_token(f.lo);
    case FacetKind::Wall: return "W" + alcove_token(f.lo) + "|" + alcove_token(f.hi);
    case FacetKind::Vertex:
      return f.vertex == Vertex::Rho ? "Vrho" : (f.vertex == Vertex::V1 ? "V1" : "V2");
    case FacetKind::Out: return "out";
  }
  return "out";
}

namespace {
std::optional<Alcove> parse_alcove_token(std::string_view s) {
  for (const auto& a : kAlcoves)
    if (alcove_token(a.id) == s) return a.id;
  return std::nullopt;
}
}  // namespace

Facet parse_facet(std::string_view text) {
  const std::string s(text);
  if (s == "Vrho") return Facet::at_vertex(Vertex::Rho);
  if (s == "V1") return Facet::at_vertex(Vertex::V1);
  if (s == "V2") return Facet::at_vertex(Vertex::V2);
  if (s == "out") return Facet::out();
  if (s.size() >= 2 && s[0] == 'C') {
    if (auto c = parse_alcove_token(text.substr(1))) return Facet::alcove(*c);
  }
  if (s.size() >= 4 && s[0] == 'W') {
    const auto bar = s.find('|');
    if (bar != std::string::npos) {
      auto x = parse_alcove_token(text.substr(1, bar - 1));
      auto y = parse_alcove_token(text.substr(bar + 1));
      if (x && y && is_region_wall(*x, *y)) return Facet::wall(*x, *y);
    }
  }
  throw DomainError("unknown facet label '" + s + "'");
}

bool is_region_wall(Alcove x, Alcove y) {
  const Facet f = Facet::wall(x, y);
  for (auto [u, v] : kWalls)
    if (f.lo == u && f.hi == v) return true;
  return false;
}

const std::vector<Facet>& region_facets() {
  static const std::vector<Facet> all = [] {
    std::vector<Facet> v;
    for (const auto& a : kAlcoves) v.push_back(Facet::alcove(a.id));
    for (auto [x, y] : kWalls) v.push_back(Facet::wall(x, y));
    for (Vertex x : {Vertex::Rho, Vertex::V1, Vertex::V2}) v.push_back(Facet::at_vertex(x));
    return v;
  }();
  return all;
}

Facet classify(Weight w, int p) {
  if (!is_dominant(w)) throw DomainError("classify: non-dominant weight " + format_weight(w));
  const auto [r, s, t] = pairings(w);
  const bool sr = r % p == 0, ss = s % p == 0, st = t % p == 0;
  const int singular = int(sr) + int(ss) + int(st);
  if (singular >= 2) {
    if (r == p && s == p) return Facet::at_vertex(Vertex::Rho);
    if (r == 2 * p && s == p) return Facet::at_vertex(Vertex::V1);
    if (r == p && s == 2 * p) return Facet::at_vertex(Vertex::V2);
    return Facet::out();
  }
  const int R = 2 * r, S = 2 * s, P = 2 * p;
  if (singular == 0) {
    auto c = open_alcove(R, S, P);
    return c ? Facet::alcove(*c) : Facet::out();
  }
  // One singular pairing: step half a unit to either side of the wall.
  std::optional<Alcove> x, y;
  if (sr) {
    x = open_alcove(R - 1, S, P);
    y = open_alcove(R + 1, S, P);
  } else if (ss) {
    x = open_alcove(R, S - 1, P);
    y = open_alcove(R, S + 1, P);
  } else {
    x = open_alcove(R - 1, S, P);
    y = open_alcove(R + 1, S, P);
  }
  if (!x || !y || !is_region_wall(*x, *y)) return Facet::out();
  return Facet::wall(*x, *y);
}

Weight canonical_rep(Weight w, int p) {
  if (!is_dominant(w)) throw DomainError("canonical_rep: non-dominant weight " + format_weight(w));
  int r = w.a + 1, s = w.b + 1;
  for (;;) {
    if (r < 0) {
      const int k = r;  // reflect in r = 0
      r = -r;
      s += k;
    } else if (s < 0) {
      const int k = s;
      s = -s;
      r += k;
    } else if (r + s > p) {
      const int k = r + s - p;  // reflect in t = p
      r -= k;
      s -= k;
    } else {
      break;
    }
  }
  return {r - 1, s - 1};
}

bool is_regular_rep(Weight rep, int p) {
  const auto [r, s, t] = pairings(rep);
  return r > 0 && s > 0 && t < p;
}

bool is_restricted(Weight w, int p) { return w.a >= 0 && w.b >= 0 && w.a < p && w.b < p; }

namespace {

struct LinkTable {
  std::map<std::pair<Weight, Facet>, Weight> entries;
};

std::shared_ptr<const LinkTable> build_link_table(int p) {
  auto t = std::make_shared<LinkTable>();
  // The region sits inside r <= 3p, s <= 3p.
  for (int a = 0; a <= 3 * p; ++a) {
    for (int b = 0; b <= 3 * p; ++b) {
      const Weight w{a, b};
      const Facet f = classify(w, p);
      if (!f.in_region()) continue;
      auto [it, fresh] = t->entries.emplace(std::make_pair(canonical_rep(w, p), f), w);
      if (!fresh)
        throw IntegrityError("linkage table p=" + std::to_string(p),
                             "two weights " + format_weight(it->second) + " and " + format_weight(w) +
                                 " in facet " + to_string(f) + " share a linkage class");
    }
  }
  return t;
}

std::shared_ptr<const LinkTable> link_table(int p) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const LinkTable>> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(p); it != cache.end()) return it->second;
  }
  auto t = build_link_table(p);
  std::lock_guard lock(mu);
  return cache.emplace(p, std::move(t)).first->second;
}

}  // namespace

std::optional<Weight> linked_weight(Weight w, Facet target, int p) {
  require_prime(p);
  if (!classify(w, p).in_region())
    throw DomainError("linked_weight: " + format_weight(w) + " lies outside the region");
  if (!target.in_region()) return std::nullopt;
  const auto table = link_table(p);
  auto it = table->entries.find({canonical_rep(w, p), target});
  if (it == table->entries.end()) return std::nullopt;
  return it->second;
}

}  // namespace sl3
