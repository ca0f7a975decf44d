#include "sl3/decompose.hpp"

#include <algorithm>
#include <array>

#include "sl3/alcoves.hpp"
#include "sl3/modchar.hpp"
#include "sl3/weylchar.hpp"

namespace sl3 {

std::string kind_symbol(SummandKind k) {
  switch (k) {
    case SummandKind::T: return "T";
    case SummandKind::L: return "L";
    case SummandKind::M: return "M";
  }
  return "T";
}

namespace {

void require_restricted(Weight w, int p) {
  if (!is_restricted(w, p))
    throw DomainError(format_weight(w) + " is not restricted for p=" + std::to_string(p));
}

bool in_c2(Weight w, int p) { return classify(w, p).is_alcove(Alcove::A2); }

std::string block_name(Weight rep) { return "[" + format_weight(rep) + "]"; }

}  // namespace

Character tensor_char(Weight nu, Weight nu2, int p) {
  require_prime(p);
  require_restricted(nu, p);
  require_restricted(nu2, p);
  return mult(simple_char(nu, p), simple_char(nu2, p));
}

std::map<Weight, Character> split_blocks(const Character& c, int p) {
  std::map<Weight, Character> blocks;
  for (const auto& [w, k] : c.terms()) {
    auto [it, fresh] = blocks.try_emplace(canonical_rep(w, p), Character(c.basis()));
    it->second.add(w, k);
  }
  return blocks;
}

GreedyResult greedy_tilting(const Character& block, int p, const std::set<Weight>& floor, bool c2_simples,
                            const std::string& block_id) {
  const std::string id = block_id.empty() ? "(unnamed)" : block_id;
  Character rest = to_simple_basis(block, p);
  GreedyResult res;
  for (;;) {
    std::optional<Weight> top;
    for (const auto& [w, k] : rest.terms())
      if (!floor.count(w) && (!top || HigherFirst{}(w, *top))) top = w;
    if (!top) break;
    const Coeff k = rest.coeff(*top);
    if (k < 0)
      throw IntegrityError(id, "negative coefficient " + std::to_string(k) + " at maximal weight " +
                                   format_weight(*top));
    const bool as_simple = c2_simples && in_c2(*top, p);
    const Character piece = as_simple ? Character::unit(Basis::Simple, *top) : tilting_char_simple(*top, p);
    rest.add_scaled(piece, -k);
    for (const auto& [w, c] : rest.terms())
      if (c < 0)
        throw IntegrityError(id, "subtracting " + std::to_string(k) + " x " + (as_simple ? "L(" : "T(") +
                                     format_weight(*top) + ") leaves coefficient " + std::to_string(c) +
                                     " at " + format_weight(w));
    res.summands.push_back({as_simple ? SummandKind::L : SummandKind::T, *top, k});
  }
  res.residual = block.basis() == Basis::Simple ? rest : from_simple_basis(rest, p);
  return res;
}

namespace {

// Exact solve of the (possibly reduced) floor system by elimination over
// rationals held as numerator/denominator int64 pairs; the system is 4x4 at most.
struct Frac {
  Coeff n = 0, d = 1;
};

Frac norm(Frac f) {
  if (f.d < 0) f = {-f.n, -f.d};
  Coeff a = f.n < 0 ? -f.n : f.n, b = f.d;
  while (b) {
    const Coeff t = a % b;
    a = b;
    b = t;
  }
  if (a > 1) f = {f.n / a, f.d / a};
  return f;
}
Frac sub(Frac x, Frac y) { return norm({checked_sub(checked_mul(x.n, y.d), checked_mul(y.n, x.d)), checked_mul(x.d, y.d)}); }
Frac mul(Frac x, Frac y) { return norm({checked_mul(x.n, y.n), checked_mul(x.d, y.d)}); }
Frac divf(Frac x, Frac y) { return norm({checked_mul(x.n, y.d), checked_mul(x.d, y.n)}); }

}  // namespace

FloorSolution case3_floor_solve(Coeff a3, Coeff a3p, Coeff a2, Coeff a1, bool has3, bool has3p, bool has2,
                                bool has1, const std::string& block_id) {
  const std::string id = block_id.empty() ? "(floor)" : block_id;
  // Columns x, y, z, w; rows are the floor weights 3, 3', 2, 1.
  static constexpr int A[4][4] = {{1, 0, 0, 1}, {0, 1, 0, 1}, {2, 2, 1, 2}, {1, 1, 2, 2}};
  const std::array<Coeff, 4> rhs{a3, a3p, a2, a1};
  const std::array<bool, 4> row_ok{has3, has3p, has2, has1};
  // x needs mu3 (and the floor below it), y needs mu3', z needs mu2, w needs all four.
  const std::array<bool, 4> col_ok{has3 && has2 && has1, has3p && has2 && has1, has2 && has1,
                                   has3 && has3p && has2 && has1};
  for (int i = 0; i < 4; ++i)
    if (!row_ok[i] && rhs[i] != 0) throw IntegrityError(id, "residual at a missing floor weight");
  std::vector<int> cols, rows;
  for (int j = 0; j < 4; ++j)
    if (col_ok[j]) cols.push_back(j);
  for (int i = 0; i < 4; ++i)
    if (row_ok[i]) rows.push_back(i);
  const int nr = int(rows.size()), nc = int(cols.size());
  std::vector<std::vector<Frac>> M(nr, std::vector<Frac>(nc + 1));
  for (int i = 0; i < nr; ++i) {
    for (int j = 0; j < nc; ++j) M[i][j] = {A[rows[i]][cols[j]], 1};
    M[i][nc] = {rhs[rows[i]], 1};
  }
  std::vector<int> pivot_col;
  int r = 0;
  for (int j = 0; j < nc && r < nr; ++j) {
    int piv = -1;
    for (int i = r; i < nr; ++i)
      if (M[i][j].n != 0) { piv = i; break; }
    if (piv < 0) continue;
    std::swap(M[piv], M[r]);
    for (int i = 0; i < nr; ++i) {
      if (i == r || M[i][j].n == 0) continue;
      const Frac f = divf(M[i][j], M[r][j]);
      for (int k = j; k <= nc; ++k) M[i][k] = sub(M[i][k], mul(f, M[r][k]));
    }
    pivot_col.push_back(j);
    ++r;
  }
  for (int i = r; i < nr; ++i)
    if (M[i][nc].n != 0) throw IntegrityError(id, "floor system is inconsistent");
  if (r < nc) throw IntegrityError(id, "floor system is underdetermined");
  std::array<Coeff, 4> val{0, 0, 0, 0};
  for (int i = 0; i < r; ++i) {
    const Frac v = divf(M[i][nc], M[i][pivot_col[i]]);
    if (v.d != 1) throw IntegrityError(id, "floor solve is not integral");
    if (v.n < 0) throw IntegrityError(id, "floor solve has a negative multiplicity");
    val[cols[pivot_col[i]]] = v.n;
  }
  return {val[0], val[1], val[2], val[3]};
}

FloorSolution case3_floor_solve(Coeff a3, Coeff a3p, Coeff a2, Coeff a1) {
  return case3_floor_solve(a3, a3p, a2, a1, true, true, true, true);
}

Character summand_char(const Summand& s, int p) {
  switch (s.kind) {
    case SummandKind::T: return tilting_char(s.weight, p);
    case SummandKind::L: return simple_char(s.weight, p);
    case SummandKind::M: return from_simple_basis(m_char(s.weight, p), p);
  }
  return {};
}

Coeff summand_dim(const Summand& s, int p) { return dimension(summand_char(s, p)); }

void canonicalize(std::vector<Summand>& v) {
  auto kind_rank = [](SummandKind k) { return k == SummandKind::M ? 0 : (k == SummandKind::L ? 1 : 2); };
  std::sort(v.begin(), v.end(), [&](const Summand& x, const Summand& y) {
    if (x.weight != y.weight) return HigherFirst{}(x.weight, y.weight);
    return kind_rank(x.kind) < kind_rank(y.kind);
  });
  std::vector<Summand> merged;
  for (const Summand& s : v) {
    if (!merged.empty() && merged.back().kind == s.kind && merged.back().weight == s.weight)
      merged.back().mult = checked_add(merged.back().mult, s.mult);
    else
      merged.push_back(s);
  }
  v = std::move(merged);
}

Decomposition decompose(Weight nu, Weight nu2, int p) {
  Decomposition d;
  d.p = p;
  d.left = nu;
  d.right = nu2;
  const Character ch = tensor_char(nu, nu2, p);
  const bool c2a = in_c2(nu, p), c2b = in_c2(nu2, p);
  d.product_case = (c2a && c2b) ? 3 : ((c2a || c2b) ? 2 : 1);
  d.dim_product = checked_mul(simple_dim(nu, p), simple_dim(nu2, p));

  for (const auto& [rep, block] : split_blocks(ch, p)) {
    const std::string id = block_name(rep);
    std::set<Weight> floor;
    std::optional<MFloor> fl;
    std::array<bool, 4> has{false, false, false, false};
    if (d.product_case == 3 && is_regular_rep(rep, p)) {
      const std::array<Alcove, 4> facets{Alcove::A3, Alcove::A3p, Alcove::A2, Alcove::A1};
      std::array<Weight, 4> w{};
      for (int i = 0; i < 4; ++i) {
        if (auto x = linked_weight(rep, Facet::alcove(facets[i]), p)) {
          has[i] = true;
          w[i] = *x;
          floor.insert(*x);
        }
      }
      fl = MFloor{w[0], w[1], w[2], w[3]};
    }
    GreedyResult g = greedy_tilting(block, p, floor, d.product_case == 2, id);
    d.summands.insert(d.summands.end(), g.summands.begin(), g.summands.end());
    if (g.residual.empty()) continue;
    if (!fl) throw IntegrityError(id, "nonzero remainder " + to_string(g.residual));
    const Character s = to_simple_basis(g.residual, p);
    for (const auto& [w, k] : s.terms())
      if (!floor.count(w)) throw IntegrityError(id, "remainder outside the floor at " + format_weight(w));
    const FloorSolution sol = case3_floor_solve(s.coeff(fl->mu3), s.coeff(fl->mu3p), s.coeff(fl->mu2),
                                                s.coeff(fl->mu1), has[0], has[1], has[2], has[3], id);
    if (sol.x) d.summands.push_back({SummandKind::T, fl->mu3, sol.x});
    if (sol.y) d.summands.push_back({SummandKind::T, fl->mu3p, sol.y});
    if (sol.z) d.summands.push_back({SummandKind::T, fl->mu2, sol.z});
    if (sol.w) {
      d.summands.push_back({SummandKind::M, fl->mu2, sol.w});
      d.summands.push_back({SummandKind::T, fl->mu1, sol.w});
    }
  }
  canonicalize(d.summands);

  Character total(Basis::Weyl);
  for (const Summand& s : d.summands) total.add_scaled(summand_char(s, p), s.mult);
  if (total != ch)
    throw IntegrityError("(all)", "summand characters do not add up to the tensor character");
  return d;
}

VerifyReport verify(const Decomposition& d, const VerifyOptions& opt) {
  VerifyReport rep;
  const int p = d.p;
  auto fail = [&](std::string msg) { rep.failures.push_back(std::move(msg)); };
  try {
    Character expect(Basis::Weyl);
    if (opt.monomial_oracle) {
      const Character x = from_simple_basis(Character::unit(Basis::Simple, d.left), p);
      const Character y = from_simple_basis(Character::unit(Basis::Simple, d.right), p);
      Character mx(Basis::Monomial), my(Basis::Monomial);
      for (const auto& [w, k] : x.terms()) mx.add_scaled(weyl_to_monomial(w), k);
      for (const auto& [w, k] : y.terms()) my.add_scaled(weyl_to_monomial(w), k);
      expect = monomial_to_weyl(monomial_product(mx, my));
    } else {
      expect = mult(simple_char(d.left, p), simple_char(d.right, p));
    }
    Character total(Basis::Weyl);
    Coeff dim = 0;
    for (const Summand& s : d.summands) {
      if (s.mult <= 0) fail("non-positive multiplicity for " + kind_symbol(s.kind) + "(" + format_weight(s.weight) + ")");
      total.add_scaled(summand_char(s, p), s.mult);
      dim = checked_add(dim, checked_mul(s.mult, summand_dim(s, p)));
    }
    rep.character_ok = total == expect;
    if (!rep.character_ok) fail("character sum differs from the tensor character");
    const Coeff want = checked_mul(simple_dim(d.left, p), simple_dim(d.right, p));
    rep.dimension_ok = dim == want && d.dim_product == want;
    if (!rep.dimension_ok)
      fail("dimension " + std::to_string(dim) + " != " + std::to_string(want));

    rep.shape_ok = true;
    for (const Summand& s : d.summands) {
      const Facet f = classify(s.weight, p);
      const bool good = s.kind == SummandKind::T ? f.in_region() : f.is_alcove(Alcove::A2);
      if (!good) {
        rep.shape_ok = false;
        fail(kind_symbol(s.kind) + "(" + format_weight(s.weight) + ") has facet " + to_string(f));
      }
      if (s.kind == SummandKind::M && d.product_case != 3) {
        rep.shape_ok = false;
        fail("M summand outside case 3");
      }
      if (s.kind == SummandKind::L && d.product_case == 1) {
        rep.shape_ok = false;
        fail("L summand in case 1");
      }
    }

    if (opt.tau_check) {
      const Decomposition m = decompose(tau(d.right), tau(d.left), p);
      std::vector<Summand> image = d.summands;
      for (Summand& s : image) s.weight = tau(s.weight);
      canonicalize(image);
      rep.tau_ok = image == m.summands;
      if (!rep.tau_ok) fail("tau-image differs from the decomposition of the swapped mirror pair");
    } else {
      rep.tau_ok = true;
    }
  } catch (const std::exception& e) {
    fail(std::string("exception: ") + e.what());
  }
  return rep;
}

std::string to_text(const Decomposition& d) {
  std::string s;
  for (const Summand& x : d.summands) {
    if (!s.empty()) s += " + ";
    if (x.mult != 1) s += std::to_string(x.mult) + "*";
    s += kind_symbol(x.kind) + "(" + format_weight(x.weight) + ")";
  }
  return s.empty() ? "0" : s;
}

nlohmann::json to_json(const Decomposition& d, bool verified) {
  nlohmann::json sm = nlohmann::json::array();
  for (const Summand& x : d.summands)
    sm.push_back({{"kind", kind_symbol(x.kind)}, {"weight", {x.weight.a, x.weight.b}}, {"mult", x.mult}});
  return {{"p", d.p},
          {"lhs", {d.left.a, d.left.b}},
          {"rhs", {d.right.a, d.right.b}},
          {"case", d.product_case},
          {"summands", sm},
          {"dim", d.dim_product},
          {"verified", verified}};
}

}  // namespace sl3
