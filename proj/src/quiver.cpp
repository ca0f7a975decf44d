#include "sl3/quiver.hpp"

#include <sstream>

#include "sl3/errors.hpp"

namespace sl3 {

int Quiver::add_vertex(const std::string& name) {
  if (find_vertex(name)) throw DomainError("duplicate vertex '" + name + "'");
  vertices_.push_back(name);
  return int(vertices_.size()) - 1;
}

int Quiver::add_arrow(const std::string& name, int source, int target) {
  if (find_arrow(name)) throw DomainError("duplicate arrow '" + name + "'");
  if (source < 0 || source >= vertex_count() || target < 0 || target >= vertex_count())
    throw DomainError("arrow '" + name + "' has an unknown endpoint");
  arrows_.push_back({name, source, target});
  return int(arrows_.size()) - 1;
}

std::optional<int> Quiver::find_vertex(std::string_view name) const {
  for (int i = 0; i < vertex_count(); ++i)
    if (vertices_[i] == name) return i;
  return std::nullopt;
}

std::optional<int> Quiver::find_arrow(std::string_view name) const {
  for (int i = 0; i < arrow_count(); ++i)
    if (arrows_[i].name == name) return i;
  return std::nullopt;
}

std::optional<Path> concat(const Path& p, const Path& q) {
  if (p.target != q.source) return std::nullopt;
  Path r{p.source, q.target, p.arrows};
  r.arrows.insert(r.arrows.end(), q.arrows.begin(), q.arrows.end());
  return r;
}

std::string to_string(const Quiver& q, const Path& p) {
  if (p.arrows.empty()) return "e(" + q.vertex_name(p.source) + ")";
  std::string s;
  for (std::size_t i = 0; i < p.arrows.size(); ++i) {
    if (i) s += ".";
    s += q.arrow(p.arrows[i]).name;
  }
  return s;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

}  // namespace

Path parse_path(const Quiver& q, std::string_view text) {
  text = trim(text);
  if (text.size() > 3 && text.substr(0, 2) == "e(" && text.back() == ')') {
    auto v = q.find_vertex(trim(text.substr(2, text.size() - 3)));
    if (!v) throw DomainError("unknown vertex in '" + std::string(text) + "'");
    return {*v, *v, {}};
  }
  Path p;
  bool first = true;
  for (auto tok : split(text, '.')) {
    auto a = q.find_arrow(trim(tok));
    if (!a) throw DomainError("unknown arrow '" + std::string(trim(tok)) + "'");
    const Arrow& ar = q.arrow(*a);
    if (first) {
      p.source = ar.source;
    } else if (p.target != ar.source) {
      throw DomainError("path '" + std::string(text) + "' does not compose");
    }
    p.target = ar.target;
    p.arrows.push_back(*a);
    first = false;
  }
  return p;
}

PathCombination parse_combination(const Quiver& q, std::string_view text) {
  PathCombination c;
  text = trim(text);
  if (text == "0") return c;
  std::size_t i = 0;
  while (i < text.size()) {
    int sign = 1;
    while (i < text.size() && (text[i] == '+' || text[i] == '-' || std::isspace(static_cast<unsigned char>(text[i])))) {
      if (text[i] == '-') sign = -sign;
      ++i;
    }
    std::size_t j = i;
    while (j < text.size() && text[j] != '+' && text[j] != '-') ++j;
    std::string_view term = trim(text.substr(i, j - i));
    if (term.empty()) throw DomainError("empty term in '" + std::string(text) + "'");
    Q k = sign;
    // optional integer coefficient: "2*a.b" or "2 a.b"
    std::size_t d = 0;
    while (d < term.size() && std::isdigit(static_cast<unsigned char>(term[d]))) ++d;
    if (d > 0 && d < term.size() && (term[d] == '*' || term[d] == ' ')) {
      k *= Q(std::string(term.substr(0, d)));
      term = trim(term.substr(d + 1));
    }
    c.terms.emplace_back(k, parse_path(q, term));
    i = j;
  }
  return c;
}

bool Presentation::has_duality() const {
  if (int(partner.size()) != quiver.arrow_count()) return false;
  for (int p : partner)
    if (p < 0) return false;
  return true;
}

Presentation parse_presentation(std::string_view text) {
  Presentation P;
  std::vector<std::string> relation_lines;
  int lineno = 0;
  for (auto raw : split(text, '\n')) {
    ++lineno;
    auto line = raw;
    if (auto h = line.find('#'); h != std::string_view::npos) line = line.substr(0, h);
    line = trim(line);
    if (line.empty()) continue;
    auto where = [&] { return " (line " + std::to_string(lineno) + ")"; };
    if (line.find('=') != std::string_view::npos) {
      relation_lines.emplace_back(line);
      continue;
    }
    const auto colon = line.find(':');
    if (colon == std::string_view::npos) throw DomainError("cannot parse presentation line" + where());
    const auto head = trim(line.substr(0, colon));
    const auto body = trim(line.substr(colon + 1));
    if (head == "vertices") {
      std::istringstream is{std::string(body)};
      std::string v;
      while (is >> v) P.quiver.add_vertex(v);
    } else if (head == "dual") {
      std::istringstream is{std::string(body)};
      std::string x, y;
      if (!(is >> x >> y)) throw DomainError("dual needs two arrows" + where());
      auto ax = P.quiver.find_arrow(x), ay = P.quiver.find_arrow(y);
      if (!ax || !ay) throw DomainError("dual names an unknown arrow" + where());
      const Arrow &u = P.quiver.arrow(*ax), &w = P.quiver.arrow(*ay);
      if (u.source != w.target || u.target != w.source)
        throw DomainError("dual pairing must reverse arrows" + where());
      P.partner.resize(P.quiver.arrow_count(), -1);
      P.partner[*ax] = *ay;
      P.partner[*ay] = *ax;
    } else {
      const auto arrow = body.find("->");
      if (arrow == std::string_view::npos) throw DomainError("expected 'name: src -> tgt'" + where());
      const std::string src(trim(body.substr(0, arrow))), tgt(trim(body.substr(arrow + 2)));
      auto s = P.quiver.find_vertex(src), t = P.quiver.find_vertex(tgt);
      const int si = s ? *s : P.quiver.add_vertex(src);
      const int ti = t ? *t : P.quiver.add_vertex(tgt);
      P.quiver.add_arrow(std::string(head), si, ti);
    }
  }
  if (!P.partner.empty()) P.partner.resize(P.quiver.arrow_count(), -1);
  for (const auto& line : relation_lines) {
    const auto eq = line.find('=');
    PathCombination lhs = parse_combination(P.quiver, std::string_view(line).substr(0, eq));
    PathCombination rhs = parse_combination(P.quiver, std::string_view(line).substr(eq + 1));
    for (auto& [k, p] : rhs.terms) lhs.terms.emplace_back(-k, p);
    if (lhs.terms.empty()) continue;
    const Path& f = lhs.terms.front().second;
    for (const auto& [k, p] : lhs.terms)
      if (p.source != f.source || p.target != f.target)
        throw DomainError("relation '" + line + "' mixes paths with different endpoints");
    P.relations.push_back(std::move(lhs));
  }
  return P;
}

namespace {

std::vector<Path> paths_of_length(const Quiver& q, int k) {
  std::vector<Path> cur;
  for (int v = 0; v < q.vertex_count(); ++v) cur.push_back({v, v, {}});
  for (int step = 0; step < k; ++step) {
    std::vector<Path> next;
    for (const Path& p : cur)
      for (int a = 0; a < q.arrow_count(); ++a)
        if (q.arrow(a).source == p.target) {
          Path r = p;
          r.arrows.push_back(a);
          r.target = q.arrow(a).target;
          next.push_back(std::move(r));
        }
    cur = std::move(next);
  }
  return cur;
}

}  // namespace

AlgebraBasis algebra_basis(const Presentation& P, int length_bound) {
  if (length_bound < 1) throw DomainError("algebra_basis: length bound must be >= 1");
  const Quiver& q = P.quiver;
  std::map<int, std::vector<const PathCombination*>> by_length;
  for (const auto& rel : P.relations) {
    const int len = rel.terms.front().second.length();
    for (const auto& [k, p] : rel.terms)
      if (p.length() != len)
        throw DomainError("algebra_basis: relations must be homogeneous in path length");
    by_length[len].push_back(&rel);
  }

  AlgebraBasis B;
  B.length_bound = length_bound;
  for (int k = 0; k <= length_bound; ++k) {
    AlgebraBasis::Level L;
    L.paths = paths_of_length(q, k);
    for (int i = 0; i < int(L.paths.size()); ++i) L.index[L.paths[i]] = i;
    const int n = int(L.paths.size());
    std::vector<std::vector<Q>> rows;
    if (k > 0) {
      // I_k = I_{k-1} * arrows + arrows * I_{k-1} + relations of length k
      const auto& prev = B.levels_[k - 1];
      for (int r = 0; r < prev.rref.rows(); ++r) {
        for (int a = 0; a < q.arrow_count(); ++a) {
          const Path arrow{q.arrow(a).source, q.arrow(a).target, {a}};
          std::vector<Q> right(n), left(n);
          bool any_r = false, any_l = false;
          for (int c = 0; c < prev.rref.cols(); ++c) {
            const Q& x = prev.rref(r, c);
            if (x == 0) continue;
            if (auto pr = concat(prev.paths[c], arrow)) {
              right[L.index.at(*pr)] += x;
              any_r = true;
            }
            if (auto pl = concat(arrow, prev.paths[c])) {
              left[L.index.at(*pl)] += x;
              any_l = true;
            }
          }
          if (any_r) rows.push_back(std::move(right));
          if (any_l) rows.push_back(std::move(left));
        }
      }
    }
    if (auto it = by_length.find(k); it != by_length.end()) {
      for (const PathCombination* rel : it->second) {
        std::vector<Q> v(n);
        for (const auto& [c, p] : rel->terms) v[L.index.at(p)] += c;
        rows.push_back(std::move(v));
      }
    }
    L.rref = rref(Matrix::from_rows(rows, n), &L.pivots);
    const bool all_zero = L.rref.rows() == n;
    B.levels_.push_back(std::move(L));
    if (all_zero && k > 0) {
      B.stabilized = true;
      B.stabilization_length = k - 1;
      break;
    }
  }
  for (const auto& L : B.levels_) {
    std::vector<bool> piv(L.paths.size(), false);
    for (int j : L.pivots) piv[j] = true;
    for (std::size_t j = 0; j < L.paths.size(); ++j)
      if (!piv[j]) {
        B.basis_index_[L.paths[j]] = int(B.basis_.size());
        B.basis_.push_back(L.paths[j]);
      }
  }
  return B;
}

int AlgebraBasis::index_of(const Path& p) const {
  auto it = basis_index_.find(p);
  return it == basis_index_.end() ? -1 : it->second;
}

std::map<int, Q> AlgebraBasis::reduce(const Path& p) const {
  std::map<int, Q> out;
  if (p.length() >= int(levels_.size())) {
    if (!stabilized) throw DomainError("reduce: path longer than the computed range");
    return out;
  }
  const Level& L = levels_[p.length()];
  if (stabilized && p.length() == int(levels_.size()) - 1) return out;  // all of this length vanish
  const int col = L.index.at(p);
  // A pivot column is rewritten through its RREF row; other columns are basis paths.
  for (int r = 0; r < L.rref.rows(); ++r) {
    if (L.pivots[r] != col) continue;
    for (int c = 0; c < L.rref.cols(); ++c) {
      if (c == col || L.rref(r, c) == 0) continue;
      out[basis_index_.at(L.paths[c])] -= L.rref(r, c);
    }
    for (auto it = out.begin(); it != out.end();)
      it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
  }
  out[basis_index_.at(p)] = 1;
  return out;
}

std::map<int, Q> AlgebraBasis::reduce(const PathCombination& c) const {
  std::map<int, Q> out;
  for (const auto& [k, p] : c.terms)
    for (const auto& [i, x] : reduce(p)) out[i] += k * x;
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

}  // namespace sl3
