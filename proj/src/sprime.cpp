#include "sl3/sprime.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "sl3/embedded.hpp"
#include "sl3/errors.hpp"

namespace sl3 {

namespace {

constexpr int kBound = 6;

const char* const kModuleNames[] = {"P1", "P2", "P3", "P3p", "M2", "S1", "S2", "S3", "S3p"};

std::string vertex_from_suffix(const std::string& s) { return s == "3p" ? "3'" : s; }

int vertex_index(const Quiver& q, const std::string& name) {
  const auto v = q.find_vertex(name);
  if (!v) throw DomainError("unknown vertex: " + name);
  return *v;
}

std::string join(const std::vector<std::string>& xs) {
  std::string s;
  for (const auto& x : xs) s += (s.empty() ? "" : ", ") + x;
  return s;
}

}  // namespace

std::shared_ptr<const Presentation> sprime_presentation() {
  static const auto P = std::make_shared<const Presentation>(parse_presentation(embedded::sprime_presentation()));
  return P;
}

const AlgebraBasis& sprime_algebra() {
  static const AlgebraBasis A = algebra_basis(*sprime_presentation(), kBound);
  return A;
}

ProjectiveModule sprime_projective(const std::string& vertex) {
  const auto P = sprime_presentation();
  return projective(P, sprime_algebra(), vertex_index(P->quiver, vertex));
}

std::vector<std::string> sprime_module_names() { return {std::begin(kModuleNames), std::end(kModuleNames)}; }

FDModule sprime_module(const std::string& name) {
  if (std::find(std::begin(kModuleNames), std::end(kModuleNames), name) == std::end(kModuleNames))
    throw DomainError("unknown module: " + name + " (known: " + join(sprime_module_names()) + ")");
  if (name == "M2") {
    const auto P2 = sprime_projective("2");
    return quotient_by(P2.module, P2.element("b1'.b1 - b2'.b2"));
  }
  const std::string v = vertex_from_suffix(name.substr(1));
  if (name[0] == 'P') return sprime_projective(v).module;
  const auto P = sprime_presentation();
  return vertex_simple(P, vertex_index(P->quiver, v));
}

Path parse_loose_path(const Quiver& q, const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '.') s += c;
  if (s.rfind("e(", 0) == 0) return parse_path(q, s);
  // Greedy longest match over arrow names.
  std::vector<std::string> names;
  for (int a = 0; a < q.arrow_count(); ++a) names.push_back(q.arrow(a).name);
  std::sort(names.begin(), names.end(), [](const auto& x, const auto& y) { return x.size() > y.size(); });
  std::string dotted;
  for (std::size_t i = 0; i < s.size();) {
    bool hit = false;
    for (const auto& n : names)
      if (s.compare(i, n.size(), n) == 0) {
        dotted += (dotted.empty() ? "" : ".") + n;
        i += n.size();
        hit = true;
        break;
      }
    if (!hit) throw DomainError("cannot read path: " + text);
  }
  if (dotted.empty()) throw DomainError("empty path");
  return parse_path(q, dotted);
}

CoefficientQuiver projective_coefficient_quiver(const std::string& vertex, const std::vector<std::string>& overrides) {
  const ProjectiveModule P = sprime_projective(vertex);
  const Quiver& q = P.module.pres->quiver;
  const int nv = q.vertex_count();
  std::map<int, std::vector<Path>> over;
  for (const auto& t : overrides) {
    const Path p = parse_loose_path(q, t);
    if (p.source != P.vertex)
      throw DomainError("basis path " + t + " does not start at vertex " + q.vertex_name(P.vertex));
    over[p.target].push_back(p);
  }
  std::vector<Matrix> basis;
  std::vector<std::vector<std::string>> labels(nv);
  for (int x = 0; x < nv; ++x) {
    std::vector<Path> chosen;
    if (over.count(x)) {
      std::set<int> lengths;
      for (const auto& p : over[x]) lengths.insert(p.length());
      for (const auto& p : P.basis[x])
        if (!lengths.count(p.length())) chosen.push_back(p);
      for (const auto& p : over[x]) chosen.push_back(p);
    } else {
      chosen = P.basis[x];
    }
    if (int(chosen.size()) != P.module.dims[x])
      throw DomainError("basis at vertex " + q.vertex_name(x) + " has the wrong size");
    std::vector<std::vector<Q>> rows;
    for (const auto& p : chosen) {
      PathCombination c;
      c.terms.push_back({Q(1), p});
      rows.push_back(P.element(c)[x]);
      labels[x].push_back(to_string(q, p));
    }
    basis.push_back(Matrix::from_rows(rows, P.module.dims[x]));
  }
  return coefficient_quiver(P.module, basis, labels);
}

const std::vector<DrawnDiagram>& drawn_diagrams() {
  static const std::vector<DrawnDiagram> D = {
      {{"b1'b1", "b2'b2"},
       {{"2", "3"}, {"2", "1"}, {"2", "3'"}, {"3", "2L"}, {"1", "2L"}, {"1", "2R"}, {"3'", "2R"}}},
      {{"a'a", "b2'b2"}, {{"2", "3"}, {"2", "1"}, {"2", "3'"}, {"3", "2L"}, {"1", "2L"}, {"3'", "2R"}}},
      {{"a'a", "b1'b1"}, {{"2", "3"}, {"2", "1"}, {"2", "3'"}, {"3", "2L"}, {"1", "2R"}, {"3'", "2R"}}},
  };
  return D;
}

DiagramComparison compare_with_drawing(const CoefficientQuiver& cq, const DrawnDiagram& d) {
  const Quiver& q = sprime_presentation()->quiver;
  std::vector<int> bottom;
  for (std::size_t i = 0; i < cq.node_vertex.size(); ++i)
    if (cq.node_layer[i] == 2) bottom.push_back(int(i));
  if (bottom.size() != 2) throw DomainError("compare_with_drawing: expected two bottom nodes");

  using Edge = std::pair<std::string, std::string>;
  auto norm = [](Edge e) {
    if (e.second < e.first) std::swap(e.first, e.second);
    return e;
  };
  std::set<Edge> drawn;
  for (const auto& e : d.edges) drawn.insert(norm(e));

  DiagramComparison best;
  bool first = true;
  for (int swap = 0; swap < 2; ++swap) {
    auto name = [&](int node) -> std::string {
      if (node == bottom[0]) return swap ? "2R" : "2L";
      if (node == bottom[1]) return swap ? "2L" : "2R";
      return q.vertex_name(cq.node_vertex[node]);
    };
    std::map<Edge, Q> computed;
    for (const auto& e : cq.edges) computed[norm({name(e.from), name(e.to)})] = e.coeff;
    DiagramComparison c;
    c.computed_edges = int(computed.size());
    c.drawn_edges = int(drawn.size());
    for (const auto& [e, k] : computed)
      if (!drawn.count(e)) c.extra.push_back(e.first + "-" + e.second + " (coefficient " + to_string(k) + ")");
    for (const auto& e : drawn)
      if (!computed.count(e)) c.missing.push_back(e.first + "-" + e.second);
    c.match = c.extra.empty() && c.missing.empty();
    if (first || c.extra.size() + c.missing.size() < best.extra.size() + best.missing.size()) best = c;
    first = false;
  }
  return best;
}

namespace {

std::vector<std::vector<int>> padded(std::vector<std::vector<int>> layers, std::size_t n, int nv) {
  layers.resize(n, std::vector<int>(nv, 0));
  return layers;
}

std::multiset<std::string> layer_names(const Quiver& q, const std::vector<int>& layer) {
  std::multiset<std::string> s;
  for (int x = 0; x < q.vertex_count(); ++x)
    for (int k = 0; k < layer[x]; ++k) s.insert(q.vertex_name(x));
  return s;
}

bool layers_are(const Quiver& q, const std::vector<std::vector<int>>& layers,
                const std::vector<std::vector<std::string>>& want) {
  if (layers.size() != want.size()) return false;
  for (std::size_t i = 0; i < want.size(); ++i)
    if (layer_names(q, layers[i]) != std::multiset<std::string>(want[i].begin(), want[i].end())) return false;
  return true;
}

bool self_dual(const FDModule& M) { return isomorphic(contravariant_dual(M), M); }

}  // namespace

std::vector<SuiteCheck> run_sprime_suite() {
  std::vector<SuiteCheck> out;
  auto check = [&](std::string name, bool ok, std::string detail = "") {
    out.push_back({std::move(name), ok, std::move(detail)});
  };
  const auto P = sprime_presentation();
  const Quiver& q = P->quiver;
  const int nv = q.vertex_count();
  const AlgebraBasis& A = sprime_algebra();
  check("algebra stabilizes at path length 2", A.stabilized && A.stabilization_length == 2,
        "length " + std::to_string(A.stabilization_length) + ", dimension " + std::to_string(A.dimension()));

  std::map<std::string, LoewyData> L;
  std::vector<LoewyData> proj_loewy(nv);
  for (int v = 0; v < nv; ++v) {
    const FDModule Pv = sprime_projective(q.vertex_name(v)).module;
    proj_loewy[v] = loewy(Pv);
    const auto& top = proj_loewy[v].radical_layers.front();
    std::vector<int> want(nv, 0);
    want[v] = 1;
    check("head of P(" + q.vertex_name(v) + ") is L(" + q.vertex_name(v) + ")", top == want,
          layers_to_string(q, proj_loewy[v].radical_layers));
  }
  const int v1 = *q.find_vertex("1"), v2 = *q.find_vertex("2"), v3 = *q.find_vertex("3"), v3p = *q.find_vertex("3'");
  check("P(1) = [1|2|1], rigid", layers_are(q, proj_loewy[v1].radical_layers, {{"1"}, {"2"}, {"1"}}) && proj_loewy[v1].rigid,
        layers_to_string(q, proj_loewy[v1].radical_layers));
  check("P(3) = [3|2]", layers_are(q, proj_loewy[v3].radical_layers, {{"3"}, {"2"}}),
        layers_to_string(q, proj_loewy[v3].radical_layers));
  check("P(3') = [3'|2]", layers_are(q, proj_loewy[v3p].radical_layers, {{"3'"}, {"2"}}),
        layers_to_string(q, proj_loewy[v3p].radical_layers));
  const FDModule P2 = sprime_projective("2").module;
  check("P(2) has dimension 6 and layers [2 | 3,1,3' | 2,2]",
        P2.total_dim() == 6 && layers_are(q, proj_loewy[v2].radical_layers, {{"2"}, {"3", "1", "3'"}, {"2", "2"}}),
        layers_to_string(q, proj_loewy[v2].radical_layers));

  bool recip = true;
  std::size_t depth = 0;
  for (const auto& l : proj_loewy) depth = std::max(depth, l.radical_layers.size());
  for (int mu = 0; mu < nv; ++mu)
    for (int la = 0; la < nv; ++la) {
      const auto x = padded(proj_loewy[mu].radical_layers, depth, nv);
      const auto y = padded(proj_loewy[la].radical_layers, depth, nv);
      for (std::size_t i = 0; i < depth; ++i)
        if (x[i][la] != y[i][mu]) recip = false;
    }
  check("layer reciprocity [rad_i P(mu):L(lambda)] = [rad_i P(lambda):L(mu)]", recip);

  const auto P2p = sprime_projective("2");
  const FDModule M2 = sprime_module("M2");
  const LoewyData lm = loewy(M2);
  check("M(2) = P(2)/(b1'b1 - b2'b2) has dimension 5 and layers [2 | 3,1,3' | 2]",
        M2.total_dim() == 5 && layers_are(q, lm.radical_layers, {{"2"}, {"3", "1", "3'"}, {"2"}}),
        layers_to_string(q, lm.radical_layers));
  check("M(2) is rigid", lm.rigid);
  check("M(2) is contravariantly self-dual", self_dual(M2));
  for (const char* line : {"b1'.b1", "b2'.b2"}) {
    const FDModule N = quotient_by(P2, P2p.element(line));
    check(std::string("P(2)/(") + line + ") has dimension 5 and is not self-dual",
          N.total_dim() == 5 && !self_dual(N));
  }
  check("P(2)/(e(2)) = 0", quotient_by(P2, P2p.element("e(2)")).total_dim() == 0);
  check("dual(P(1)) is isomorphic to P(1)", self_dual(sprime_module("P1")));
  check("dual(dual(P(2))) is isomorphic to P(2)", isomorphic(contravariant_dual(contravariant_dual(P2)), P2));

  const Presentation extra = parse_presentation(std::string(embedded::sprime_presentation()) + "\nb1'.b1 - b2'.b2 = 0\n");
  const AlgebraBasis B = algebra_basis(extra, kBound);
  check("adjoining b1'b1 = b2'b2 gives a smaller algebra", B.stabilized && B.dimension() < A.dimension(),
        std::to_string(B.dimension()) + " < " + std::to_string(A.dimension()));

  for (const char* v : {"1", "3", "3'"}) {
    const auto cq = projective_coefficient_quiver(v, {});
    const int want = std::string(v) == "1" ? 2 : 1;
    check(std::string("P(") + v + ") coefficient quiver is a chain", int(cq.edges.size()) == want);
  }
  return out;
}

std::vector<SuiteCheck> run_drawing_comparison() {
  std::vector<SuiteCheck> out;
  for (const auto& d : drawn_diagrams()) {
    const auto cq = projective_coefficient_quiver("2", d.bottom_basis);
    const auto c = compare_with_drawing(cq, d);
    std::string detail = std::to_string(c.computed_edges) + " computed edges, " + std::to_string(c.drawn_edges) + " drawn";
    if (!c.extra.empty()) detail += "; not drawn: " + join(c.extra);
    if (!c.missing.empty()) detail += "; not computed: " + join(c.missing);
    out.push_back({"P(2) coefficient quiver for bottom basis {" + join(d.bottom_basis) + "} equals the drawn diagram",
                   c.match, detail});
  }
  return out;
}

}  // namespace sl3
