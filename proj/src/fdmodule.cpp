#include "sl3/fdmodule.hpp"

#include <random>
#include <sstream>

#include "sl3/errors.hpp"

namespace sl3 {

int FDModule::total_dim() const {
  int n = 0;
  for (int d : dims) n += d;
  return n;
}

Matrix FDModule::path_map(const Path& p) const {
  Matrix m = Matrix::identity(dims[p.source]);
  for (int a : p.arrows) m = maps[a] * m;
  return m;
}

void FDModule::check_relations() const {
  for (const auto& rel : pres->relations) {
    const Path& f = rel.terms.front().second;
    Matrix acc(dims[f.target], dims[f.source]);
    for (const auto& [k, p] : rel.terms) acc = acc + path_map(p).scaled(k);
    if (!acc.is_zero()) throw IntegrityError("module", "a relation fails on the module");
  }
}

namespace {

FDModule empty_like(const FDModule& M) {
  FDModule r;
  r.pres = M.pres;
  return r;
}

const Quiver& quiver_of(const FDModule& M) { return M.pres->quiver; }

}  // namespace

FDModule vertex_simple(std::shared_ptr<const Presentation> P, int v) {
  FDModule S;
  S.pres = P;
  const Quiver& q = P->quiver;
  S.dims.assign(q.vertex_count(), 0);
  S.dims[v] = 1;
  for (int a = 0; a < q.arrow_count(); ++a)
    S.maps.emplace_back(S.dims[q.arrow(a).target], S.dims[q.arrow(a).source]);
  S.labels.assign(q.vertex_count(), {});
  S.labels[v] = {q.vertex_name(v)};
  return S;
}

ProjectiveModule projective(std::shared_ptr<const Presentation> P, const AlgebraBasis& A, int v) {
  if (!A.stabilized) throw DomainError("projective: algebra did not stabilize (possibly infinite-dimensional)");
  const Quiver& q = P->quiver;
  ProjectiveModule R;
  R.vertex = v;
  R.basis.assign(q.vertex_count(), {});
  std::vector<std::vector<int>> global(q.vertex_count());
  for (int i = 0; i < int(A.basis().size()); ++i) {
    const Path& p = A.basis()[i];
    if (p.source != v) continue;
    R.basis[p.target].push_back(p);
    global[p.target].push_back(i);
  }
  FDModule& M = R.module;
  M.pres = P;
  M.labels.assign(q.vertex_count(), {});
  for (int x = 0; x < q.vertex_count(); ++x) {
    M.dims.push_back(int(R.basis[x].size()));
    for (const Path& p : R.basis[x]) M.labels[x].push_back(to_string(q, p));
  }
  for (int a = 0; a < q.arrow_count(); ++a) {
    const Arrow& ar = q.arrow(a);
    Matrix m(M.dims[ar.target], M.dims[ar.source]);
    const Path step{ar.source, ar.target, {a}};
    for (int j = 0; j < M.dims[ar.source]; ++j) {
      const Path longer = *concat(R.basis[ar.source][j], step);
      for (const auto& [gi, c] : A.reduce(longer)) {
        int row = -1;
        for (int i = 0; i < M.dims[ar.target]; ++i)
          if (global[ar.target][i] == gi) row = i;
        if (row < 0) throw IntegrityError("projective", "reduction left the projective");
        m(row, j) = c;
      }
    }
    M.maps.push_back(std::move(m));
  }
  M.check_relations();
  return R;
}

ModuleElement ProjectiveModule::element(const PathCombination& c) const {
  const Quiver& q = module.pres->quiver;
  ModuleElement e(q.vertex_count());
  for (int x = 0; x < q.vertex_count(); ++x) e[x].assign(module.dims[x], 0);
  for (const auto& [k, p] : c.terms) {
    if (p.source != vertex) throw DomainError("element: path " + to_string(q, p) + " does not start at the projective's vertex");
    // The image of the head idempotent under the path.
    int e_idx = -1;
    for (int i = 0; i < module.dims[vertex]; ++i)
      if (basis[vertex][i].arrows.empty()) e_idx = i;
    Matrix col(module.dims[vertex], 1);
    col(e_idx, 0) = 1;
    const Matrix img = module.path_map(p) * col;
    for (int i = 0; i < img.rows(); ++i) e[p.target][i] += k * img(i, 0);
  }
  return e;
}

ModuleElement ProjectiveModule::element(std::string_view text) const {
  return element(parse_combination(module.pres->quiver, text));
}

PerVertex generated_submodule(const FDModule& M, const ModuleElement& m) {
  const Quiver& q = quiver_of(M);
  PerVertex S;
  for (int x = 0; x < q.vertex_count(); ++x) {
    Matrix row(1, M.dims[x]);
    for (int i = 0; i < M.dims[x]; ++i) row(0, i) = m[x][i];
    S.push_back(Subspace::span(row));
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (int a = 0; a < q.arrow_count(); ++a) {
      const Arrow& ar = q.arrow(a);
      Subspace grown = sum(S[ar.target], image(M.maps[a], S[ar.source]));
      if (grown.dim() != S[ar.target].dim()) {
        S[ar.target] = std::move(grown);
        changed = true;
      }
    }
  }
  return S;
}

FDModule quotient(const FDModule& M, const PerVertex& sub) {
  const Quiver& q = quiver_of(M);
  FDModule R = empty_like(M);
  // Quotient coordinates: the non-pivot columns of each RREF subspace basis.
  std::vector<std::vector<int>> keep(q.vertex_count());
  std::vector<Matrix> proj;
  for (int x = 0; x < q.vertex_count(); ++x) {
    std::vector<int> piv;
    rref(sub[x].basis, &piv);
    std::vector<bool> is_piv(M.dims[x], false);
    for (int j : piv) is_piv[j] = true;
    for (int j = 0; j < M.dims[x]; ++j)
      if (!is_piv[j]) keep[x].push_back(j);
    R.dims.push_back(int(keep[x].size()));
    // proj maps v to the kept coordinates of v reduced against the subspace.
    Matrix P(R.dims[x], M.dims[x]);
    for (int j = 0; j < M.dims[x]; ++j) {
      std::vector<Q> v(M.dims[x]);
      v[j] = 1;
      for (int r = 0; r < sub[x].basis.rows(); ++r) {
        const Q f = v[piv[r]];
        if (f == 0) continue;
        for (int c = 0; c < M.dims[x]; ++c) v[c] -= f * sub[x].basis(r, c);
      }
      for (int i = 0; i < R.dims[x]; ++i) P(i, j) = v[keep[x][i]];
    }
    proj.push_back(std::move(P));
    std::vector<std::string> lab;
    if (x < int(M.labels.size()) && int(M.labels[x].size()) == M.dims[x])
      for (int j : keep[x]) lab.push_back(M.labels[x][j]);
    R.labels.push_back(std::move(lab));
  }
  for (int a = 0; a < q.arrow_count(); ++a) {
    const Arrow& ar = q.arrow(a);
    Matrix lift(M.dims[ar.source], R.dims[ar.source]);
    for (int i = 0; i < R.dims[ar.source]; ++i) lift(keep[ar.source][i], i) = 1;
    R.maps.push_back(proj[ar.target] * M.maps[a] * lift);
  }
  R.check_relations();
  return R;
}

FDModule quotient_by(const FDModule& M, const ModuleElement& m) { return quotient(M, generated_submodule(M, m)); }

std::vector<PerVertex> radical_series(const FDModule& M) {
  const Quiver& q = quiver_of(M);
  std::vector<PerVertex> series;
  PerVertex cur;
  for (int x = 0; x < q.vertex_count(); ++x) cur.push_back(Subspace::full(M.dims[x]));
  for (;;) {
    series.push_back(cur);
    int total = 0;
    for (const auto& s : cur) total += s.dim();
    if (total == 0) break;
    PerVertex next;
    for (int x = 0; x < q.vertex_count(); ++x) next.push_back(Subspace::zero(M.dims[x]));
    for (int a = 0; a < q.arrow_count(); ++a) {
      const Arrow& ar = q.arrow(a);
      next[ar.target] = sum(next[ar.target], image(M.maps[a], cur[ar.source]));
    }
    cur = std::move(next);
  }
  return series;
}

std::vector<PerVertex> socle_series(const FDModule& M) {
  const Quiver& q = quiver_of(M);
  std::vector<PerVertex> series;
  PerVertex cur;
  for (int x = 0; x < q.vertex_count(); ++x) cur.push_back(Subspace::zero(M.dims[x]));
  const int total = M.total_dim();
  for (;;) {
    series.push_back(cur);
    int d = 0;
    for (const auto& s : cur) d += s.dim();
    if (d == total) break;
    // soc^{i+1} = {m : every arrow sends m into soc^i}
    PerVertex next;
    for (int x = 0; x < q.vertex_count(); ++x) next.push_back(Subspace::full(M.dims[x]));
    for (int a = 0; a < q.arrow_count(); ++a) {
      const Arrow& ar = q.arrow(a);
      next[ar.source] = intersect(next[ar.source], preimage(M.maps[a], cur[ar.target]));
    }
    cur = std::move(next);
  }
  return series;
}

LoewyData loewy(const FDModule& M) {
  const int nv = quiver_of(M).vertex_count();
  const auto rad = radical_series(M);
  const auto soc = socle_series(M);
  LoewyData L;
  for (std::size_t i = 0; i + 1 < rad.size(); ++i) {
    std::vector<int> layer(nv);
    for (int x = 0; x < nv; ++x) layer[x] = rad[i][x].dim() - rad[i + 1][x].dim();
    L.radical_layers.push_back(std::move(layer));
  }
  for (std::size_t i = soc.size() - 1; i >= 1; --i) {
    std::vector<int> layer(nv);
    for (int x = 0; x < nv; ++x) layer[x] = soc[i][x].dim() - soc[i - 1][x].dim();
    L.socle_layers.push_back(std::move(layer));
  }
  // Rigid: rad^i = soc^{len-i} as subspaces for every i.
  L.rigid = rad.size() == soc.size();
  for (std::size_t i = 0; L.rigid && i < rad.size(); ++i)
    for (int x = 0; x < nv; ++x)
      if (!(rad[i][x] == soc[soc.size() - 1 - i][x])) L.rigid = false;
  return L;
}

std::string layers_to_string(const Quiver& q, const std::vector<std::vector<int>>& layers) {
  std::string s = "[";
  for (std::size_t i = 0; i < layers.size(); ++i) {
    if (i) s += " | ";
    bool first = true;
    for (int x = 0; x < q.vertex_count(); ++x)
      for (int k = 0; k < layers[i][x]; ++k) {
        if (!first) s += ",";
        s += q.vertex_name(x);
        first = false;
      }
  }
  return s + "]";
}

FDModule contravariant_dual(const FDModule& M) {
  if (!M.pres->has_duality()) throw DomainError("contravariant_dual: presentation has no duality pairing");
  const Quiver& q = quiver_of(M);
  FDModule D = empty_like(M);
  D.dims = M.dims;
  for (int a = 0; a < q.arrow_count(); ++a) D.maps.push_back(M.maps[M.pres->partner[a]].transpose());
  D.labels.assign(q.vertex_count(), {});
  for (int x = 0; x < q.vertex_count(); ++x)
    if (x < int(M.labels.size()) && int(M.labels[x].size()) == M.dims[x])
      for (const auto& l : M.labels[x]) D.labels[x].push_back(l + "*");
  D.check_relations();
  return D;
}

std::vector<std::vector<Matrix>> hom_basis(const FDModule& M, const FDModule& N) {
  const Quiver& q = quiver_of(M);
  const int nv = q.vertex_count();
  std::vector<int> offset(nv + 1, 0);
  for (int x = 0; x < nv; ++x) offset[x + 1] = offset[x] + N.dims[x] * M.dims[x];
  const int unknowns = offset[nv];
  auto var = [&](int x, int i, int j) { return offset[x] + i * M.dims[x] + j; };
  std::vector<std::vector<Q>> rows;
  // N_a f_s - f_t M_a = 0 for every arrow a: s -> t.
  for (int a = 0; a < q.arrow_count(); ++a) {
    const int s = q.arrow(a).source, t = q.arrow(a).target;
    const Matrix &Na = N.maps[a], &Ma = M.maps[a];
    for (int i = 0; i < N.dims[t]; ++i)
      for (int j = 0; j < M.dims[s]; ++j) {
        std::vector<Q> row(unknowns);
        for (int k = 0; k < N.dims[s]; ++k) row[var(s, k, j)] += Na(i, k);
        for (int k = 0; k < M.dims[t]; ++k) row[var(t, i, k)] -= Ma(k, j);
        rows.push_back(std::move(row));
      }
  }
  const Matrix K = kernel(Matrix::from_rows(rows, unknowns));
  std::vector<std::vector<Matrix>> out;
  for (int r = 0; r < K.rows(); ++r) {
    std::vector<Matrix> f;
    for (int x = 0; x < nv; ++x) {
      Matrix m(N.dims[x], M.dims[x]);
      for (int i = 0; i < N.dims[x]; ++i)
        for (int j = 0; j < M.dims[x]; ++j) m(i, j) = K(r, var(x, i, j));
      f.push_back(std::move(m));
    }
    out.push_back(std::move(f));
  }
  return out;
}

bool isomorphic(const FDModule& M, const FDModule& N) {
  if (M.dims != N.dims) return false;
  if (M.total_dim() > kIsoCutoff)
    throw DomainError("isomorphism test is not applicable above total dimension " + std::to_string(kIsoCutoff));
  if (M.total_dim() == 0) return true;
  const LoewyData lm = loewy(M), ln = loewy(N);
  if (lm.radical_layers != ln.radical_layers || lm.socle_layers != ln.socle_layers) return false;
  const auto H = hom_basis(M, N);
  if (H.empty()) return false;
  // Isomorphisms form a Zariski-open subset of Hom; random integer points hit it
  // with overwhelming probability when it is nonempty.
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> coef(-97, 97);
  const int nv = int(M.dims.size());
  for (int trial = 0; trial < 24; ++trial) {
    std::vector<Matrix> f;
    for (int x = 0; x < nv; ++x) f.emplace_back(N.dims[x], M.dims[x]);
    for (const auto& h : H) {
      const Q c = coef(rng);
      for (int x = 0; x < nv; ++x) f[x] = f[x] + h[x].scaled(c);
    }
    bool ok = true;
    for (int x = 0; x < nv && ok; ++x) ok = invertible(f[x]);
    if (ok) return true;
  }
  return false;
}

CoefficientQuiver coefficient_quiver(const FDModule& M, const std::vector<Matrix>& basis,
                                     const std::vector<std::vector<std::string>>& labels) {
  const Quiver& q = quiver_of(M);
  const int nv = q.vertex_count();
  if (int(basis.size()) != nv) throw DomainError("coefficient_quiver: need one basis per vertex");
  std::vector<Matrix> B;  // columns are basis vectors
  for (int x = 0; x < nv; ++x) {
    if (basis[x].rows() != M.dims[x] || basis[x].cols() != M.dims[x] || !invertible(basis[x]))
      throw DomainError("coefficient_quiver: vectors at vertex " + q.vertex_name(x) + " are not a basis");
    B.push_back(basis[x].transpose());
  }
  CoefficientQuiver cq;
  std::vector<int> first(nv);
  const auto rad = radical_series(M);
  for (int x = 0; x < nv; ++x) {
    first[x] = int(cq.node_vertex.size());
    for (int i = 0; i < M.dims[x]; ++i) {
      cq.node_vertex.push_back(x);
      std::string lab = q.vertex_name(x);
      if (x < int(labels.size()) && i < int(labels[x].size())) lab = labels[x][i];
      cq.node_label.push_back(lab);
      int layer = 0;
      for (std::size_t k = 1; k < rad.size(); ++k)
        if (contains(rad[k][x], basis[x].row(i))) layer = int(k);
      cq.node_layer.push_back(layer);
    }
  }
  for (int a = 0; a < q.arrow_count(); ++a) {
    const int s = q.arrow(a).source, t = q.arrow(a).target;
    const Matrix C = inverse(B[t]) * M.maps[a] * B[s];
    for (int j = 0; j < C.cols(); ++j)
      for (int i = 0; i < C.rows(); ++i)
        if (C(i, j) != 0) cq.edges.push_back({a, first[s] + j, first[t] + i, C(i, j)});
  }
  return cq;
}

std::string to_dot(const Quiver& q, const CoefficientQuiver& cq, const std::string& name) {
  std::ostringstream os;
  os << "digraph \"" << name << "\" {\n  node [shape=plaintext];\n";
  int max_layer = 0;
  for (int l : cq.node_layer) max_layer = std::max(max_layer, l);
  for (int l = 0; l <= max_layer; ++l) {
    os << "  { rank=same;";
    for (std::size_t i = 0; i < cq.node_vertex.size(); ++i)
      if (cq.node_layer[i] == l)
        os << " b" << i << " [label=\"" << q.vertex_name(cq.node_vertex[i]) << "\", tooltip=\"" << cq.node_label[i]
           << "\"];";
    os << " }\n";
  }
  for (const auto& e : cq.edges) {
    os << "  b" << e.from << " -> b" << e.to << " [label=\"" << q.arrow(e.arrow).name;
    if (e.coeff != 1) os << " (" << to_string(e.coeff) << ")";
    os << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace sl3
