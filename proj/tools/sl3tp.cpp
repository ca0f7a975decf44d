// sl3tp: command-line front end for the SL3 tilting library.
#include <algorithm>
#include <atomic>
#include <iostream>
#include <map>
#include <mutex>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "sl3/alcoves.hpp"
#include "sl3/decompose.hpp"
#include "sl3/errors.hpp"
#include "sl3/modchar.hpp"
#include "sl3/sprime.hpp"
#include "sl3/structures.hpp"
#include "sl3/weylchar.hpp"

using namespace sl3;
using nlohmann::json;

namespace {

struct Options {
  int p = 5;
  std::string weight, rhs, lhs, kind = "simple", basis = "weyl", target, qbasis;
  bool json = false, verify = true, oracle = false, diagrams = false;
  int jobs = 0;
};

Character character_of(const std::string& kind, Weight w, int p) {
  if (kind == "weyl") return Character::unit(Basis::Weyl, w);
  if (kind == "simple") return simple_char(w, p);
  if (kind == "tilting") return tilting_char(w, p);
  if (kind == "M") return m_char(w, p);
  throw DomainError("unknown kind: " + kind + " (weyl, simple, tilting, M)");
}

Character in_basis(const Character& c, Basis b, int p) {
  const Character weyl = c.basis() == Basis::Simple ? from_simple_basis(c, p) : c;
  switch (b) {
    case Basis::Weyl:
      return weyl;
    case Basis::Simple:
      return to_simple_basis(weyl, p);
    case Basis::Monomial: {
      Character m(Basis::Monomial);
      for (const auto& [w, k] : weyl.terms()) m.add_scaled(weyl_to_monomial(w), k);
      return m;
    }
  }
  return weyl;
}

int cmd_facet(const Options& o) {
  require_prime(o.p);
  std::cout << to_string(classify(parse_weight(o.weight), o.p)) << "\n";
  return 0;
}

int cmd_char(const Options& o) {
  require_prime(o.p);
  const Weight w = parse_weight(o.weight);
  Character c;
  if (!o.rhs.empty()) {
    if (o.kind != "simple") throw DomainError("--rhs is only defined for --kind simple (tensor of simples)");
    c = tensor_char(w, parse_weight(o.rhs), o.p);
  } else {
    c = character_of(o.kind, w, o.p);
  }
  c = in_basis(c, parse_basis(o.basis), o.p);
  if (o.json)
    std::cout << to_json(c).dump(2) << "\n";
  else
    std::cout << to_string(c) << "\n";
  return 0;
}

int cmd_dim(const Options& o) {
  require_prime(o.p);
  const Weight w = parse_weight(o.weight);
  const Coeff d = o.rhs.empty() ? dimension(character_of(o.kind, w, o.p), o.p)
                                : dimension(tensor_char(w, parse_weight(o.rhs), o.p), o.p);
  std::cout << d << "\n";
  return 0;
}

int cmd_decompose(const Options& o) {
  require_prime(o.p);
  const Decomposition d = decompose(parse_weight(o.lhs), parse_weight(o.rhs), o.p);
  VerifyOptions vo;
  vo.monomial_oracle = o.oracle;
  const VerifyReport r = verify(d, vo);
  if (o.json) {
    json j = to_json(d, r.ok());
    if (!r.ok()) j["failures"] = r.failures;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << to_text(d) << "  [dim " << d.dim_product << ", " << (r.ok() ? "verified" : "FAILED") << "]\n";
    for (const auto& f : r.failures) std::cerr << "verification failure: " << f << "\n";
  }
  return r.ok() ? 0 : 1;
}

struct PairResult {
  Weight lhs, rhs;
  int product_case = 0;
  std::vector<Summand> summands;
  std::vector<std::string> failures;
};

int cmd_sweep(const Options& o) {
  require_prime(o.p);
  if (o.p != 5 && o.p != 7 && o.p != 11) throw DomainError("sweep supports p in {5, 7, 11}");
  std::vector<std::pair<Weight, Weight>> pairs;
  for (int a = 0; a < o.p; ++a)
    for (int b = 0; b < o.p; ++b)
      for (int c = 0; c < o.p; ++c)
        for (int d = 0; d < o.p; ++d) pairs.push_back({{a, b}, {c, d}});
  std::vector<PairResult> results(pairs.size());
  std::atomic<std::size_t> next{0};
  VerifyOptions vo;
  vo.monomial_oracle = o.oracle;
  auto worker = [&] {
    for (std::size_t i; (i = next++) < pairs.size();) {
      PairResult& r = results[i];
      r.lhs = pairs[i].first;
      r.rhs = pairs[i].second;
      try {
        const Decomposition d = decompose(r.lhs, r.rhs, o.p);
        r.product_case = d.product_case;
        r.summands = d.summands;
        if (o.verify) r.failures = verify(d, vo).failures;
      } catch (const std::exception& e) {
        r.failures.push_back(e.what());
      }
    }
  };
  const int jobs = o.jobs > 0 ? o.jobs : std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::thread> pool;
  for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  std::map<std::string, Coeff> kinds;
  std::map<int, int> cases;
  json failures = json::array();
  for (const auto& r : results) {
    ++cases[r.product_case];
    for (const auto& s : r.summands) kinds[kind_symbol(s.kind)] += s.mult;
    for (const auto& f : r.failures)
      failures.push_back({{"lhs", {r.lhs.a, r.lhs.b}}, {"rhs", {r.rhs.a, r.rhs.b}}, {"error", f}});
  }
  if (o.json) {
    json c = json::object();
    for (const auto& [k, n] : cases) c[std::to_string(k)] = n;
    std::cout << json{{"p", o.p},
                      {"pairs", results.size()},
                      {"verified", o.verify},
                      {"summands", kinds},
                      {"cases", c},
                      {"failures", failures}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "p=" << o.p << ": " << results.size() << " pairs, " << failures.size() << " failures"
              << (o.verify ? "" : " (verification skipped)") << "\n";
    std::cout << "summands:";
    for (const auto& [k, n] : kinds) std::cout << " " << k << "=" << n;
    std::cout << "\ncases:";
    for (const auto& [k, n] : cases) std::cout << " " << k << "=" << n;
    std::cout << "\n";
    for (const auto& f : failures)
      std::cout << "FAIL " << f["lhs"][0] << "," << f["lhs"][1] << " x " << f["rhs"][0] << "," << f["rhs"][1] << ": "
                << f["error"].get<std::string>() << "\n";
  }
  return failures.empty() ? 0 : 1;
}

int cmd_quiver_verify(const Options& o) {
  int failed = 0;
  auto print = [&](const std::vector<SuiteCheck>& cs) {
    for (const auto& c : cs) {
      std::cout << (c.ok ? "PASS " : "FAIL ") << c.name;
      if (!c.detail.empty()) std::cout << "  (" << c.detail << ")";
      std::cout << "\n";
      failed += !c.ok;
    }
  };
  print(run_sprime_suite());
  if (o.diagrams) print(run_drawing_comparison());
  std::cout << (failed ? std::to_string(failed) + " check(s) failed" : std::string("all S' checks pass")) << "\n";
  return failed ? 1 : 0;
}

int cmd_quiver_dot(const Options& o) {
  const auto names = sprime_module_names();
  if (std::find(names.begin(), names.end(), o.target) == names.end())
    throw DomainError("unknown module: " + o.target);
  std::vector<std::string> basis;
  if (!o.qbasis.empty()) {
    std::stringstream ss(o.qbasis);
    for (std::string t; std::getline(ss, t, ',');) basis.push_back(t);
  }
  const Quiver& q = sprime_presentation()->quiver;
  CoefficientQuiver cq;
  if (o.target[0] == 'P') {
    const std::string v = o.target == "P3p" ? "3'" : o.target.substr(1);
    cq = projective_coefficient_quiver(v, basis);
  } else {
    if (!basis.empty()) throw DomainError("--basis is only supported for projectives");
    const FDModule M = sprime_module(o.target);
    std::vector<Matrix> id;
    for (int d : M.dims) id.push_back(Matrix::identity(d));
    cq = coefficient_quiver(M, id, M.labels);
  }
  std::cout << to_dot(q, cq, o.target);
  return 0;
}

int cmd_diagram(const Options& o) {
  require_prime(o.p);
  const Weight w = parse_weight(o.weight);
  const ModuleKind kind = parse_kind(o.kind);
  const Facet f = classify(w, o.p);
  if (!f.in_region()) throw DomainError("weight " + o.weight + " lies outside the tabulated region");
  if (!has_diagram(f, kind)) throw DataError("no " + kind_name(kind) + " diagram stored for facet " + to_string(f));
  const auto label = [&](Facet g) {
    const auto lw = linked_weight(w, g, o.p);
    return lw ? "(" + format_weight(*lw) + ")" : to_string(g) + " (not dominant)";
  };
  std::cout << to_dot(diagram(f, kind), label);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"SL3 tensor products of restricted simples: characters, decompositions, structure data"};
  app.require_subcommand(1);
  Options o;

  auto* facet = app.add_subcommand("facet", "Facet of the alcove region containing a weight");
  facet->add_option("--p", o.p, "prime >= 5")->required();
  facet->add_option("--weight", o.weight, "weight a,b")->required();

  auto* ch = app.add_subcommand("char", "Character of a module");
  ch->add_option("--p", o.p)->required();
  ch->add_option("--weight", o.weight)->required();
  ch->add_option("--kind", o.kind, "weyl | simple | tilting | M")->capture_default_str();
  ch->add_option("--rhs", o.rhs, "tensor L(weight) with L(rhs)");
  ch->add_option("--basis", o.basis, "weyl | simple | monomial")->capture_default_str();
  ch->add_flag("--json", o.json);

  auto* dim = app.add_subcommand("dim", "Dimension of a module");
  dim->add_option("--p", o.p)->required();
  dim->add_option("--weight", o.weight)->required();
  dim->add_option("--kind", o.kind, "weyl | simple | tilting | M")->capture_default_str();
  dim->add_option("--rhs", o.rhs, "tensor L(weight) with L(rhs)");

  auto* dec = app.add_subcommand("decompose", "Decompose L(lhs) (x) L(rhs) into indecomposables");
  dec->add_option("--p", o.p)->required();
  dec->add_option("--lhs", o.lhs)->required();
  dec->add_option("--rhs", o.rhs)->required();
  dec->add_flag("--json", o.json);
  dec->add_flag("--oracle", o.oracle, "check the tensor character by monomial convolution");

  auto* sw = app.add_subcommand("sweep", "Decompose and verify all restricted pairs");
  sw->add_option("--p", o.p)->required();
  sw->add_option("--jobs", o.jobs, "worker threads (default: hardware concurrency)");
  sw->add_flag("--json", o.json);
  sw->add_flag("--verify,!--no-verify", o.verify, "verify every decomposition (default on)");
  sw->add_flag("--oracle", o.oracle, "use the monomial oracle in verification");

  auto* qv = app.add_subcommand("quiver", "The quotient path algebra S' and its modules");
  qv->require_subcommand(1);
  auto* qver = qv->add_subcommand("verify", "Run the S' invariant suite");
  qver->add_flag("--diagrams", o.diagrams, "also compare P(2) coefficient quivers with the drawn diagrams");
  auto* qdot = qv->add_subcommand("dot", "Coefficient quiver of a module as DOT");
  qdot->add_option("target", o.target, "P1 P2 P3 P3p M2 S1 S2 S3 S3p")->required();
  qdot->add_option("--basis", o.qbasis, "comma-separated basis paths, e.g. a'a,b2'b2");

  auto* dg = app.add_subcommand("diagram", "Stored structure diagram with linked weights, as DOT");
  dg->add_option("--p", o.p)->required();
  dg->add_option("--kind", o.kind, "delta | tilting | M")->required();
  dg->add_option("--weight", o.weight)->required();

  CLI11_PARSE(app, argc, argv);
  try {
    if (*facet) return cmd_facet(o);
    if (*ch) return cmd_char(o);
    if (*dim) return cmd_dim(o);
    if (*dec) return cmd_decompose(o);
    if (*sw) return cmd_sweep(o);
    if (*qver) return cmd_quiver_verify(o);
    if (*qdot) return cmd_quiver_dot(o);
    if (*dg) return cmd_diagram(o);
  } catch (const IntegrityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
