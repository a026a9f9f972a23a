// One PASS/FAIL line per acceptance criterion. Usage: acceptance <cli> <data-dir> [criterion...]
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "hom/families.hpp"
#include "hom/groups.hpp"
#include "hom/normal_form.hpp"

using namespace hom;

namespace {

std::string g_cli, g_data;

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

std::vector<Construction> constructions(size_t max_n) {
  std::vector<Construction> out;
  for (size_t p = 1; p <= 3; ++p)
    for (size_t q = 1; p + q <= 4; ++q) out.push_back(instantiate("proj", p, q));
  for (const char* name : {"siegel", "quat1", "quat2"})
    for (size_t n = 1; n <= max_n; ++n) out.push_back(instantiate(name, n));
  return out;
}

std::string tag(const Construction& c) { return c.name + "(" + c.size_str() + ")"; }

int run_cli(const std::string& args) {
  std::string cmd = "\"" + g_cli + "\" " + args + " > /dev/null 2>&1";
  int rc = std::system(cmd.c_str());
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Outcome lts_catalog() {
  Outcome o;
  size_t systems = 0;
  for (const auto& info : family_catalog())
    for (Ring r : info.rings)
      for (size_t p = 1; p <= 3; ++p)
        for (size_t q = 1; q <= (info.sizes == "n" ? 1 : 3); ++q) {
          FamilyDescriptor f = family(info.label, p, info.sizes == "n" ? 0 : q, r);
          auto runs = run_family(f, 20, 1000 + p * 10 + q);
          for (size_t k = 0; k < runs.size(); ++k) {
            ++systems;
            if (!runs[k].params_valid) o.fail(info.label + " sample " + std::to_string(k) + ": parameter outside its class");
            for (const auto& a : runs[k].report.results)
              if (!a.pass)
                o.fail(info.label + " over " + ring_name(r) + " sizes " + std::to_string(p) + "," + std::to_string(q) +
                       " sample " + std::to_string(k) + ": " + a.axiom);
          }
        }
  if (o.pass) o.detail = std::to_string(family_catalog().size()) + " labels, " + std::to_string(systems) + " systems";
  return o;
}

Outcome decompositions() {
  Outcome o;
  for (const auto& c : constructions(2)) {
    Ambient amb = c.dec.ambient();
    Subspace full = Subspace::full(amb);
    auto basis = full.basis_matrices();
    Subspace total = c.dec.pieces.front();
    size_t sum = 0;
    auto signs = sign_vectors(2);
    for (size_t i = 0; i < signs.size(); ++i) {
      const Subspace& piece = c.dec.pieces[i];
      std::vector<Matrix> proj;
      for (const auto& b : basis) proj.push_back(project(c.invs, signs[i], b));
      Subspace oracle = Subspace::span(amb, proj);
      if (!oracle.is_subspace_of(piece) || !piece.is_subspace_of(oracle))
        o.fail(tag(c) + " piece " + sign_str(signs[i]) + " differs from the projection oracle");
      if (piece.dim() != c.closed_form[i]) o.fail(tag(c) + " piece " + sign_str(signs[i]) + " dim mismatch");
      if (!model_is_bijection(c, i)) o.fail(tag(c) + " model " + c.models[i].model + " is not a bijection");
      total = total.sum(piece);
      sum += piece.dim();
    }
    if (sum != full.dim() || total.dim() != full.dim()) o.fail(tag(c) + " pieces are not a direct sum");
  }
  Construction q = instantiate("quat2", 1);
  std::vector<size_t> d;
  for (const auto& p : q.dec.pieces) d.push_back(p.dim());
  if (d != std::vector<size_t>{3, 1, 3, 1}) o.fail("quat2(1) dims are not (3,1,3,1)");
  if (o.pass) o.detail = "proj p+q<=4, siegel/quat1/quat2 n<=2; quat2(1) = (3,1,3,1)";
  return o;
}

Outcome stability() {
  Outcome o;
  Rng rng(33);
  size_t checks = 0;
  for (const auto& c : constructions(2)) {
    std::vector<JointDecomposition> decs{c.dec};
    for (const auto& t : c.invs) decs.push_back(joint_eigenspaces({t}));
    for (const auto& dec : decs)
      for (const auto& param_piece : dec.pieces)
        for (size_t k = 0; k < 4; ++k) {
          Matrix a = sample_in(param_piece, rng, k);
          for (const auto& piece : dec.pieces) {
            ++checks;
            if (!check_closure_A(piece, a).pass) o.fail(tag(c) + ": a piece is not closed");
          }
        }
  }
  if (o.pass) o.detail = std::to_string(checks) + " exhaustive closure checks, one and two involutions";
  return o;
}

Outcome tables() {
  Outcome o;
  size_t n_tables = 0;
  for (const auto& c : constructions(2)) {
    TableArtifact t = verify_table(c, 5, 1);
    ++n_tables;
    if (!t.all_verified()) {
      std::string why = tag(c) + " table";
      for (const auto& cell : t.cells)
        if (!cell.failures.empty()) {
          why += ": " + cell.failures.front();
          break;
        }
      o.fail(why);
    }
    std::string sizes = c.name == "proj" ? "--p " + std::to_string(c.p) + " --q " + std::to_string(c.q)
                                         : "--n " + std::to_string(c.p);
    int rc = run_cli("table --construction " + c.name + " " + sizes + " --samples 5 --seed 1");
    if (rc != 0) o.fail("table " + tag(c) + " exited " + std::to_string(rc));
  }
  if (o.pass) o.detail = std::to_string(n_tables) + " tables, 16 cells each, CLI exit 0";
  return o;
}

Outcome scaling() {
  Outcome o;
  Rng rng(5);
  std::vector<Rational> rs{Rational(-1), Rational(2), Rational(1, 3)};
  for (size_t n = 1; n <= 3; ++n)
    for (int k = 0; k < 10; ++k) {
      for (Ring ring : {Ring::Q, Ring::QI}) {
        Matrix a = rng.matrix(n, n + 1, ring), x = rng.matrix(n + 1, n, ring), y = rng.matrix(n + 1, n, ring),
               z = rng.matrix(n + 1, n, ring);
        Matrix base = triple_A(x, y, z, a);
        for (const auto& r : rs)
          if (triple_A(x, y, z, scale(Scalar(r).lifted(ring), a)) != scale(Scalar(r * r).lifted(ring), base))
            o.fail("scaling by r^2");
        if (triple_A(x, y, z, -a) != base) o.fail("[X,Y,Z]_{-A} != [X,Y,Z]_A");
        if (ring == Ring::QI && triple_A(x, y, z, scale(Scalar::unit(Ring::QI, 1), a)) != -base)
          o.fail("parameter iA does not negate the product");
      }
    }
  // c-duality: the primed family is the c-dual of the unprimed one.
  const std::vector<std::string> pairs{"1.A", "2.A", "1.1.a", "1.1.b", "1.1.c", "1.3.a", "3.1.a", "3.1.b", "2.2.a", "2.2.b"};
  for (const auto& label : pairs) {
    bool square = label.rfind("1.A", 0) != 0 && label.rfind("1.3", 0) != 0;
    for (size_t n = 1; n <= 2; ++n) {
      FamilyDescriptor f = square ? family(label, n) : family(label, n, n);
      FamilyDescriptor g = square ? family(label + "'", n) : family(label + "'", n, n);
      for (size_t k = 0; k < 4; ++k) {
        auto prm = f.sample(rng, k);
        TripleSystem a = TripleSystem::from_alpha(f.space, f.make_alpha(prm));
        TripleSystem b = TripleSystem::from_alpha(g.space, g.make_alpha(prm));
        if (a.cdual().structure_constants() != b.structure_constants()) o.fail(label + "' is not the c-dual of " + label);
      }
    }
  }
  if (o.pass) o.detail = "r in {-1, 2, 1/3}, -A, iA; c-duals of " + std::to_string(pairs.size()) + " family pairs";
  return o;
}

// P D P^{-1} with D diagonal in {1, -1, 0}: A^3 = A.
Matrix tripotent(Rng& rng, size_t n) {
  for (;;) {
    Matrix p = rng.matrix(n, n, Ring::Q);
    if (!is_invertible(p)) continue;
    Matrix d(n, n, Ring::Q);
    for (size_t i = 0; i < n; ++i) d.at(i, i) = Scalar(rng.uniform(-1, 1));
    return p * d * inverse(p);
  }
}

Outcome homomorphisms() {
  Outcome o;
  Rng rng(6);
  for (size_t n = 1; n <= 3; ++n)
    for (int k = 0; k < 50; ++k) {
      size_t p = n, q = 1 + static_cast<size_t>(k) % 3, p2 = 1 + static_cast<size_t>(k / 3) % 3, q2 = n;
      Matrix s = rng.matrix(p, p2, Ring::Q), t = rng.matrix(q2, q, Ring::Q), a = rng.matrix(q, p, Ring::Q);
      Matrix x = rng.matrix(p2, q2, Ring::Q), y = rng.matrix(p2, q2, Ring::Q);
      if (!check_hom_SXT(s, t, a, x, y)) o.fail("S[X,Y]_{TAS}T identity, size " + std::to_string(n));
    }
  // A^3 = A: X -> AXA is an endomorphism of g_A.
  for (size_t n = 1; n <= 3; ++n)
    for (int k = 0; k < 10; ++k) {
      Matrix a = tripotent(rng, n);
      if (a * a * a != a) o.fail("tripotent sampler");
      for (int j = 0; j < 5; ++j)
        if (!check_hom_SXT(a, a, a, rng.matrix(n, n, Ring::Q), rng.matrix(n, n, Ring::Q)))
          o.fail("X -> AXA is not an endomorphism for A^3 = A");
    }
  Matrix e11 = Matrix::elementary(2, 2, 0, 0, Scalar(1));
  for (const auto& x : elementary_basis(2, 2, Ring::Q)) {
    Matrix once = e11 * x * e11;
    if (e11 * once * e11 != once) o.fail("X -> E11 X E11 is not idempotent");
  }
  // Gamma action on every construction.
  size_t gammas = 0;
  for (const auto& c : constructions(2)) {
    Subspace fixed = joint_eigenspaces(c.phi).piece({1});
    for (size_t k = 0; k < 3; ++k) {
      Matrix g = sample_in(fixed, rng, 3);
      if (!is_invertible(g)) continue;
      for (const auto& t : sign_vectors(2)) {
        Matrix a = sample_in(c.dec.piece(t), rng, 3);
        GammaResult r = gamma_act(g, a, c.invs[0], c.phi[0]);
        if (!c.dec.piece(t).contains(r.A_prime)) o.fail(tag(c) + ": g A tau(g) leaves its piece");
        for (const auto& s : sign_vectors(2)) {
          ++gammas;
          if (!verify_gamma(r, a, c.dec.piece(s))) o.fail(tag(c) + ": Gamma is not an isomorphism");
        }
      }
    }
  }
  if (gammas == 0) o.fail("no invertible phi-fixed g sampled");
  if (o.pass) o.detail = "150 SXT samples, 30 tripotent A, " + std::to_string(gammas) + " Gamma isomorphisms";
  return o;
}

Outcome groups() {
  Outcome o;
  for (size_t n = 1; n <= 3; ++n) {
    GroupReport r = run_group_checks("all", n, 20, 7 + n);
    for (const auto& a : r.results)
      if (!a.pass) o.fail("n=" + std::to_string(n) + ": " + a.axiom);
  }
  if (o.pass) o.detail = "G/U/S axioms, 1-AX, tangent, linearization; n<=3, 20 samples";
  return o;
}

Outcome hermquat() {
  Outcome o;
  for (size_t n = 1; n <= 3; ++n)
    if (!hermquat_check(n)) o.fail("n=" + std::to_string(n));
  if (o.pass) o.detail = "n = 1, 2, 3";
  return o;
}

Outcome normal_forms() {
  Outcome o;
  Rng rng(9);
  for (size_t k = 0; k < 20; ++k) {
    size_t n = 1 + k % 3;
    std::vector<std::pair<NormalKind, Matrix>> cases{
        {NormalKind::rectangular, sample_in(rect_space(n, 1 + (k / 3) % 3, Ring::Q), rng, k)},
        {NormalKind::symmetric, sample_in(sym_space(n, Ring::Q), rng, k)},
        {NormalKind::skew, sample_in(asym_space(n + 1, Ring::Q), rng, k)},
        {NormalKind::hermitian, sample_in(herm_space(n, Ring::QI), rng, k)}};
    for (const auto& [kind, a] : cases) {
      NormalForm nf = normal_form(a, kind);
      if (!nf.verified || nf.left * a * nf.right != nf.A_nf) o.fail(kind_name(kind) + ": transform identity");
      if (!normal_form_isomorphic(nf)) o.fail(kind_name(kind) + ": triple systems not isomorphic via the witness");
    }
  }
  if (o.pass) o.detail = "20 per kind";
  return o;
}

Outcome determinism() {
  Outcome o;
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / ("homotope-det-" + std::to_string(::getpid()));
  fs::create_directories(dir);
  std::vector<std::string> runs{
      "axioms --family 1.a --p 2 --q 2 --samples 5 --seed 7",
      "axioms --family 3.1.b --n 2 --samples 3 --seed 11",
      "axioms --family pol-2.2 --n 1 --samples 3 --seed 2",
      "table --construction proj --p 2 --q 1 --samples 3 --seed 5",
      "table --construction quat2 --n 1 --samples 3 --seed 5",
      "eigenspaces --construction siegel --n 2",
      "group --check all --n 2 --samples 5 --seed 3",
      "normal-form --kind skew --input \"" + g_data + "/skew.json\"",
      "list-families"};
  for (size_t i = 0; i < runs.size(); ++i) {
    std::string a = (dir / ("a" + std::to_string(i))).string(), b = (dir / ("b" + std::to_string(i))).string();
    int ra = run_cli(runs[i] + " --out \"" + a + "\""), rb = run_cli(runs[i] + " --out \"" + b + "\"");
    std::string ja = slurp(a), jb = slurp(b);
    if (ra != 0 || rb != 0) o.fail(runs[i] + ": exit " + std::to_string(ra));
    else if (ja.empty() || ja != jb) o.fail(runs[i] + ": output differs");
  }
  fs::remove_all(dir);
  if (o.pass) o.detail = std::to_string(runs.size()) + " CLI runs repeated byte-identically";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: acceptance <cli> <data-dir> [criterion...]\n";
    return 2;
  }
  g_cli = argv[1];
  g_data = argv[2];
  std::set<int> only;
  for (int i = 3; i < argc; ++i) only.insert(std::atoi(argv[i]));

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"LTS axiom suite", lts_catalog},          {"eigenspace decompositions", decompositions},
      {"stability", stability},                  {"4x4 tables", tables},
      {"scaling and c-duality", scaling},        {"homomorphisms and Gamma-action", homomorphisms},
      {"groups", groups},                        {"HermQuat", hermquat},
      {"normal forms", normal_forms},            {"determinism", determinism}};
  bool all = true;
  for (size_t i = 0; i < criteria.size(); ++i) {
    int id = static_cast<int>(i) + 1;
    if (!only.empty() && !only.count(id)) continue;
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1fs", secs);
    std::cout << "criterion " << id << ": " << (o.pass ? "PASS" : "FAIL") << "  " << criteria[i].first << " - "
              << o.detail << " [" << buf << "]" << std::endl;
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
