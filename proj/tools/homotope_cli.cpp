#include <CLI11.hpp>

#include <fstream>
#include <map>
#include <iostream>
#include <optional>
#include <sstream>

#include "hom/json_io.hpp"

using namespace hom;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string label;
  size_t n = 0, p = 0, q = 0;
  std::string ring;
  size_t samples = 0;
  uint64_t seed = 1;
  std::string format = "json";
  std::string out;
  std::string check = "all";
  std::string kind;
  std::string input;
};

struct Output {
  std::string text;
  bool pass = true;
};

void warn_size(size_t s) {
  if (s > 4) std::cerr << "warning: size " << s << " above 4, runtime grows fast\n";
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// Square constructions take n, which --p also supplies.
size_t square_size(const Config& c) {
  size_t n = c.n ? c.n : c.p;
  if (n == 0) throw UsageError("size must be >= 1 (use --n)");
  warn_size(n);
  return n;
}

Output cmd_axioms(const Config& c) {
  const FamilyInfo* info = nullptr;
  for (const auto& f : family_catalog())
    if (f.label == c.label) info = &f;
  if (!info) throw UsageError("unknown family label: " + c.label);
  size_t p, q = 0;
  if (info->sizes == "n") {
    p = square_size(c);
  } else {
    p = c.p, q = c.q;
    if (p == 0 || q == 0) throw UsageError("family " + c.label + " needs --p and --q >= 1");
    warn_size(std::max(p, q));
  }
  std::optional<Ring> ring;
  if (!c.ring.empty()) ring = parse_ring(c.ring);
  FamilyDescriptor f = family(c.label, p, q, ring);
  auto runs = run_family(f, c.samples, c.seed);

  Output out;
  Json jr = Json::array();
  for (size_t k = 0; k < runs.size(); ++k) {
    const auto& r = runs[k];
    Json params = Json::array();
    for (const auto& m : r.params) params.push_back(to_json(m));
    bool pass = r.params_valid && r.report.all_pass();
    out.pass = out.pass && pass;
    jr.push_back(Json{{"sample", k}, {"parameters", std::move(params)}, {"parameters_valid", r.params_valid},
                      {"results", to_json(r.report)}, {"pass", pass}});
  }
  if (c.format == "md") {
    std::ostringstream os;
    os << "## " << f.label << " over " << ring_name(f.ring) << ", V+ = " << f.space_name << " (dim " << f.space.dim()
       << "), alpha = " << f.alpha << "\n\n";
    os << "samples " << c.samples << ", seed " << c.seed << "\n\n| sample | parameters | LT1 | LT2 | LT3 | closure |\n|---|---|---|---|---|---|\n";
    for (size_t k = 0; k < runs.size(); ++k) {
      os << "| " << k << " | " << (runs[k].params_valid ? "ok" : "INVALID") << " |";
      for (const auto& a : runs[k].report.results) os << " " << (a.pass ? "pass" : "FAIL") << " |";
      os << "\n";
    }
    out.text = os.str();
  } else {
    out.text = dump(Json{{"command", "axioms"}, {"family", to_json(f)}, {"samples", c.samples}, {"seed", c.seed},
                         {"runs", std::move(jr)}, {"all_pass", out.pass}});
  }
  return out;
}

Construction construction(const Config& c) {
  const auto& names = construction_names();
  if (std::find(names.begin(), names.end(), c.label) == names.end())
    throw UsageError("unknown construction: " + c.label + " (proj, siegel, quat1, quat2)");
  if (c.label == "proj") {
    if (c.p == 0 || c.q == 0) throw UsageError("proj needs --p and --q >= 1");
    warn_size(c.p + c.q);
    return instantiate("proj", c.p, c.q);
  }
  return instantiate(c.label, square_size(c));
}

Output cmd_table(const Config& c) {
  Construction con = construction(c);
  TableArtifact t = verify_table(con, c.samples, c.seed);
  return {c.format == "md" ? table_markdown(t) : dump(to_json(t)), t.all_verified()};
}

Output cmd_eigenspaces(const Config& c) {
  Construction con = construction(c);
  Output out;
  std::vector<size_t> dims;
  std::vector<Subspace> pieces = con.dec.pieces;
  Subspace total = pieces.front();
  for (size_t i = 1; i < pieces.size(); ++i) total = total.sum(pieces[i]);
  size_t sum = 0;
  for (const auto& s : pieces) {
    dims.push_back(s.dim());
    sum += s.dim();
  }
  Ambient amb = con.dec.ambient();
  bool direct = sum == total.dim() && total.dim() == Subspace::full(amb).dim();
  bool closed_forms = dims == con.closed_form;
  Json models = Json::array();
  bool models_ok = true;
  for (size_t i = 0; i < pieces.size(); ++i) {
    bool ok = model_is_bijection(con, i);
    models_ok = models_ok && ok;
    models.push_back(Json{{"model", con.models[i].model}, {"bijection", ok}});
  }
  out.pass = direct && closed_forms && models_ok;
  if (c.format == "md") {
    std::ostringstream os;
    os << "## " << con.name << " " << con.size_str() << "\n\n| piece | model | dim | bijection |\n|---|---|---|---|\n";
    auto signs = sign_vectors(2);
    for (size_t i = 0; i < pieces.size(); ++i)
      os << "| " << sign_str(signs[i]) << " | " << con.models[i].model << " | " << dims[i] << " | "
         << (models[i]["bijection"].get<bool>() ? "yes" : "NO") << " |\n";
    os << "\ndirect sum " << (direct ? "yes" : "NO") << ", closed forms " << (closed_forms ? "match" : "MISMATCH") << "\n";
    out.text = os.str();
  } else {
    out.text = dump(Json{{"command", "eigenspaces"},
                         {"construction", con.name},
                         {"sizes", con.size_str()},
                         {"ambient_dim", Subspace::full(amb).dim()},
                         {"dims", dims},
                         {"closed_form", con.closed_form},
                         {"direct_sum", direct},
                         {"models", std::move(models)},
                         {"decomposition", to_json(con.dec)},
                         {"pass", out.pass}});
  }
  return out;
}

Output cmd_group(const Config& c) {
  const auto& checks = group_checks();
  if (std::find(checks.begin(), checks.end(), c.check) == checks.end()) throw UsageError("unknown group check: " + c.check);
  if (c.n == 0) throw UsageError("group needs --n >= 1");
  warn_size(c.n);
  GroupReport r = run_group_checks(c.check, c.n, c.samples, c.seed);
  Output out{"", r.all_pass()};
  if (c.format == "md") {
    std::ostringstream os;
    os << "## group " << r.check << ", n = " << r.n << " (samples " << r.samples << ", seed " << r.seed
       << ")\n\n| check | verdict |\n|---|---|\n";
    for (const auto& a : r.results) os << "| " << a.axiom << " | " << (a.pass ? "pass" : "FAIL") << " |\n";
    out.text = os.str();
  } else {
    Json j = to_json(r);
    out.text = dump(Json{{"command", "group"}, {"report", std::move(j)}});
  }
  return out;
}

Output cmd_normal_form(const Config& c) {
  if (c.kind.empty()) throw UsageError("normal-form needs --kind");
  if (c.input.empty()) throw UsageError("normal-form needs --input");
  NormalKind kind = parse_kind(c.kind);
  std::ifstream in(c.input);
  if (!in) throw UsageError("cannot read " + c.input);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("invalid JSON in ") + c.input + ": " + e.what());
  }
  NormalForm nf = normal_form(matrix_from_json(j), kind);
  bool iso = normal_form_isomorphic(nf);
  Output out{"", nf.verified && iso};
  if (c.format == "md") {
    std::ostringstream os;
    os << "## " << kind_name(kind) << " normal form\n\nA_nf = " << nf.A_nf.str() << "\n\nleft = " << nf.left.str()
       << "\n\nright = " << nf.right.str() << "\n\nrank " << nf.rank << ", transform " << (nf.verified ? "verified" : "FAILED")
       << ", isomorphism " << (iso ? "verified" : "FAILED") << "\n";
    out.text = os.str();
  } else {
    Json r = to_json(nf);
    r["isomorphic"] = iso;
    out.text = dump(Json{{"command", "normal-form"}, {"result", std::move(r)}});
  }
  return out;
}

Output cmd_list_families(const Config& c) {
  if (c.format == "md") {
    std::ostringstream os;
    os << "| label | table | sizes | rings |\n|---|---|---|---|\n";
    for (const auto& f : family_catalog()) {
      os << "| " << f.label << " | " << f.table << " | " << f.sizes << " |";
      for (size_t i = 0; i < f.rings.size(); ++i) os << (i ? ", " : " ") << ring_name(f.rings[i]);
      os << " |\n";
    }
    return {os.str(), true};
  }
  Json fams = Json::array();
  for (const auto& f : family_catalog()) fams.push_back(to_json(f));
  return {dump(Json{{"families", std::move(fams)}, {"constructions", construction_names()}}), true};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Homotopes of Lie algebras, Lie triple systems and classical groups, verified in exact arithmetic"};
  app.require_subcommand(1);
  Config cfg;

  auto add_common = [&](CLI::App* s, bool sizes) {
    if (sizes) {
      s->add_option("--n", cfg.n, "size n")->check(CLI::NonNegativeNumber);
      s->add_option("--p", cfg.p, "size p")->check(CLI::NonNegativeNumber);
      s->add_option("--q", cfg.q, "size q")->check(CLI::NonNegativeNumber);
    }
    s->add_option("--format", cfg.format, "json or md")->check(CLI::IsMember({"json", "md"}));
    s->add_option("--out", cfg.out, "output file (default stdout)");
  };
  std::map<CLI::App*, std::pair<CLI::Option*, size_t>> samples_opt;
  auto add_sampling = [&](CLI::App* s, size_t default_samples) {
    samples_opt[s] = {s->add_option("--samples", cfg.samples, "number of seeded samples (default " +
                                                                   std::to_string(default_samples) + ")"),
                      default_samples};
    s->add_option("--seed", cfg.seed, "64-bit seed (default 1)");
  };

  auto* axioms = app.add_subcommand("axioms", "LTS axiom suite for a family of the classification catalog");
  axioms->add_option("--family,--construction", cfg.label, "family label, e.g. 1.a, 2.A', pol-2")->required();
  axioms->add_option("--ring,--field", cfg.ring, "Q, QI or HQ (default: the family's first ring)");
  add_common(axioms, true);
  add_sampling(axioms, 20);

  auto* table = app.add_subcommand("table", "verify the 4x4 table of a two-involution construction");
  table->add_option("--construction,--family", cfg.label, "proj, siegel, quat1, quat2")->required();
  add_common(table, true);
  add_sampling(table, 5);

  auto* eig = app.add_subcommand("eigenspaces", "joint eigenspace decomposition of a construction");
  eig->add_option("--construction,--family", cfg.label, "proj, siegel, quat1, quat2")->required();
  add_common(eig, true);

  auto* group = app.add_subcommand("group", "group axioms for G_A, U_A, S_A over Q");
  group->add_option("--check", cfg.check, "axioms, membership, tangent, linearization or all")->default_val("all");
  add_common(group, true);
  add_sampling(group, 20);

  auto* nf = app.add_subcommand("normal-form", "congruence or equivalence normal form of a parameter");
  nf->add_option("--kind", cfg.kind, "rectangular, symmetric, skew or hermitian")->required();
  nf->add_option("--input", cfg.input, "matrix JSON file")->required();
  add_common(nf, false);

  auto* list = app.add_subcommand("list-families", "list family labels and constructions");
  add_common(list, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  for (const auto& [sub, opt] : samples_opt)
    if (sub->parsed() && opt.first->count() == 0) cfg.samples = opt.second;

  Output out;
  try {
    if (axioms->parsed()) out = cmd_axioms(cfg);
    else if (table->parsed()) out = cmd_table(cfg);
    else if (eig->parsed()) out = cmd_eigenspaces(cfg);
    else if (group->parsed()) out = cmd_group(cfg);
    else if (nf->parsed()) out = cmd_normal_form(cfg);
    else out = cmd_list_families(cfg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  if (cfg.out.empty()) {
    std::cout << out.text;
  } else {
    std::ofstream f(cfg.out);
    if (!f) {
      std::cerr << "error: cannot write " << cfg.out << "\n";
      return 2;
    }
    f << out.text;
  }
  return out.pass ? 0 : 1;
}
