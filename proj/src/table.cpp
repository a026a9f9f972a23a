#include <sstream>

#include "hom/families.hpp"

namespace hom {

namespace {

// The proj cells with s = t off the diagonal signs: g = A^{-phi} splits into
// the two off-diagonal blocks, each an ideal, exchanged by sigma.
std::vector<std::string> double_group_failures(const Construction& c, const SymmetricPairRec& rec, const Matrix& a) {
  std::vector<std::string> out;
  size_t p = c.p, q = c.q;
  Ambient amb = rec.g.ambient();
  std::vector<Matrix> i1, i2;
  for (const auto& x : rec.g.basis_matrices()) {
    Matrix top(amb.rows, amb.cols, amb.ring), bottom(amb.rows, amb.cols, amb.ring);
    top.set_block(0, p, x.block(0, p, p, q));
    bottom.set_block(p, 0, x.block(p, 0, q, p));
    i1.push_back(top);
    i2.push_back(bottom);
  }
  Subspace s1 = Subspace::span(amb, i1), s2 = Subspace::span(amb, i2);
  if (s1.dim() + s2.dim() != rec.g.dim() || !s1.is_subspace_of(rec.g) || !s2.is_subspace_of(rec.g)) {
    out.push_back("double group: g is not the sum of the two block ideals");
    return out;
  }
  auto b1 = s1.basis_matrices(), b2 = s2.basis_matrices(), bg = rec.g.basis_matrices();
  bool ideals = true, commuting = true;
  for (const auto& x : bg) {
    for (const auto& y : b1) ideals = ideals && s1.contains(bracket_A(x, y, a));
    for (const auto& y : b2) ideals = ideals && s2.contains(bracket_A(x, y, a));
  }
  for (const auto& x : b1)
    for (const auto& y : b2) commuting = commuting && bracket_A(x, y, a).is_zero();
  if (!ideals) out.push_back("double group: block pieces are not ideals");
  if (!commuting) out.push_back("double group: [I1,I2]_A != 0");
  if (rec.sigma_involutions.empty()) {
    out.push_back("double group: no sigma");
    return out;
  }
  size_t i = rec.sigma_involutions.front();
  const MatrixInvolution& tau = c.dec.involutions[i];
  bool swaps = true;
  for (const auto& x : b1) {
    Matrix y = rec.t[i] == 1 ? -tau.apply(x) : tau.apply(x);
    swaps = swaps && s2.contains(y);
  }
  if (!swaps || s1.dim() != s2.dim()) out.push_back("double group: sigma does not swap the ideals");
  return out;
}

bool is_double_group(const Construction& c, const SignVector& s, const SignVector& t) {
  return c.name == "proj" && s == t && s[0] != s[1];
}

}  // namespace

bool TableArtifact::all_verified() const {
  if (!dims_ok || !models_ok) return false;
  for (const auto& cell : cells)
    if (!cell.verified()) return false;
  return true;
}

TableArtifact verify_table(const Construction& c, size_t samples, uint64_t seed) {
  TableArtifact out;
  out.construction = c.name;
  out.sizes = c.size_str();
  out.seed = seed;
  out.samples = samples;
  auto signs = sign_vectors(c.invs.size());
  out.dims_ok = true;
  out.models_ok = true;
  for (size_t i = 0; i < signs.size(); ++i) {
    out.piece_dims.push_back(c.dec.pieces[i].dim());
    out.piece_models.push_back(c.models[i].model);
    if (out.piece_dims.back() != c.closed_form[i]) out.dims_ok = false;
    if (!model_is_bijection(c, i)) out.models_ok = false;
  }
  for (const auto& s : signs)
    for (const auto& t : signs) {
      CellVerdict v;
      v.space = s;
      v.param = t;
      v.double_group = is_double_group(c, s, t);
      v.group_type = s == negate(t) || v.double_group;
      v.space_dim = c.dec.piece(s).dim();
      v.param_dim = c.dec.piece(t).dim();
      out.cells.push_back(std::move(v));
    }

  Rng rng(seed);
  for (size_t ti = 0; ti < signs.size(); ++ti) {
    const SignVector& t = signs[ti];
    for (size_t k = 0; k < samples; ++k) {
      Matrix a = sample_in(c.dec.piece(t), rng, k);
      // Closure of every piece is a property of the column; record it in each cell.
      std::vector<std::string> col_fail;
      for (const auto& u : signs) {
        AxiomResult r = check_closure_A(c.dec.piece(u), a);
        if (!r.pass) col_fail.push_back("sample " + std::to_string(k) + ": piece " + sign_str(u) + " not closed");
      }
      for (size_t si = 0; si < signs.size(); ++si) {
        const SignVector& s = signs[si];
        CellVerdict& v = out.cells[si * signs.size() + ti];
        v.samples++;
        v.failures.insert(v.failures.end(), col_fail.begin(), col_fail.end());
        std::string tag = "sample " + std::to_string(k) + ": ";
        LtsReport lts = check_lts(TripleSystem::from_parameter(c.dec.piece(s), a));
        for (const auto& r : lts.results)
          if (!r.pass) v.failures.push_back(tag + r.axiom);
        SymmetricPairRec rec = symmetric_pair(c.dec, s, t, a);
        for (const auto& r : rec.checks)
          if (!r.pass) v.failures.push_back(tag + r.axiom);
        if (v.double_group)
          for (auto& f : double_group_failures(c, rec, a)) v.failures.push_back(tag + f);
      }
    }
  }
  return out;
}

std::string table_markdown(const TableArtifact& t) {
  std::ostringstream os;
  os << "## " << t.construction << " " << t.sizes << " (samples " << t.samples << ", seed " << t.seed << ")\n\n";
  os << "| piece | model | dim |\n|---|---|---|\n";
  auto signs = sign_vectors(2);
  for (size_t i = 0; i < t.piece_dims.size(); ++i)
    os << "| " << sign_str(signs[i]) << " | " << t.piece_models[i] << " | " << t.piece_dims[i] << " |\n";
  os << "\ndims " << (t.dims_ok ? "ok" : "MISMATCH") << ", models " << (t.models_ok ? "ok" : "FAILED") << "\n\n";
  os << "| space \\ parameter |";
  for (const auto& s : signs) os << " A in " << sign_str(s) << " |";
  os << "\n|---|";
  for (size_t i = 0; i < signs.size(); ++i) os << "---|";
  os << "\n";
  for (size_t si = 0; si < signs.size(); ++si) {
    os << "| " << sign_str(signs[si]) << " |";
    for (size_t ti = 0; ti < signs.size(); ++ti) {
      const CellVerdict& v = t.cells.at(si * signs.size() + ti);
      std::string kind = v.double_group ? "double group" : v.group_type ? "group" : "sym. pair";
      std::string verdict = !v.verified() ? "FAILED" : v.samples == 0 ? "not sampled" : "verified";
      os << " " << kind << ": " << verdict << " |";
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace hom
