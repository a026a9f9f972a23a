#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hom/homotope.hpp"
#include "hom/involution.hpp"
#include "hom/random.hpp"

namespace hom {

// {X in M(n; ring) : dagger(X, d) = sign * X}.
Subspace hermitian_space(size_t n, Ring ring, BaseInvolution d, int sign);
Subspace sym_space(size_t n, Ring ring);
Subspace asym_space(size_t n, Ring ring);
// Hermitian / skew-Hermitian for the standard conjugation of QI or HQ.
Subspace herm_space(size_t n, Ring ring);
Subspace aherm_space(size_t n, Ring ring);
// Hermitian / skew-Hermitian for the split quaternion involution.
Subspace split_herm_space(size_t n);
Subspace split_aherm_space(size_t n);
Subspace rect_space(size_t rows, size_t cols, Ring ring);
// {u X : X in s} for a unit scalar u.
Subspace left_multiple(const Scalar& u, const Subspace& s);

// a + ib -> [[a, b], [-b, a]] in n x n blocks: M(n; QI) -> M(2n; Q).
Matrix complex_to_real(const Matrix& z);
// a + ib -> a + bj: M(n; QI) -> M(n; HQ).
Matrix complex_to_quat(const Matrix& z);
// q -> [[Z, W], [-conj W, conj Z]] in n x n blocks, where
// q = a + bi + cj + dk gives Z = a + bi and W = -d + ci. This is the usual
// Z + Wj embedding precomposed with the inner automorphism of conjugation by
// 1 + i, chosen so that X -> I X^t I corresponds to the split adjoint.
Matrix quat_to_complex(const Matrix& q);
// Entrywise conjugation by j; an automorphism of M(n; HQ).
Matrix conj_by_j(const Matrix& q);

struct ModelMap {
  std::string model;  // e.g. "Sym(n,C)"
  Subspace domain;
  std::function<Matrix(const Matrix&)> map;
};

// One of the four two-involution constructions with its computed joint
// eigenspaces and model identifications.
struct Construction {
  std::string name;  // proj, siegel, quat1, quat2
  size_t p = 0, q = 0;  // proj sizes; n is stored in p otherwise
  std::vector<MatrixInvolution> invs;  // (tau, tau~)
  std::vector<MatrixInvolution> phi;   // single element: tau o tau~
  JointDecomposition dec;
  std::vector<ModelMap> models;        // by sign index
  std::vector<size_t> closed_form;     // expected piece dims by sign index
  std::string size_str() const;
};

// Throws std::invalid_argument on an unknown name or invalid size.
Construction instantiate(const std::string& name, size_t a, size_t b = 0);
const std::vector<std::string>& construction_names();

// Model map is injective with image exactly the computed piece.
bool model_is_bijection(const Construction& c, size_t sign_idx);
// Multiplicativity of quat_to_complex on random samples, and the image of
// M(n; HQ) is the fixed algebra of phi in quat2(n).
bool check_quat_embedding(size_t n, size_t samples, uint64_t seed);
// The fixed algebra of phi in quat1(n) is M(n; Q + Qj), the image of complex_to_quat.
bool quat1_fixed_algebra(size_t n);

// j Herm(n,H) = Aherm(n,H~) and j Aherm(n,H) = Herm(n,H~).
bool hermquat_check(size_t n);

// Parameter sampled from a subspace with rank control by index:
// 0 -> zero, 1 -> basis element of least rank, 2 -> sparse combination,
// 3 -> dense combination (retried towards full rank).
Matrix sample_in(const Subspace& s, Rng& rng, size_t index);

// ------------------------------------------------------------- tables

struct CellVerdict {
  SignVector space, param;
  bool group_type = false;       // antidiagonal, or the proj middle-square diagonal
  bool double_group = false;     // proj middle-square diagonal cell
  size_t space_dim = 0, param_dim = 0;
  size_t samples = 0;
  std::vector<std::string> failures;  // empty iff verified
  bool verified() const { return failures.empty(); }
};

struct TableArtifact {
  std::string construction;
  std::string sizes;
  uint64_t seed = 0;
  size_t samples = 0;
  std::vector<size_t> piece_dims;
  std::vector<std::string> piece_models;
  std::vector<CellVerdict> cells;  // row-major: space sign index, then parameter sign index
  bool dims_ok = false;
  bool models_ok = false;
  bool all_verified() const;
};

TableArtifact verify_table(const Construction& c, size_t samples, uint64_t seed);
std::string table_markdown(const TableArtifact& t);

// ------------------------------------------------------------ catalog

struct ParamSet {
  std::string name;  // e.g. "Sym(q,K)"
  Subspace space;
};

struct FamilyDescriptor {
  std::string label;        // e.g. "1.b", "pol-2", "tpol-1.1"
  std::string table;        // e.g. "1", "2.A", "polarized", "twisted polarized"
  Ring ring = Ring::Q;
  size_t p = 0, q = 0;      // sizes (n stored in p for square families)
  std::string space_name;   // V+ model, e.g. "M(p,q;K)" or "Sym(p,K) x Sym(q,K)"
  Subspace space{Ambient{}};
  std::string alpha;        // formula as shipped
  std::string pair;         // symbolic G/H, metadata only
  std::vector<ParamSet> params;
  std::string note;         // deviation from the printed table, if any
  std::function<AlphaMap(const std::vector<Matrix>&)> make_alpha;

  std::vector<Matrix> sample(Rng& rng, size_t index) const;
};

struct FamilyInfo {
  std::string label;
  std::string table;
  std::string sizes;  // "p,q" or "n"
  std::vector<Ring> rings;
};
const std::vector<FamilyInfo>& family_catalog();
// Throws std::invalid_argument on an unknown label, unsupported ring or invalid size.
FamilyDescriptor family(const std::string& label, size_t p, size_t q = 0, std::optional<Ring> ring = std::nullopt);

struct FamilyRunResult {
  std::vector<Matrix> params;
  bool params_valid = true;
  LtsReport report;
};
std::vector<FamilyRunResult> run_family(const FamilyDescriptor& f, size_t samples, uint64_t seed);

// Printed formulas that fail as stated, with the shipped correction.
struct VerbatimCheck {
  std::string label;
  std::string printed;
  bool closed = false;
  bool lts = false;
};
std::vector<VerbatimCheck> verbatim_checks(size_t n, uint64_t seed);

}  // namespace hom
