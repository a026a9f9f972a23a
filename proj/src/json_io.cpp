#include "hom/json_io.hpp"

#include <stdexcept>

namespace hom {

Json to_json(const Matrix& m) {
  Json entries = Json::array();
  for (size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    entries.push_back(std::move(row));
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"ring", ring_name(m.ring())}, {"entries", std::move(entries)}};
}

Matrix matrix_from_json(const Json& j) {
  try {
    size_t rows = j.at("rows").get<size_t>(), cols = j.at("cols").get<size_t>();
    Ring ring = parse_ring(j.at("ring").get<std::string>());
    const Json& e = j.at("entries");
    if (!e.is_array() || e.size() != rows) throw std::invalid_argument("matrix JSON: wrong number of rows");
    Matrix m(rows, cols, ring);
    for (size_t i = 0; i < rows; ++i) {
      if (!e[i].is_array() || e[i].size() != cols) throw std::invalid_argument("matrix JSON: wrong number of columns");
      for (size_t k = 0; k < cols; ++k) {
        const Json& x = e[i][k];
        std::string s = x.is_string() ? x.get<std::string>() : x.is_number_integer() ? std::to_string(x.get<long long>()) : "";
        m.at(i, k) = Scalar::parse(s, ring);
      }
    }
    return m;
  } catch (const nlohmann::json::exception& ex) {
    throw std::invalid_argument(std::string("matrix JSON: ") + ex.what());
  }
}

Json to_json(const MatrixInvolution& t) {
  bool ident = t.twist() == Matrix::identity(t.size(), t.ring());
  return Json{{"kind", t.transpose() ? "anti" : "auto"},
              {"delta", involution_name(t.delta())},
              {"transpose", t.transpose()},
              {"size", t.size()},
              {"ring", ring_name(t.ring())},
              {"twist", ident ? Json("identity") : to_json(t.twist())}};
}

MatrixInvolution involution_from_json(const Json& j) {
  try {
    std::string kind = j.at("kind").get<std::string>();
    if (kind != "anti" && kind != "auto") throw std::invalid_argument("involution JSON: kind must be anti or auto");
    BaseInvolution d = parse_involution(j.at("delta").get<std::string>());
    if (j.contains("transpose") && j.at("transpose").get<bool>() != (kind == "anti"))
      throw std::invalid_argument("involution JSON: transpose must match kind");
    Matrix twist;
    const Json& tw = j.at("twist");
    if (tw.is_string()) {
      if (tw.get<std::string>() != "identity") throw std::invalid_argument("involution JSON: twist must be a matrix or \"identity\"");
      twist = Matrix::identity(j.at("size").get<size_t>(), parse_ring(j.at("ring").get<std::string>()));
    } else {
      twist = matrix_from_json(tw);
    }
    return kind == "anti" ? MatrixInvolution::anti(d, twist) : MatrixInvolution::automorphism(d, twist);
  } catch (const nlohmann::json::exception& ex) {
    throw std::invalid_argument(std::string("involution JSON: ") + ex.what());
  }
}

Json to_json(const AxiomResult& r) {
  Json w = nullptr;
  if (r.witness) {
    Json ms = Json::array();
    for (const auto& m : r.witness->matrices) ms.push_back(to_json(m));
    w = Json{{"indices", r.witness->indices}, {"matrices", std::move(ms)}};
  }
  return Json{{"axiom", r.axiom}, {"pass", r.pass}, {"witness", std::move(w)}};
}

Json to_json(const LtsReport& r) {
  Json a = Json::array();
  for (const auto& x : r.results) a.push_back(to_json(x));
  return a;
}

Json to_json(const JointDecomposition& d) {
  Json invs = Json::array(), pieces = Json::array();
  for (const auto& t : d.involutions) invs.push_back(to_json(t));
  auto signs = sign_vectors(d.involutions.size());
  for (size_t i = 0; i < signs.size(); ++i) {
    Json basis = Json::array();
    for (const auto& b : d.pieces[i].basis_matrices()) basis.push_back(to_json(b));
    pieces.push_back(Json{{"sign", signs[i]}, {"dim", d.pieces[i].dim()}, {"basis", std::move(basis)}});
  }
  return Json{{"involutions", std::move(invs)}, {"pieces", std::move(pieces)}};
}

Json to_json(const TableArtifact& t) {
  Json cells = Json::array();
  for (const auto& c : t.cells)
    cells.push_back(Json{{"space", c.space},
                         {"parameter", c.param},
                         {"kind", c.double_group ? "double group" : c.group_type ? "group" : "symmetric pair"},
                         {"space_dim", c.space_dim},
                         {"parameter_dim", c.param_dim},
                         {"samples", c.samples},
                         {"verified", c.verified()},
                         {"failures", c.failures}});
  Json pieces = Json::array();
  auto signs = sign_vectors(2);
  for (size_t i = 0; i < t.piece_dims.size(); ++i)
    pieces.push_back(Json{{"sign", signs[i]}, {"model", t.piece_models[i]}, {"dim", t.piece_dims[i]}});
  return Json{{"construction", t.construction},
              {"sizes", t.sizes},
              {"seed", t.seed},
              {"samples", t.samples},
              {"pieces", std::move(pieces)},
              {"dims_ok", t.dims_ok},
              {"models_ok", t.models_ok},
              {"cells", std::move(cells)},
              {"all_verified", t.all_verified()}};
}

Json to_json(const FamilyInfo& f) {
  Json rings = Json::array();
  for (Ring r : f.rings) rings.push_back(ring_name(r));
  return Json{{"label", f.label}, {"table", f.table}, {"sizes", f.sizes}, {"rings", std::move(rings)}};
}

Json to_json(const FamilyDescriptor& f) {
  Json params = Json::array();
  for (const auto& p : f.params) params.push_back(Json{{"name", p.name}, {"dim", p.space.dim()}});
  Json out{{"label", f.label},   {"table", f.table},        {"ring", ring_name(f.ring)}, {"p", f.p},
           {"q", f.q},           {"space", f.space_name},   {"space_dim", f.space.dim()}, {"alpha", f.alpha},
           {"parameters", params}, {"pair", f.pair}};
  if (!f.note.empty()) out["note"] = f.note;
  return out;
}

Json to_json(const GroupReport& r) {
  Json res = Json::array();
  for (const auto& x : r.results) res.push_back(to_json(x));
  return Json{{"check", r.check}, {"n", r.n}, {"samples", r.samples}, {"seed", r.seed}, {"results", std::move(res)},
              {"all_pass", r.all_pass()}};
}

Json to_json(const NormalForm& nf) {
  return Json{{"kind", kind_name(nf.kind)}, {"A", to_json(nf.A)},       {"A_nf", to_json(nf.A_nf)},
              {"left", to_json(nf.left)},   {"right", to_json(nf.right)}, {"rank", nf.rank},
              {"signs", nf.signs},          {"verified", nf.verified}};
}

}  // namespace hom
