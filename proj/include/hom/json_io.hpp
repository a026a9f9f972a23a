#pragma once

#include <json.hpp>

#include "hom/families.hpp"
#include "hom/groups.hpp"
#include "hom/normal_form.hpp"

namespace hom {

using Json = nlohmann::ordered_json;

// {"rows", "cols", "ring", "entries": [[scalar strings]]}.
Json to_json(const Matrix& m);
// Throws std::invalid_argument on malformed input.
Matrix matrix_from_json(const Json& j);

// {"kind": "anti|auto", "delta", "transpose", "twist": matrix or "identity"}.
Json to_json(const MatrixInvolution& t);
MatrixInvolution involution_from_json(const Json& j);

Json to_json(const AxiomResult& r);
Json to_json(const LtsReport& r);
Json to_json(const JointDecomposition& d);
Json to_json(const TableArtifact& t);
Json to_json(const FamilyInfo& f);
Json to_json(const FamilyDescriptor& f);
Json to_json(const GroupReport& r);
Json to_json(const NormalForm& nf);

}  // namespace hom
