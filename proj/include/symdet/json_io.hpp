#pragma once

#include <json.hpp>

#include "symdet/builder.hpp"
#include "symdet/verify.hpp"

// JSON schemas (stable; keys are emitted in sorted order):
//   field:      {"kind":"Q"} | {"kind":"Fp","p":<int>}
//   scalar:     "num/den" or "num" over Q; integer residue over F_p
//   matrix:     {"rows":m,"cols":n,"entries":[[...],...]}
//   polynomial: {"field":...,"vars":[names],"terms":[{"coeff":scalar,"monomial":{name:exp}}]}
//   pencil:     {"field":...,"vars":[names],"size":m,"A0":matrix,"coeff":{name:matrix}}
//   realization: pencil plus {"split":r}
//   script:     {"seed":polynomial,"steps":[{"w":..,"u":..,"v":..}]}
//   build report: {"pencil":...,"script":...,"size_trace":[...],"strategy_trace":[...]}
//   verify report: {"mode":...,"pass":...,"samples":...,"seed":...,"witness":{name:scalar},...}

namespace symdet {

using json = nlohmann::json;

json field_to_json(const FieldDescriptor& desc);
FieldDescriptor field_from_json(const json& j);

json scalar_to_json(const FieldElement& e);
FieldElement scalar_from_json(const json& j, const FieldDescriptor& desc);

json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const json& j, const FieldDescriptor& desc);

json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const json& j);

json pencil_to_json(const SymmetricPencil& p);
SymmetricPencil pencil_from_json(const json& j);

json realization_to_json(const RealizationBlock& r);
RealizationBlock realization_from_json(const json& j);

json script_to_json(const SubstitutionScript& s);
SubstitutionScript script_from_json(const json& j);

json build_report_to_json(const BuildReport& r);

json verify_report_to_json(const VerifyReport& r);

} // namespace symdet
