#pragma once

#include "lamu/equality.hpp"
#include "lamu/kripke.hpp"
#include "lamu/lambda.hpp"
#include "lamu/logic.hpp"
#include "lamu/subtyping.hpp"
#include "lamu/typing.hpp"

#include <json.hpp>

namespace lamu {

using Json = nlohmann::json;

Json sub_to_json(const SubDerivPtr& d);
SubDerivPtr sub_from_json(const Json& j);

Json typ_to_json(const TypDerivPtr& d);
TypDerivPtr typ_from_json(const Json& j);

Json proof_to_json(const ProofPtr& p);
ProofPtr proof_from_json(const Json& j);

Json frame_to_json(const Frame& f, const Valuation* v = nullptr);
Frame frame_from_json(const Json& j);
Valuation valuation_from_json(const Frame& f, const Json& j);

Json bohm_to_json(const BohmTree& t);
Json tree_to_json(const TypeTree& t);

} // namespace lamu
