/*
   Copyright 2026 the lcdmds authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef LCDMDS_JSON_IO_HPP
#define LCDMDS_JSON_IO_HPP

#include <json.hpp>

#include "lcdmds/lcdengine.hpp"

namespace lcdmds {

using json = nlohmann::json;

// Serialization. Field elements travel as canonical integer encodings,
// polynomials as ascending coefficient lists, divisors as
// [{"place": "inf" | [coeffs...], "coeff": int}, ...]. Keys are emitted in
// sorted order, so equal inputs produce byte-identical documents.
json to_json(const FieldCtx& ctx);
json to_json(const Polynomial& p);
json to_json(const Divisor& d);
json to_json(const RationalFunction& u);
json to_json(const LinearCode& code);
json to_json(const ConstructionWitness& witness);
json to_json(const VerificationReport& report);
json to_json(const ConstructionResult& result);
json to_json(const ExplicitParams& params);
json to_json(const std::vector<FeasibleEntry>& entries);

const FieldCtx& field_from_json(const json& j);
Polynomial poly_from_json(const FieldCtx& ctx, const json& j);
Divisor divisor_from_json(const FieldCtx& ctx, const json& j);
RationalFunction rational_from_json(const FieldCtx& ctx, const json& j);
LinearCode code_from_json(const json& j);
ConstructionWitness witness_from_json(const FieldCtx& ctx, const json& j);
ExplicitParams params_from_json(const json& j);

} // namespace lcdmds

#endif
