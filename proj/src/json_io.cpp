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

#include "lcdmds/json_io.hpp"

namespace lcdmds {

json to_json(const FieldCtx& ctx) {
    return json{{"p", ctx.p()}, {"r", ctx.r()}, {"modulus", ctx.modulus()}};
}

json to_json(const Polynomial& p) {
    json coeffs = json::array();
    for (std::size_t i = 0; i < p.size(); ++i) coeffs.push_back(p.coeff_enc(i));
    return coeffs;
}

json to_json(const Divisor& d) {
    json terms = json::array();
    for (const auto& [place, coeff] : d.terms()) {
        json place_json;
        if (place.is_infinity()) {
            place_json = "inf";
        } else {
            place_json = to_json(place.irreducible());
        }
        terms.push_back(json{{"place", place_json}, {"coeff", coeff}});
    }
    return terms;
}

json to_json(const RationalFunction& u) {
    return json{{"num", to_json(u.num())}, {"den", to_json(u.den())}};
}

namespace {

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

json mds_to_json(const MdsReport& mds) {
    if (mds.mode == "certified") return mds.mds ? json("certified") : json(false);
    return json(mds.mds);
}

} // namespace

json to_json(const LinearCode& code) {
    return json{{"field", to_json(code.ctx())},
                {"n", code.n()},
                {"k", code.k()},
                {"generator", matrix_to_json(code.generator())},
                {"rref", matrix_to_json(code.canonical())}};
}

json to_json(const ConstructionWitness& witness) {
    json alphas = json::array();
    for (const FieldElement& a : witness.eval.alphas()) alphas.push_back(a.enc());
    json sqrts = json::array();
    for (const FieldElement& s : witness.sqrt_values) sqrts.push_back(s.enc());
    return json{{"alphas", alphas},
                {"h", to_json(witness.h)},
                {"a", to_json(witness.a)},
                {"b", to_json(witness.b)},
                {"y", to_json(witness.y)},
                {"sqrt_values", sqrts},
                {"w", to_json(witness.w)},
                {"code_divisor", to_json(witness.code_divisor)}};
}

json to_json(const VerificationReport& report) {
    return json{{"lcd", report.lcd},
                {"hull_dimension", report.hull},
                {"mds", mds_to_json(report.mds)},
                {"mds_mode", report.mds.mode},
                {"dual_match", report.dual_match}};
}

json to_json(const ExplicitParams& params) {
    json out = json::object();
    if (params.n) out["n"] = *params.n;
    if (params.k) out["k"] = *params.k;
    if (params.m) out["m"] = *params.m;
    if (params.t) out["t"] = *params.t;
    if (params.ell) out["ell"] = *params.ell;
    if (params.d) out["d"] = *params.d;
    return out;
}

json to_json(const ConstructionResult& result) {
    json out = to_json(result.code);
    out["kind"] = result.kind;
    out["params"] = json::object();
    for (const auto& [key, value] : result.params) out["params"][key] = value;
    out["witness"] = to_json(result.witness);
    out["verified"] = to_json(result.verified);
    out["notes"] = result.notes;
    return out;
}

json to_json(const std::vector<FeasibleEntry>& entries) {
    json out = json::array();
    for (const FeasibleEntry& entry : entries) {
        out.push_back(json{{"n", entry.n},
                           {"k", entry.k},
                           {"kind", to_string(entry.kind)},
                           {"params", to_json(entry.params)},
                           {"notes", entry.notes}});
    }
    return out;
}

const FieldCtx& field_from_json(const json& j) {
    if (!j.is_object() || !j.contains("p") || !j.contains("r") || !j.contains("modulus")) {
        throw std::invalid_argument("field description needs p, r and modulus");
    }
    return FieldCtx::with_modulus(j.at("p").get<std::uint32_t>(), j.at("r").get<std::uint32_t>(),
                                  j.at("modulus").get<std::vector<std::uint32_t>>());
}

Polynomial poly_from_json(const FieldCtx& ctx, const json& j) {
    if (!j.is_array()) throw std::invalid_argument("polynomial must be a coefficient array");
    return Polynomial(ctx, j.get<std::vector<std::uint32_t>>());
}

Divisor divisor_from_json(const FieldCtx& ctx, const json& j) {
    if (!j.is_array()) throw std::invalid_argument("divisor must be an array of terms");
    Divisor out(ctx);
    for (const json& term : j) {
        int coeff = term.at("coeff").get<int>();
        const json& place = term.at("place");
        if (place.is_string() && place.get<std::string>() == "inf") {
            out.add_place(Place::at_infinity(ctx), coeff);
        } else {
            out.add_place(Place::finite(poly_from_json(ctx, place)), coeff);
        }
    }
    return out;
}

RationalFunction rational_from_json(const FieldCtx& ctx, const json& j) {
    return RationalFunction(poly_from_json(ctx, j.at("num")), poly_from_json(ctx, j.at("den")));
}

LinearCode code_from_json(const json& j) {
    const FieldCtx& ctx = field_from_json(j.at("field"));
    const std::size_t n = j.at("n").get<std::size_t>();
    const json& rows = j.at("generator");
    if (!rows.is_array()) throw std::invalid_argument("generator must be an array of rows");
    Matrix m(ctx, rows.size(), n);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const json& row = rows[i];
        if (!row.is_array() || row.size() != n) {
            throw std::invalid_argument("generator rows must have length n");
        }
        for (std::size_t col = 0; col < n; ++col) {
            std::uint32_t enc = row[col].get<std::uint32_t>();
            if (enc >= ctx.q()) throw std::invalid_argument("matrix entry out of field range");
            m.set(i, col, enc);
        }
    }
    LinearCode code(ctx, n, std::move(m));
    if (j.contains("k") && j.at("k").get<std::size_t>() != code.k()) {
        throw std::invalid_argument("stated k does not match the generator rank");
    }
    return code;
}

ConstructionWitness witness_from_json(const FieldCtx& ctx, const json& j) {
    std::vector<FieldElement> alphas;
    for (const json& a : j.at("alphas")) alphas.push_back(ctx.element(a.get<std::uint32_t>()));
    EvaluationSet eval(ctx, std::move(alphas));
    std::vector<FieldElement> sqrts;
    for (const json& s : j.at("sqrt_values")) sqrts.push_back(ctx.element(s.get<std::uint32_t>()));
    return ConstructionWitness{std::move(eval),
                        divisor_from_json(ctx, j.at("h")),
                        divisor_from_json(ctx, j.at("a")),
                        divisor_from_json(ctx, j.at("b")),
                        rational_from_json(ctx, j.at("y")),
                        std::move(sqrts),
                        poly_from_json(ctx, j.at("w")),
                        divisor_from_json(ctx, j.at("code_divisor"))};
}

ExplicitParams params_from_json(const json& j) {
    ExplicitParams out;
    auto read = [&j](const char* key) -> std::optional<std::int64_t> {
        if (j.contains(key)) return j.at(key).get<std::int64_t>();
        return std::nullopt;
    };
    out.n = read("n");
    out.k = read("k");
    out.m = read("m");
    out.t = read("t");
    out.ell = read("ell");
    out.d = read("d");
    return out;
}

} // namespace lcdmds
