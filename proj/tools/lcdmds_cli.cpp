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

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "lcdmds/json_io.hpp"

namespace {

using namespace lcdmds;

// Exit code contract, stable for shell-level harnesses:
//   0 success, 2 infeasible parameters, 3 internal assertion,
//   4 malformed input, 5 MDS undetermined.
constexpr int kExitOk = 0;
constexpr int kExitInfeasible = 2;
constexpr int kExitInternal = 3;
constexpr int kExitMalformed = 4;
constexpr int kExitUndetermined = 5;

struct FieldArgs {
    std::uint32_t p = 0;
    std::uint32_t r = 1;
    std::string modulus;
};

const FieldCtx& resolve_field(const FieldArgs& args) {
    if (args.modulus.empty()) {
        return FieldCtx::make(args.p, args.r);
    }
    std::vector<std::uint32_t> coeffs;
    std::stringstream ss(args.modulus);
    std::string item;
    while (std::getline(ss, item, ',')) {
        coeffs.push_back(static_cast<std::uint32_t>(std::stoul(item)));
    }
    return FieldCtx::with_modulus(args.p, args.r, coeffs);
}

void emit(const json& doc, const std::string& out_path) {
    std::string text = doc.dump(2) + "\n";
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open output file: " + out_path);
        out << text;
    }
}

void add_field_options(CLI::App* cmd, FieldArgs& args) {
    cmd->add_option("--p", args.p, "field characteristic (prime)")->required();
    cmd->add_option("--r", args.r, "extension degree (default 1)");
    cmd->add_option("--modulus", args.modulus,
                    "comma-separated ascending modulus coefficients (optional; canonical "
                    "modulus otherwise)");
}

int run_construct(const FieldArgs& field_args, const std::string& kind_name,
                  const ExplicitParams& params, const VerifyOptions& opts,
                  const std::string& out_path) {
    try {
        const FieldCtx& ctx = resolve_field(field_args);
        ConstructionKind kind = construction_kind_from_string(kind_name);
        ConstructionResult result = explicit_construction(ctx, kind, params, opts);
        emit(to_json(result), out_path);
        return kExitOk;
    } catch (const InfeasibleError& e) {
        std::cerr << "infeasible: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const InternalCheckError& e) {
        std::cerr << "internal check failed: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::invalid_argument& e) {
        std::cerr << "infeasible: " << e.what() << "\n";
        return kExitInfeasible;
    }
}

int run_enumerate(const FieldArgs& field_args, bool verify_entries, const VerifyOptions& opts,
                  const std::string& out_path) {
    try {
        const FieldCtx& ctx = resolve_field(field_args);
        std::vector<FeasibleEntry> entries = enumerate_feasible(ctx);
        if (verify_entries) {
            for (const FeasibleEntry& entry : entries) {
                ConstructionResult result = explicit_construction(ctx, entry.kind, entry.params, opts);
                if (!result.verified.all_pass()) {
                    std::cerr << "entry [" << entry.n << "," << entry.k << "] failed verification\n";
                    return kExitInternal;
                }
            }
        }
        emit(to_json(entries), out_path);
        return kExitOk;
    } catch (const InfeasibleError& e) {
        std::cerr << "infeasible: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const InternalCheckError& e) {
        std::cerr << "internal check failed: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::invalid_argument& e) {
        std::cerr << "infeasible: " << e.what() << "\n";
        return kExitInfeasible;
    }
}

int run_verify(const std::string& in_path, const VerifyOptions& opts, const std::string& out_path) {
    json doc;
    try {
        if (in_path.empty() || in_path == "-") {
            doc = json::parse(std::cin);
        } else {
            std::ifstream in(in_path, std::ios::binary);
            if (!in) {
                std::cerr << "cannot open input file: " << in_path << "\n";
                return kExitMalformed;
            }
            doc = json::parse(in);
        }
    } catch (const json::parse_error& e) {
        std::cerr << "malformed JSON: " << e.what() << "\n";
        return kExitMalformed;
    }

    try {
        LinearCode code = code_from_json(doc);
        json report;
        bool ok;
        if (doc.contains("witness")) {
            ConstructionWitness witness = witness_from_json(code.ctx(), doc.at("witness"));
            VerificationReport rep = verify_certificate(code, witness, opts);
            report = to_json(rep);
            ok = rep.lcd && rep.mds.mds;
        } else {
            int hull = hull_dimension(code);
            report["hull_dimension"] = hull;
            report["lcd"] = (hull == 0);
            try {
                MdsReport mds = is_mds(code, MdsMode::Exhaustive, opts.mds_budget);
                report["mds"] = mds.mds;
                report["mds_mode"] = mds.mode;
                ok = (hull == 0) && mds.mds;
            } catch (const BudgetError& e) {
                report["mds"] = "undetermined";
                report["mds_mode"] = "exhaustive";
                std::cerr << "MDS undetermined: " << e.what() << "\n";
                emit(report, out_path);
                return kExitUndetermined;
            }
        }
        emit(report, out_path);
        return ok ? kExitOk : 1;
    } catch (const json::exception& e) {
        std::cerr << "malformed input: " << e.what() << "\n";
        return kExitMalformed;
    } catch (const InternalCheckError& e) {
        std::cerr << "internal check failed: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::invalid_argument& e) {
        std::cerr << "malformed input: " << e.what() << "\n";
        return kExitMalformed;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"construct, enumerate and verify complementary-dual MDS codes built from "
                 "evaluation codes on the rational function field"};
    app.require_subcommand(1);

    FieldArgs field_args;
    ExplicitParams params;
    VerifyOptions opts;
    std::string kind_name, out_path, in_path;
    bool verify_entries = false;

    std::int64_t n = 0, k = 0, m = 0, t = 0, ell = 0, d = 0;

    CLI::App* construct = app.add_subcommand("construct", "build one code from the catalog");
    add_field_options(construct, field_args);
    construct->add_option("--kind", kind_name, "construction kind: c36i c36ii c37 c38 c39 c310 c311")
        ->required();
    auto* opt_n = construct->add_option("--n", n, "code length");
    auto* opt_k = construct->add_option("--k", k, "code dimension");
    auto* opt_m = construct->add_option("--m", m, "construction parameter m");
    auto* opt_t = construct->add_option("--t", t, "subspace dimension t");
    auto* opt_ell = construct->add_option("--ell", ell, "subgroup order ell");
    auto* opt_d = construct->add_option("--d", d, "coset count d");
    construct->add_option("--mds-budget", opts.mds_budget, "exhaustive MDS subset budget");
    construct->add_option("--seed", opts.seed, "seed for randomized verification sampling");
    construct->add_option("--out", out_path, "output file (default stdout)");

    CLI::App* enumerate = app.add_subcommand("enumerate", "list feasible (n, k) over the field");
    add_field_options(enumerate, field_args);
    enumerate->add_flag("--verify", verify_entries, "construct and verify every entry");
    enumerate->add_option("--mds-budget", opts.mds_budget, "exhaustive MDS subset budget");
    enumerate->add_option("--seed", opts.seed, "seed for randomized verification sampling");
    enumerate->add_option("--out", out_path, "output file (default stdout)");

    CLI::App* verify = app.add_subcommand("verify", "check a code given as JSON");
    verify->add_option("input", in_path, "input file (default stdin)");
    verify->add_option("--mds-budget", opts.mds_budget, "exhaustive MDS subset budget");
    verify->add_option("--seed", opts.seed, "seed for randomized verification sampling");
    verify->add_option("--out", out_path, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    if (opt_n->count()) params.n = n;
    if (opt_k->count()) params.k = k;
    if (opt_m->count()) params.m = m;
    if (opt_t->count()) params.t = t;
    if (opt_ell->count()) params.ell = ell;
    if (opt_d->count()) params.d = d;

    if (construct->parsed()) return run_construct(field_args, kind_name, params, opts, out_path);
    if (enumerate->parsed()) return run_enumerate(field_args, verify_entries, opts, out_path);
    if (verify->parsed()) return run_verify(in_path, opts, out_path);
    return 1;
}
