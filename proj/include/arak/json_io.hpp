#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "arak/census.hpp"
#include "arak/creduced.hpp"
#include "arak/cubic.hpp"
#include "arak/fuzz.hpp"
#include "arak/ideal.hpp"
#include "arak/oracle.hpp"

namespace arak {

using Json = nlohmann::ordered_json;

/// Integers that fit in 64 bits become JSON numbers, larger ones decimal strings.
Json int_json(const mpz_class& z);
/// Accepts a JSON integer or a decimal string. Throws InputError.
mpz_class int_from_json(const Json& j, const char* what);

/// {"d": int, "mat": [[num,den] x 4]} column-major over {1, omega}.
Json ideal_to_json(const FracIdeal& I);
/// Rejects unknown fields; throws InputError / NotSquarefree / OutOfRange /
/// Singular / NotAnIdeal.
FracIdeal ideal_from_json(const Json& j);

Json verdict_to_json(const Verdict& v);
Json oracle_to_json(const OracleReport& r);

Json case_to_json(const CaseResult& c);
Json fuzz_summary_to_json(const FuzzParams& p, const FuzzSummary& s);

/// {"d", "ideal", "C", "expected"} corpus line.
Json corpus_line(const FuzzCase& fc, const std::optional<bool>& expected);

/// {"a","b","c","d","C","precision_bits"}.
Json seed_to_json(const CubicSeed& s);
CubicSeed seed_from_json(const Json& j);

Json checks_to_json(const SeedChecks& c);
Json conditions_to_json(const CardGConditions& c);
/// {"disc","covol","g_count","ambiguous","lower_bound","conditions", ...}.
Json census_to_json(const CubicLattice& L, const CardGConditions& cond, const CensusResult& r);

} // namespace arak
