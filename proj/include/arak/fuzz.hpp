#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "arak/creduced.hpp"
#include "arak/ideal.hpp"
#include "arak/oracle.hpp"

namespace arak {

struct FuzzParams {
    std::uint64_t count = 500;
    std::int64_t d_max = 500;
    std::uint64_t norm_max = 10'000;
    std::vector<mpq_class> Cs{mpq_class(1), mpq_class(6, 5), mpq_class(3, 2), mpq_class(2)};
    std::uint64_t seed = 1;
    std::uint64_t enum_budget = kDefaultEnumBudget;
};

/// Per-case generator: the same (seed, index) always yields the same engine.
std::mt19937_64 case_rng(std::uint64_t seed, std::uint64_t index);

/// Random primitive integral ideal a*Z + (b + omega)*Z with a <= norm_max
/// (a drawn log-uniformly).
FracIdeal random_primitive_integral(const QuadField& F, std::uint64_t norm_max, std::mt19937_64& rng);
std::int64_t random_squarefree(std::int64_t lo, std::int64_t hi, std::mt19937_64& rng);

struct FuzzCase {
    std::uint64_t index = 0;
    std::string kind;  // primitive | scaled | product | integral
    FracIdeal ideal;
    mpq_class C;
};

FuzzCase make_fuzz_case(const FuzzParams& params, std::uint64_t index);

struct CaseResult {
    std::uint64_t index = 0;
    std::int64_t d = 0;
    mpq_class C;
    std::string kind;
    std::optional<std::string> error;  // error code name when a sub-operation threw
    bool branch_undetermined = false;
    bool fast_reduced = false;
    std::string stage;
    bool oracle_verdict = false;
    bool agree = false;
    std::uint64_t g_pairs = 0;  // oracle census of G, one per sign pair
    bool reached_star = false;  // stage BminBmax
    std::vector<std::string> violations;
};

/// Runs the fast test and the oracle on one case and checks every structural
/// property that applies to it (|s2| <= 1, |G| < 17C + 3, covol^2 < 4/C^2,
/// witness range and validity, G' inside G3, monotonicity over params.Cs).
CaseResult run_case(const FuzzParams& params, const FuzzCase& fc);

struct FuzzSummary {
    std::uint64_t cases = 0;
    std::uint64_t agreements = 0;
    std::uint64_t disagreements = 0;
    std::uint64_t branch_undetermined = 0;
    std::uint64_t errors = 0;
    std::uint64_t reached_star = 0;
    std::map<std::string, std::uint64_t> stages;
    std::map<std::string, std::uint64_t> violations;
    std::uint64_t max_g_pairs = 0;
    std::string max_g_pairs_C;  // C at which the maximum occurred
    std::vector<std::uint64_t> disagreement_indices;
};

FuzzSummary summarize(const std::vector<CaseResult>& results);

/// OpenMP over cases; results are ordered by case index.
std::vector<CaseResult> run_fuzz_parallel(const FuzzParams& params);
/// Serial reference; must produce identical results.
std::vector<CaseResult> run_fuzz_serial(const FuzzParams& params);

/// Oracle verdicts under radius slack 1 and 2 agree.
bool radius_insensitive(const FuzzCase& fc, std::uint64_t budget = kDefaultEnumBudget);

} // namespace arak
