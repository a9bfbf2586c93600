#include "arak/fuzz.hpp"

#include <algorithm>
#include <cmath>

#include "arak/error.hpp"
#include "arak/numtheory.hpp"
#include "arak/rng.hpp"

namespace arak {

namespace {

std::uint64_t uniform(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) {
    return lo + rng() % (hi - lo + 1);
}

std::uint64_t log_uniform(std::mt19937_64& rng, std::uint64_t hi) {
    const double u = unit_real(rng);
    auto v = static_cast<std::uint64_t>(std::exp(u * std::log(static_cast<double>(hi) + 1.0)));
    return std::clamp<std::uint64_t>(v, 1, hi);
}

bool matches_up_to_sign(const FieldElem& a, const FieldElem& b) { return a == b || a == -b; }

} // namespace

std::mt19937_64 case_rng(std::uint64_t seed, std::uint64_t index) { return substream(seed, index); }

std::int64_t random_squarefree(std::int64_t lo, std::int64_t hi, std::mt19937_64& rng) {
    for (;;) {
        const auto d = static_cast<std::int64_t>(uniform(rng, static_cast<std::uint64_t>(lo),
                                                         static_cast<std::uint64_t>(hi)));
        if (is_squarefree_u64(static_cast<std::uint64_t>(d))) return d;
    }
}

FracIdeal random_primitive_integral(const QuadField& F, std::uint64_t norm_max, std::mt19937_64& rng) {
    const std::int64_t t = F.omega_trace(), n0 = F.omega_const();
    for (;;) {
        const auto a = static_cast<std::int64_t>(log_uniform(rng, norm_max));
        const auto start = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(a));
        // a*Z + (b + omega)*Z is an ideal iff a | N(b + omega) = b^2 + t b - n0
        for (std::int64_t k = 0; k < a; ++k) {
            const std::int64_t b = (start + k) % a;
            const std::int64_t n = ((b * b + t * b - n0) % a + a) % a;
            if (n == 0) return hnf_span(F, {{a, 0}, {b, 1}}, true);
        }
    }
}

FuzzCase make_fuzz_case(const FuzzParams& params, std::uint64_t index) {
    auto rng = case_rng(params.seed, index);
    const QuadField F = make_field(random_squarefree(2, params.d_max, rng));
    FuzzCase fc;
    fc.index = index;
    fc.C = params.Cs[index % params.Cs.size()];
    const std::uint64_t roll = rng() % 100;
    if (roll < 65) {
        fc.kind = "primitive";
        fc.ideal = ideal_inverse(random_primitive_integral(F, params.norm_max, rng));
    } else if (roll < 75) {
        fc.kind = "scaled";
        const std::uint64_t k = uniform(rng, 2, 4);
        const FracIdeal J = random_primitive_integral(F, std::max<std::uint64_t>(1, params.norm_max / (k * k)), rng);
        fc.ideal = ideal_inverse(scale(J, mpq_class(static_cast<unsigned long>(k))));
    } else if (roll < 95) {
        fc.kind = "product";
        const auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(params.norm_max)));
        const FracIdeal J1 = random_primitive_integral(F, std::max<std::uint64_t>(1, root), rng);
        const std::uint64_t n1 = J1.norm().get_num().get_ui();
        const FracIdeal J2 = random_primitive_integral(F, std::max<std::uint64_t>(1, params.norm_max / n1), rng);
        fc.ideal = ideal_inverse(multiply(J1, J2));
    } else {
        fc.kind = "integral";
        fc.ideal = random_primitive_integral(F, params.norm_max, rng);
    }
    return fc;
}

CaseResult run_case(const FuzzParams& params, const FuzzCase& fc) {
    CaseResult res;
    res.index = fc.index;
    res.d = fc.ideal.field().d();
    res.C = fc.C;
    res.kind = fc.kind;
    const mpq_class& C = fc.C;
    try {
        Config cfg;
        cfg.C = C;
        cfg.enum_budget = params.enum_budget;
        Verdict v;
        try {
            v = test_c_reduced(fc.ideal, cfg);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::BranchUndetermined) throw;
            res.branch_undetermined = true;
            res.stage = "BranchUndetermined";
            return res;
        }
        res.fast_reduced = v.reduced;
        res.stage = std::string(to_string(v.stage));
        res.reached_star = v.stage == Stage::BminBmax;

        OracleConfig ocfg;
        ocfg.C = C;
        ocfg.enum_budget = params.enum_budget;
        const OracleReport rep = oracle_test(fc.ideal, ocfg, &v);
        res.oracle_verdict = rep.verdict;
        res.agree = rep.agreement.value_or(false);
        res.g_pairs = rep.g_census.size();

        auto violate = [&](const char* name) { res.violations.emplace_back(name); };
        const mpq_class C2 = C * C;
        if (res.reached_star) {
            const EmbeddedBasis B = embed_and_reduce(fc.ideal);
            for (const auto& c : rep.g_census) {
                if (abs(c.s2) > 1) {
                    violate("s2_bound");
                    break;
                }
            }
            if (mpq_class(static_cast<unsigned long>(rep.g_census.size())) >= 17 * C + 3) violate("card_G");
            if (B.covol_sq() >= 4 / C2) violate("covol_bound");
            if (v.reduced) {
                const QuadNum& w = *v.witness_alpha4;
                if (qcmp(w, 1 / (16 * C2)) <= 0 || qcmp(w, 16 * C2) >= 0) violate("alpha_range");
            }
            // G' (vectors attaining B_min / B_max over the full G) must sit in G3.
            for (const auto& c : rep.g_census) {
                const bool extremal = (c.kind == ConstraintKind::Lower && *c.bound == rep.bmin4) ||
                                      (c.kind == ConstraintKind::Upper && *c.bound == rep.bmax4);
                if (!extremal) continue;
                const bool found = std::any_of(v.candidates.begin(), v.candidates.end(), [&](const Candidate& k) {
                    return matches_up_to_sign(k.g, c.g);
                });
                if (!found) {
                    violate("g_prime_in_G3");
                    break;
                }
            }
            if (rep.feasible_without_defaults && *rep.feasible_without_defaults != rep.verdict) {
                violate("default_bounds_matter");
            }
        }
        if (v.reduced && !validate_witness(fc.ideal, C, *v.witness_alpha4, 1, params.enum_budget)) {
            violate("witness_invalid");
        }
        // Reduced at C must imply reduced at every larger grid value.
        std::vector<mpq_class> grid = params.Cs;
        std::sort(grid.begin(), grid.end());
        bool seen_reduced = false;
        for (const auto& c : grid) {
            const bool r = c == C ? v.reduced : test_c_reduced(fc.ideal, c).reduced;
            if (seen_reduced && !r) {
                violate("monotonicity");
                break;
            }
            seen_reduced = seen_reduced || r;
        }
    } catch (const Error& e) {
        res.error = std::string(to_string(e.code()));
    }
    return res;
}

FuzzSummary summarize(const std::vector<CaseResult>& results) {
    FuzzSummary s;
    mpq_class best_C;
    for (const auto& r : results) {
        ++s.cases;
        ++s.stages[r.stage.empty() ? "Error" : r.stage];
        if (r.error) {
            ++s.errors;
            continue;
        }
        if (r.branch_undetermined) {
            ++s.branch_undetermined;
            continue;
        }
        if (r.agree) {
            ++s.agreements;
        } else {
            ++s.disagreements;
            s.disagreement_indices.push_back(r.index);
        }
        if (r.reached_star) ++s.reached_star;
        for (const auto& v : r.violations) ++s.violations[v];
        if (r.g_pairs > s.max_g_pairs) {
            s.max_g_pairs = r.g_pairs;
            best_C = r.C;
        }
    }
    s.max_g_pairs_C = s.max_g_pairs ? rational_string(best_C) : "";
    return s;
}

std::vector<CaseResult> run_fuzz_parallel(const FuzzParams& params) {
    std::vector<CaseResult> results(params.count);
    const auto n = static_cast<std::int64_t>(params.count);
#pragma omp parallel for schedule(dynamic, 4)
    for (std::int64_t i = 0; i < n; ++i) {
        const auto idx = static_cast<std::uint64_t>(i);
        results[idx] = run_case(params, make_fuzz_case(params, idx));
    }
    return results;
}

std::vector<CaseResult> run_fuzz_serial(const FuzzParams& params) {
    std::vector<CaseResult> results;
    results.reserve(params.count);
    for (std::uint64_t i = 0; i < params.count; ++i) results.push_back(run_case(params, make_fuzz_case(params, i)));
    return results;
}

bool radius_insensitive(const FuzzCase& fc, std::uint64_t budget) {
    OracleConfig a;
    a.C = fc.C;
    a.enum_budget = budget;
    OracleConfig b = a;
    b.radius_slack = 2;
    return oracle_test(fc.ideal, a).verdict == oracle_test(fc.ideal, b).verdict;
}

} // namespace arak
