#include "arak/json_io.hpp"

#include <set>

#include "arak/error.hpp"
#include "arak/numtheory.hpp"

namespace arak {

namespace {

void reject_unknown(const Json& j, std::initializer_list<const char*> allowed, const char* what) {
    if (!j.is_object()) throw Error(ErrorCode::InputError, std::string(what) + " must be a JSON object");
    const std::set<std::string> ok(allowed.begin(), allowed.end());
    for (const auto& [key, _] : j.items()) {
        if (!ok.count(key)) throw Error(ErrorCode::InputError, std::string("unknown field '") + key + "' in " + what);
    }
}

const Json& require(const Json& j, const char* key, const char* what) {
    if (!j.contains(key)) throw Error(ErrorCode::InputError, std::string("missing field '") + key + "' in " + what);
    return j.at(key);
}

Json opt_quad(const std::optional<QuadNum>& q) { return q ? Json(q->str()) : Json(nullptr); }

} // namespace

Json int_json(const mpz_class& z) {
    if (z.fits_slong_p()) return Json(z.get_si());
    return Json(z.get_str());
}

mpz_class int_from_json(const Json& j, const char* what) {
    if (j.is_number_integer()) return mpz_class(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_string()) {
        mpz_class z;
        const auto& s = j.get_ref<const std::string&>();
        if (s.empty() || z.set_str(s, 10) != 0) {
            throw Error(ErrorCode::InputError, std::string("malformed integer for ") + what + ": '" + s + "'");
        }
        return z;
    }
    throw Error(ErrorCode::InputError, std::string(what) + " must be an integer or a decimal string");
}

Json ideal_to_json(const FracIdeal& I) {
    Json mat = Json::array();
    for (const auto& q : I.mat()) mat.push_back(Json::array({int_json(q.get_num()), int_json(q.get_den())}));
    Json j;
    j["d"] = I.field().d();
    j["mat"] = mat;
    return j;
}

FracIdeal ideal_from_json(const Json& j) {
    reject_unknown(j, {"d", "mat"}, "ideal");
    const Json& d = require(j, "d", "ideal");
    if (!d.is_number_integer()) throw Error(ErrorCode::InputError, "ideal field 'd' must be an integer");
    const QuadField F = make_field(d.get<std::int64_t>());
    const Json& mat = require(j, "mat", "ideal");
    if (!mat.is_array() || mat.size() != 4) throw Error(ErrorCode::InputError, "ideal field 'mat' needs 4 entries");
    Mat2 m;
    for (std::size_t i = 0; i < 4; ++i) {
        const Json& e = mat[i];
        if (!e.is_array() || e.size() != 2) throw Error(ErrorCode::InputError, "matrix entries are [num, den] pairs");
        const mpz_class num = int_from_json(e[0], "numerator"), den = int_from_json(e[1], "denominator");
        if (den == 0) throw Error(ErrorCode::InputError, "zero denominator in ideal matrix");
        m[i] = mpq_class(num, den);
        m[i].canonicalize();
    }
    return ideal_from_matrix(F, m);
}

Json verdict_to_json(const Verdict& v) {
    Json j;
    j["reduced"] = v.reduced;
    j["stage"] = std::string(to_string(v.stage));
    j["bmin4"] = v.bmin4.str();
    j["bmax4"] = v.bmax4.str();
    j["witness_alpha4"] = opt_quad(v.witness_alpha4);
    Json cands = Json::array();
    for (const auto& c : v.candidates) {
        Json cj;
        cj["s1"] = int_json(c.s1);
        cj["s2"] = int_json(c.s2);
        cj["class"] = std::string(to_string(c.cls));
        cj["B4"] = opt_quad(c.B4);
        cands.push_back(cj);
    }
    j["candidates"] = cands;
    j["notes"] = v.notes;
    return j;
}

Json oracle_to_json(const OracleReport& r) {
    Json j;
    j["verdict"] = r.verdict;
    j["reason"] = r.reason;
    Json census = Json::array();
    for (const auto& c : r.g_census) {
        Json cj;
        cj["s1"] = int_json(c.s1);
        cj["s2"] = int_json(c.s2);
        cj["class"] = c.kind == ConstraintKind::Lower ? "G1" : "G2";
        cj["B4"] = opt_quad(c.bound);
        census.push_back(cj);
    }
    j["g_census"] = census;
    j["bmin4"] = r.bmin4.str();
    j["bmax4"] = r.bmax4.str();
    j["radius_sq_used"] = rational_string(r.radius_sq_used);
    j["agreement"] = r.agreement ? Json(*r.agreement) : Json(nullptr);
    return j;
}

Json case_to_json(const CaseResult& c) {
    Json j;
    j["index"] = c.index;
    j["d"] = c.d;
    j["C"] = rational_string(c.C);
    j["kind"] = c.kind;
    j["stage"] = c.stage;
    j["fast"] = c.fast_reduced;
    j["oracle"] = c.oracle_verdict;
    j["agree"] = c.agree;
    j["g_pairs"] = c.g_pairs;
    j["violations"] = c.violations;
    j["error"] = c.error ? Json(*c.error) : Json(nullptr);
    return j;
}

Json fuzz_summary_to_json(const FuzzParams& p, const FuzzSummary& s) {
    Json params;
    params["count"] = p.count;
    params["d_max"] = p.d_max;
    params["norm_max"] = p.norm_max;
    Json cs = Json::array();
    for (const auto& c : p.Cs) cs.push_back(rational_string(c));
    params["C"] = cs;
    params["seed"] = p.seed;

    Json j;
    j["params"] = params;
    j["cases"] = s.cases;
    j["agreements"] = s.agreements;
    j["disagreements"] = s.disagreements;
    j["branch_undetermined"] = s.branch_undetermined;
    j["errors"] = s.errors;
    j["reached_star"] = s.reached_star;
    j["stages"] = s.stages;
    j["violations"] = s.violations;
    Json g;
    g["max_pairs"] = s.max_g_pairs;
    g["at_C"] = s.max_g_pairs_C;
    if (!s.max_g_pairs_C.empty()) {
        const mpq_class C = parse_rational(s.max_g_pairs_C);
        g["bound_17C_plus_3"] = rational_string(17 * C + 3);
    }
    j["g_census"] = g;
    j["disagreement_indices"] = s.disagreement_indices;
    return j;
}

Json corpus_line(const FuzzCase& fc, const std::optional<bool>& expected) {
    Json j;
    j["d"] = fc.ideal.field().d();
    j["ideal"] = ideal_to_json(fc.ideal);
    j["C"] = rational_string(fc.C);
    j["expected"] = expected ? Json(*expected) : Json(nullptr);
    return j;
}

Json seed_to_json(const CubicSeed& s) {
    Json j;
    j["a"] = int_json(s.a);
    j["b"] = int_json(s.b);
    j["c"] = int_json(s.c);
    j["d"] = int_json(s.d);
    j["C"] = rational_string(s.C);
    j["precision_bits"] = s.precision_bits;
    return j;
}

CubicSeed seed_from_json(const Json& j) {
    reject_unknown(j, {"a", "b", "c", "d", "C", "precision_bits"}, "seed");
    CubicSeed s;
    s.a = int_from_json(require(j, "a", "seed"), "a");
    s.b = int_from_json(require(j, "b", "seed"), "b");
    s.c = int_from_json(require(j, "c", "seed"), "c");
    s.d = int_from_json(require(j, "d", "seed"), "d");
    if (j.contains("C")) {
        if (!j["C"].is_string()) throw Error(ErrorCode::InputError, "seed field 'C' must be a \"num/den\" string");
        s.C = parse_rational(j["C"].get<std::string>());
    }
    if (j.contains("precision_bits")) {
        const Json& p = j["precision_bits"];
        if (!p.is_number_integer() || p.get<std::int64_t>() < 64 || p.get<std::int64_t>() > kPrecisionCap) {
            throw Error(ErrorCode::InputError, "precision_bits must be an integer in [64, 4096]");
        }
        s.precision_bits = p.get<unsigned>();
    }
    if (s.a <= 0) throw Error(ErrorCode::InputError, "seed coefficient a must be positive");
    if (s.C < 1) throw Error(ErrorCode::OutOfRange, "C must be at least 1");
    return s;
}

Json checks_to_json(const SeedChecks& c) {
    Json j;
    j["disc"] = c.disc.get_str();
    j["disc_positive"] = c.disc_positive;
    j["irreducible"] = c.irreducible;
    j["rational_root"] = c.rational_root ? Json(rational_string(*c.rational_root)) : Json(nullptr);
    j["gcd_one"] = c.gcd_one;
    j["a_prime"] = c.a_prime;
    j["squarefree"] = std::string(to_string(c.squarefree));
    Json f = Json::array();
    for (const auto& [p, e] : c.disc_factorization.primes) f.push_back(Json::array({p.get_str(), e}));
    j["disc_factors"] = f;
    Json u = Json::array();
    for (const auto& q : c.disc_factorization.unfactored) u.push_back(q.get_str());
    j["disc_unfactored"] = u;
    return j;
}

Json conditions_to_json(const CardGConditions& c) {
    Json j;
    j["one_primitive"] = c.one_primitive;
    j["s1_empty"] = c.s1_empty;
    j["b1_short"] = c.b1_short;
    j["covol_at_least_10"] = c.covol_at_least_10;
    j["all"] = c.all();
    j["s1_ball_points"] = c.s1_ball_points;
    j["notes"] = c.notes;
    return j;
}

Json census_to_json(const CubicLattice& L, const CardGConditions& cond, const CensusResult& r) {
    Json j;
    j["disc"] = L.disc.get_str();
    j["covol"] = L.covol.str(25);
    j["covol_exact_relerr"] = L.covol_relerr.str(3);
    j["g_count"] = r.g_count;
    j["ambiguous"] = r.ambiguous;
    j["lower_bound"] = r.lower_bound.str(25);
    j["conditions"] = conditions_to_json(cond);
    j["delta"] = r.delta.str(25);
    j["per_slab_pairs"] = r.per_slab;
    j["resolved_at_higher_precision"] = r.resolved_at_higher_precision;
    j["examined"] = r.examined;
    j["complete"] = r.complete;
    j["enumeration"] = r.complete ? "complete" : (r.declined_reason.empty() ? "partial" : "declined");
    if (!r.declined_reason.empty()) j["declined_reason"] = r.declined_reason;
    j["estimated_candidates"] = static_cast<double>(r.estimate);
    j["precision_bits"] = L.prec;
    Json basis = Json::array();
    for (const auto& row : L.basis) basis.push_back(Json::array({row[0].str(25), row[1].str(25), row[2].str(25)}));
    j["basis"] = basis;
    return j;
}

} // namespace arak
