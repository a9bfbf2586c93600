// arak_cli: C-reduced ideal tests, oracle cross-checks, fuzz campaigns and
// the cubic census.
//
// Exit codes: 0 success / reduced, 1 not reduced or fuzz failure, 2 input
// error, 3 BranchUndetermined, 4 budget exceeded, 5 precision cap reached.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "arak/census.hpp"
#include "arak/creduced.hpp"
#include "arak/cubic.hpp"
#include "arak/error.hpp"
#include "arak/fuzz.hpp"
#include "arak/json_io.hpp"
#include "arak/numtheory.hpp"
#include "arak/oracle.hpp"

using namespace arak;

namespace {

enum Exit { kOk = 0, kNo = 1, kInput = 2, kBranch = 3, kBudget = 4, kPrecision = 5 };

int exit_for(ErrorCode c) {
    switch (c) {
    case ErrorCode::BranchUndetermined: return kBranch;
    case ErrorCode::EnumerationBudgetExceeded:
    case ErrorCode::SearchBudgetExceeded: return kBudget;
    case ErrorCode::PrecisionInsufficient: return kPrecision;
    default: return kInput;
    }
}

std::uint64_t env_budget(const char* name, std::uint64_t fallback) {
    if (const char* v = std::getenv(name)) {
        try {
            return std::stoull(v);
        } catch (const std::exception&) {
            throw Error(ErrorCode::InputError, std::string("bad value in ") + name);
        }
    }
    return fallback;
}

void emit(const Json& j, const std::string& out) {
    const std::string text = j.dump(2) + "\n";
    if (out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out);
    if (!f) throw Error(ErrorCode::InputError, "cannot write " + out);
    f << text;
}

Json read_json(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw Error(ErrorCode::InputError, "cannot read " + path);
    try {
        return Json::parse(f);
    } catch (const Json::exception& e) {
        throw Error(ErrorCode::InputError, path + ": " + e.what());
    }
}

mpq_class parse_C(const std::string& s) {
    const mpq_class C = parse_rational(s);
    if (C < 1) throw Error(ErrorCode::OutOfRange, "C must be at least 1");
    return C;
}

FracIdeal load_ideal(const std::string& path, std::int64_t d) {
    if (!path.empty()) return ideal_from_json(read_json(path));
    if (d != 0) return unit_ideal(make_field(d));
    throw Error(ErrorCode::InputError, "pass --ideal <path> or --d <int> (the maximal order)");
}

CubicSeed load_seed(const std::string& path, const std::string& coeffs, const std::string& C, unsigned prec) {
    CubicSeed s;
    if (!path.empty()) {
        const Json j = read_json(path);
        // `cubic gen` output wraps the seed next to its checks.
        s = seed_from_json(j.is_object() && j.contains("seed") ? j.at("seed") : j);
    } else if (!coeffs.empty()) {
        std::vector<mpz_class> v;
        std::stringstream ss(coeffs);
        for (std::string tok; std::getline(ss, tok, ',');) {
            mpz_class z;
            if (tok.empty() || z.set_str(tok, 10) != 0) throw Error(ErrorCode::InputError, "bad coefficient '" + tok + "'");
            v.push_back(z);
        }
        if (v.size() != 4) throw Error(ErrorCode::InputError, "--coeffs needs a,b,c,d");
        s.a = v[0];
        s.b = v[1];
        s.c = v[2];
        s.d = v[3];
        if (s.a == 0) throw Error(ErrorCode::InputError, "leading coefficient a must be nonzero");
    } else {
        throw Error(ErrorCode::InputError, "pass a seed file or --coeffs a,b,c,d");
    }
    if (!C.empty()) s.C = parse_C(C);
    if (prec) s.precision_bits = prec;
    return s;
}

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    void report(const char* what) const {
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0);
        std::cerr << what << " elapsed_ms=" << ms.count() << "\n";
    }
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"C-reduced ideal tests for real quadratic fields and the cubic census"};
    app.require_subcommand(1);

    std::string ideal_path, out, C_text = "1/1", slack_text = "1/1";
    std::int64_t d = 0;
    std::uint64_t budget = 0;

    auto* test = app.add_subcommand("test", "decide whether an ideal is C-reduced");
    auto* oracle = app.add_subcommand("oracle", "brute-force ground truth for one ideal");
    for (auto* sc : {test, oracle}) {
        sc->add_option("--ideal", ideal_path, "ideal JSON file");
        sc->add_option("--d", d, "test the maximal order of Q(sqrt d) instead");
        sc->add_option("--C", C_text, "C as num/den (>= 1)");
        sc->add_option("--out", out, "write JSON here instead of stdout");
        sc->add_option("--budget", budget, "lattice enumeration budget");
    }
    oracle->add_option("--radius-slack", slack_text, "multiplier on the G radius, num/den");

    std::uint64_t count = 500, norm_max = 10'000, rng_seed = 1;
    std::int64_t d_max = 500;
    std::vector<std::string> C_list;
    std::string cases_out;
    bool serial = false;
    auto* fuzz = app.add_subcommand("fuzz", "random campaign: fast test vs oracle plus structural properties");
    auto* corpus = app.add_subcommand("corpus", "write a JSONL corpus with oracle verdicts, or check one");
    std::string corpus_in;
    for (auto* sc : {fuzz, corpus}) {
        sc->add_option("--count", count);
        sc->add_option("--d-max", d_max);
        sc->add_option("--norm-max", norm_max);
        sc->add_option("--C", C_list, "grid of C values (repeatable or comma separated)")->delimiter(',');
        sc->add_option("--seed", rng_seed);
        sc->add_option("--out", out);
        sc->add_option("--budget", budget, "lattice enumeration budget per case");
    }
    fuzz->add_option("--cases", cases_out, "also write one JSON line per case");
    fuzz->add_flag("--serial", serial, "use the serial reference loop");
    corpus->add_option("--check", corpus_in, "re-run an existing corpus file and compare");

    auto* cubic = app.add_subcommand("cubic", "cubic counterexample family");
    cubic->require_subcommand(1);
    std::string seed_file, coeffs;
    unsigned prec = 0;
    std::string a_min = "1000", a_max = "10000";
    auto add_seed_opts = [&](CLI::App* sc) {
        sc->add_option("seed_file", seed_file, "seed JSON {a,b,c,d,C,precision_bits}");
        sc->add_option("--coeffs", coeffs, "a,b,c,d instead of a seed file");
        sc->add_option("--C", C_text);
        sc->add_option("--precision-bits", prec);
        sc->add_option("--out", out);
    };
    auto* cdisc = cubic->add_subcommand("disc", "exact discriminant");
    auto* ccheck = cubic->add_subcommand("check", "irreducibility, primality, squarefreeness, conditions");
    auto* ccensus = cubic->add_subcommand("census", "count G");
    for (auto* sc : {cdisc, ccheck, ccensus}) add_seed_opts(sc);
    ccensus->add_option("--budget", budget, "candidate points examined");
    auto* cgen = cubic->add_subcommand("gen", "search for a seed passing every check");
    cgen->add_option("--C", C_text);
    cgen->add_option("--a-min", a_min);
    cgen->add_option("--a-max", a_max);
    cgen->add_option("--seed", rng_seed);
    cgen->add_option("--precision-bits", prec);
    cgen->add_option("--budget", budget, "candidate attempts");
    cgen->add_option("--out", out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kInput;
    }

    try {
        if (test->parsed() || oracle->parsed()) {
            const FracIdeal I = load_ideal(ideal_path, d);
            const mpq_class C = parse_C(C_text);
            const std::uint64_t b = budget ? budget : env_budget("ARAK_ENUM_BUDGET", kDefaultEnumBudget);
            if (test->parsed()) {
                Config cfg;
                cfg.C = C;
                cfg.enum_budget = b;
                const Verdict v = test_c_reduced(I, cfg);
                emit(verdict_to_json(v), out);
                return v.reduced ? kOk : kNo;
            }
            OracleConfig cfg;
            cfg.C = C;
            cfg.radius_slack = parse_rational(slack_text);
            if (cfg.radius_slack < 1) throw Error(ErrorCode::OutOfRange, "radius slack must be at least 1");
            cfg.enum_budget = b;
            std::optional<Verdict> fast;
            try {
                fast = test_c_reduced(I, C);
            } catch (const Error& e) {
                if (e.code() != ErrorCode::BranchUndetermined) throw;
            }
            const OracleReport r = oracle_test(I, cfg, fast ? &*fast : nullptr);
            emit(oracle_to_json(r), out);
            return r.verdict ? kOk : kNo;
        }

        if (fuzz->parsed() || corpus->parsed()) {
            FuzzParams p;
            p.count = count;
            p.d_max = d_max;
            p.norm_max = norm_max;
            p.seed = rng_seed;
            p.enum_budget = budget ? budget : env_budget("ARAK_ENUM_BUDGET", kDefaultEnumBudget);
            if (d_max < 2 || norm_max < 1) throw Error(ErrorCode::InputError, "need d_max >= 2 and norm_max >= 1");
            if (!C_list.empty()) {
                p.Cs.clear();
                for (const auto& c : C_list) p.Cs.push_back(parse_C(c));
            }
            const Timer t;
            if (fuzz->parsed()) {
                const auto results = serial ? run_fuzz_serial(p) : run_fuzz_parallel(p);
                const FuzzSummary s = summarize(results);
                if (!cases_out.empty()) {
                    std::ofstream f(cases_out);
                    if (!f) throw Error(ErrorCode::InputError, "cannot write " + cases_out);
                    for (const auto& r : results) f << case_to_json(r).dump() << "\n";
                }
                emit(fuzz_summary_to_json(p, s), out);
                t.report("fuzz");
                return s.disagreements == 0 && s.violations.empty() && s.errors == 0 ? kOk : kNo;
            }
            if (!corpus_in.empty()) {
                std::ifstream f(corpus_in);
                if (!f) throw Error(ErrorCode::InputError, "cannot read " + corpus_in);
                std::uint64_t lines = 0, mismatches = 0;
                for (std::string line; std::getline(f, line);) {
                    if (line.empty()) continue;
                    ++lines;
                    Json j;
                    try {
                        j = Json::parse(line);
                    } catch (const Json::exception& e) {
                        throw Error(ErrorCode::InputError, "corpus line " + std::to_string(lines) + ": " + e.what());
                    }
                    const FracIdeal I = ideal_from_json(j.at("ideal"));
                    const mpq_class C = parse_C(j.at("C").get<std::string>());
                    const bool fast = test_c_reduced(I, C).reduced;
                    if (!j.at("expected").is_null() && j.at("expected").get<bool>() != fast) ++mismatches;
                }
                Json r;
                r["lines"] = lines;
                r["mismatches"] = mismatches;
                emit(r, out);
                return mismatches == 0 ? kOk : kNo;
            }
            std::ostringstream os;
            for (std::uint64_t i = 0; i < p.count; ++i) {
                const FuzzCase fc = make_fuzz_case(p, i);
                OracleConfig oc;
                oc.C = fc.C;
                oc.enum_budget = p.enum_budget;
                std::optional<bool> expected;
                try {
                    expected = oracle_test(fc.ideal, oc).verdict;
                } catch (const Error&) {
                }
                os << corpus_line(fc, expected).dump() << "\n";
            }
            if (out.empty()) {
                std::cout << os.str();
            } else {
                std::ofstream f(out);
                f << os.str();
            }
            return kOk;
        }

        if (cdisc->parsed()) {
            const CubicSeed s = load_seed(seed_file, coeffs, "", 0);
            Json j;
            j["disc"] = cubic_disc(s.a, s.b, s.c, s.d).get_str();
            emit(j, out);
            return kOk;
        }
        if (ccheck->parsed() || ccensus->parsed()) {
            const CubicSeed s = load_seed(seed_file, coeffs, C_text == "1/1" ? "" : C_text, prec);
            const Timer t;
            const SeedChecks checks = check_seed(s);
            if (ccheck->parsed()) {
                Json j;
                j["seed"] = seed_to_json(s);
                j["checks"] = checks_to_json(checks);
                if (checks.disc_positive) {
                    const CubicLattice L = build_cubic_lattice(s);
                    j["covol"] = L.covol.str(25);
                    j["index_R_in_I"] = index_R_in_I(s).get_str();
                    j["conditions"] = conditions_to_json(verify_cardG_conditions(L, s.C));
                }
                emit(j, out);
                t.report("cubic check");
                return kOk;
            }
            const CubicLattice L = build_cubic_lattice(s);
            const CardGConditions cond = verify_cardG_conditions(L, s.C);
            CensusParams cp;
            cp.C = s.C;
            cp.budget = budget ? budget : env_budget("ARAK_CENSUS_BUDGET", cp.budget);
            const CensusResult r = count_G_cubic(L, cp);
            Json j = census_to_json(L, cond, r);
            j["squarefree"] = std::string(to_string(checks.squarefree));
            emit(j, out);
            t.report("cubic census");
            return r.complete ? kOk : kBudget;
        }
        if (cgen->parsed()) {
            GenParams gp;
            gp.C = parse_C(C_text);
            gp.a_lo = mpz_class(a_min);
            gp.a_hi = mpz_class(a_max);
            gp.seed = rng_seed;
            if (prec) gp.precision_bits = prec;
            gp.max_attempts = budget ? budget : env_budget("ARAK_SEARCH_BUDGET", gp.max_attempts);
            const Timer t;
            const GenResult g = gen_search(gp);
            Json j;
            j["seed"] = seed_to_json(g.seed);
            j["attempts"] = g.attempts;
            j["checks"] = checks_to_json(g.checks);
            j["conditions"] = conditions_to_json(g.conditions);
            emit(j, out);
            t.report("cubic gen");
            return kOk;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_for(e.code());
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInput;
    }
    return kInput;
}
