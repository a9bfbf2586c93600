#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "arak/fuzz.hpp"
#include "arak/json_io.hpp"

using namespace arak;

namespace {

FuzzParams small(std::uint64_t count, std::uint64_t seed) {
    FuzzParams p;
    p.count = count;
    p.seed = seed;
    return p;
}

} // namespace

TEST_CASE("cases are deterministic in (seed, index)") {
    const FuzzParams p = small(10, 3);
    for (std::uint64_t i = 0; i < 10; ++i) {
        const FuzzCase a = make_fuzz_case(p, i), b = make_fuzz_case(p, i);
        CHECK(a.ideal == b.ideal);
        CHECK(a.C == b.C);
        CHECK(a.kind == b.kind);
    }
}

TEST_CASE("generated ideals respect the parameters") {
    const FuzzParams p = small(200, 9);
    for (std::uint64_t i = 0; i < p.count; ++i) {
        const FuzzCase fc = make_fuzz_case(p, i);
        CHECK(fc.ideal.field().d() <= p.d_max);
        CHECK(std::find(p.Cs.begin(), p.Cs.end(), fc.C) != p.Cs.end());
        if (fc.kind == "primitive") {
            CHECK(fc.ideal.contains_one());
            CHECK(1 / fc.ideal.norm() <= p.norm_max);
        }
    }
}

TEST_CASE("random primitive integral ideals") {
    const QuadField F = make_field(79);
    auto rng = case_rng(1, 0);
    for (int i = 0; i < 200; ++i) {
        const FracIdeal J = random_primitive_integral(F, 1000, rng);
        CHECK(J.norm().get_den() == 1);
        CHECK(J.norm() <= 1000);
        CHECK(J.mat()[3] == 1);
    }
}

TEST_CASE("parallel and serial runs are identical") {
    const FuzzParams p = small(40, 5);
    const auto par = run_fuzz_parallel(p), ser = run_fuzz_serial(p);
    REQUIRE(par.size() == ser.size());
    for (std::size_t i = 0; i < par.size(); ++i) CHECK(case_to_json(par[i]).dump() == case_to_json(ser[i]).dump());
    CHECK(fuzz_summary_to_json(p, summarize(par)).dump() == fuzz_summary_to_json(p, summarize(ser)).dump());
}

TEST_CASE("small campaign agrees with the oracle") {
    const FuzzParams p = small(60, 21);
    const FuzzSummary s = summarize(run_fuzz_parallel(p));
    CHECK(s.cases == 60);
    CHECK(s.disagreements == 0);
    CHECK(s.errors == 0);
    CHECK(s.violations.empty());
    CHECK(s.agreements + s.branch_undetermined == 60);
}

TEST_CASE("empty campaign") {
    const FuzzParams p = small(0, 1);
    const FuzzSummary s = summarize(run_fuzz_parallel(p));
    CHECK(s.cases == 0);
    CHECK(s.disagreement_indices.empty());
}
