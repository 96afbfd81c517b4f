#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "xlab/verify.hpp"

using namespace xlab;

namespace {

bool all_pass(const CheckReport& r) {
    return !r.any_fail() && !r.any_exception();
}

}  // namespace

TEST_CASE("unknown id is rejected") {
    CHECK_THROWS_AS(verify_theorem("9.9", {}), std::invalid_argument);
}

TEST_CASE("small formula suite passes") {
    VerifyOptions opt;
    opt.nu_max = 2;
    opt.delta_max = 2;
    CheckReport r = verify_theorem("L2.2", opt);
    CHECK(r.id == "L2.2");
    CHECK(all_pass(r));
    CHECK(!r.instances.empty());
}

TEST_CASE("identity suite with few cases") {
    VerifyOptions opt;
    opt.cases = 5;
    opt.n_max = 7;
    CheckReport r = verify_theorem("E5.6", opt);
    CHECK(all_pass(r));
}

TEST_CASE("gap suite on a narrow range") {
    VerifyOptions opt;
    opt.n_max = 8;
    CHECK(all_pass(verify_theorem("L3.3", opt)));
    VerifyOptions opt2;
    opt2.n_min = 8;
    opt2.n_max = 10;
    CHECK(all_pass(verify_theorem("L3.4", opt2)));
}

TEST_CASE("desk-scale theorem checks finish without hard fails") {
    VerifyOptions opt;
    opt.n_min = 6;
    opt.n_max = 6;
    CheckReport r = verify_theorem("1.4", opt);
    CHECK_FALSE(r.any_fail());
    CheckReport r5 = verify_theorem("1.5", opt);
    CHECK_FALSE(r5.any_fail());
}
