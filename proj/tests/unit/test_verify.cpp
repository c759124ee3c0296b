#include "doctest.h"
#include "lie/verify.hpp"

using namespace lie;

TEST_CASE("unknown statement ids are rejected") {
    CHECK_THROWS_AS(verify::run("no-such-statement"), std::invalid_argument);
}

TEST_CASE("reports serialize every check") {
    verify::Report r = verify::run("prop-n");
    CHECK(r.pass());
    io::json j = r.to_json();
    CHECK(j["checks"].size() == r.checks.size());
    CHECK(j["pass"] == true);
}

TEST_CASE("reports are deterministic for a fixed seed") {
    verify::Options opt;
    opt.seed = 7;
    CHECK(verify::run("prop-bfield", opt).to_json().dump() == verify::run("prop-bfield", opt).to_json().dump());
}

TEST_CASE("serial and parallel runs agree") {
    verify::Options a, b;
    b.parallel = false;
    CHECK(verify::run("clasif2", a).to_json() == verify::run("clasif2", b).to_json());
}
