#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "simpend/errors.hpp"
#include "simpend/verify.hpp"

using namespace simpend;

TEST_CASE("every suite runs green") {
    CHECK(verify_suite_names() ==
          std::vector<std::string>{"presentation", "monad", "adjunction", "frieze",
                                   "tl-embedding"});
    for (const std::string& name : verify_suite_names()) {
        const auto results = verify_suite(name);
        CHECK(!results.empty());
        for (const CheckResult& r : results) {
            INFO(name, "/", r.name, ": ", r.detail);
            CHECK(r.passed);
            CHECK(r.detail.empty());
        }
    }
}

TEST_CASE("reports are deterministic") {
    CHECK(verify_suite("presentation") == verify_suite("presentation"));
    CHECK(verify_suite("tl-embedding") == verify_suite("tl-embedding"));
    CHECK_THROWS_AS(verify_suite("friezes"), ValidationError);
}
