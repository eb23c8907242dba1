#include <doctest.h>

#include "delcode/serialize.hpp"

using namespace delcode;

TEST_SUITE("serialize") {

TEST_CASE("pattern JSON round trip") {
    const ErrorPattern g(12, {{2, ErrorKind::Flip}, {11, ErrorKind::Erasure}});
    const auto j = pattern_to_json(g);
    CHECK(j.dump() == R"({"n":12,"errors":[{"pos":2,"kind":"F"},{"pos":11,"kind":"E"}]})");
    CHECK(pattern_from_json(j) == g);
    CHECK(parse_pattern(j.dump()) == g);
    CHECK(parse_pattern(R"({"n":3,"errors":[]})") == ErrorPattern(3));
}

TEST_CASE("pattern JSON errors") {
    CHECK_THROWS_AS(parse_pattern("{"), InvalidArgument);
    CHECK_THROWS_AS(parse_pattern(R"({"n":3,"errors":[{"pos":4,"kind":"D"}]})"), InvalidArgument);
    CHECK_THROWS_AS(parse_pattern(R"({"n":3,"errors":[{"pos":2,"kind":"D"},{"pos":1,"kind":"D"}]})"),
                    InvalidArgument);
    CHECK_THROWS_AS(parse_pattern(R"({"n":3,"errors":[{"pos":2,"kind":"D"},{"pos":2,"kind":"F"}]})"),
                    InvalidArgument);
    CHECK_THROWS_AS(parse_pattern(R"({"n":3,"errors":[{"pos":1,"kind":"X"}]})"), InvalidArgument);
    CHECK_THROWS_AS(parse_pattern(R"({"errors":[]})"), InvalidArgument);
}

TEST_CASE("far params JSON") {
    const auto p = far_params(12, 3);
    const auto j = far_params_to_json(p);
    CHECK(j.dump() == R"({"n":12,"P":3,"t":4,"s":0,"a1":1,"a2":1})");
    const auto q = far_params_from_json(j);
    CHECK(q.inner_alphabet == p.inner_alphabet);
    CHECK(q.final_alphabet == p.final_alphabet);
    CHECK_THROWS_AS(far_params_from_json(Json::parse(R"({"n":12,"P":3,"t":3,"a1":1,"a2":1})")), InvalidArgument);
    CHECK_THROWS_AS(far_params_from_json(Json::parse(R"({"n":12,"P":3})")), InvalidArgument);
}

TEST_CASE("report JSON shape") {
    VerifyReport r;
    r.mode = VerifyMode::Roundtrip;
    r.code = "vt(n=4,a=0)";
    r.family = "atmost:1";
    r.n = 4;
    r.codebook_size = 4;
    r.family_size = 13;
    r.cases = 52;
    const auto j = report_to_json(r);
    CHECK(j["result"] == "pass");
    CHECK(j["counterexample"].is_null());
    CHECK(j["codebookSize"] == "4");
    CHECK_FALSE(j.contains("trialCount"));
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items()) keys.push_back(k);
    CHECK(keys.front() == "mode");
    CHECK(keys.back() == "counterexamples");
}

TEST_CASE("codebook text") {
    CHECK(codebook_to_text(vt_enumerate({4, 0})) == "0000\n0110\n1001\n1111\n");
    CHECK(codebook_to_text({}).empty());
}

TEST_CASE("bound and fraction JSON") {
    const auto j = bound_to_json(delta_report(5));
    CHECK(j["name"] == "delta");
    CHECK(j["value"] == 0.375);
    const auto f = far_fraction_to_json(far_fraction(10000, 2, 100), 10000, 2, 100);
    CHECK(f["fractionExact"] == "443349976/449985001");
    CHECK(f["meetsBound"] == true);
}

}
