#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "seifertwitt.h"

#include <string>

namespace {

std::string data(const char* name) { return std::string(SW_DATA_DIR) + "/" + name; }

sw_input* load(const char* name) {
    sw_input* in = nullptr;
    REQUIRE(sw_input_load(data(name).c_str(), &in) == SW_OK);
    return in;
}

}  // namespace

TEST_CASE("input handles") {
    sw_input* in = load("worked_example.json");
    CHECK(sw_input_mu(in) == 2);
    CHECK(sw_input_dim(in) == 6);
    CHECK(sw_input_has_form(in) == 1);
    CHECK(sw_input_zeta(in) == -1);
    sw_input_free(in);

    sw_input* bad = nullptr;
    CHECK(sw_input_parse("{\"mu\": 1}", &bad) == SW_ERR_SCHEMA);
    CHECK(bad == nullptr);
    CHECK(std::string(sw_last_error()).find("dim") != std::string::npos);
    CHECK(sw_input_load(data("corrupted_projections.json").c_str(), &bad) == SW_ERR_INVALID);
    CHECK(sw_input_load(data("missing.json").c_str(), &bad) == SW_ERR_SCHEMA);
    CHECK(sw_input_parse(nullptr, &bad) == SW_ERR_ARGUMENT);
    CHECK(sw_input_mu(nullptr) == 0);
}

TEST_CASE("runs") {
    sw_options opt;
    sw_options_default(&opt);
    CHECK(opt.degree == 8);
    sw_input* in = load("worked_example.json");
    sw_result* r = nullptr;
    REQUIRE(sw_run_invariants(in, &opt, &r) == SW_OK);
    CHECK(std::string(sw_result_verdict(r)) == "nontrivial");
    std::string json = sw_result_json(r);
    CHECK(json.find("\"minpoly\": \"a^2 - a + 1\"") != std::string::npos);
    CHECK(std::string(sw_result_text(r)).find("verdict: nontrivial") != std::string::npos);
    sw_result* again = nullptr;
    REQUIRE(sw_run_invariants(in, &opt, &again) == SW_OK);
    CHECK(json == sw_result_json(again));
    sw_result_free(again);
    sw_result_free(r);

    REQUIRE(sw_run_cobordant(in, in, &opt, &r) == SW_OK);
    CHECK(std::string(sw_result_verdict(r)) == "cobordant-by-these-invariants");
    sw_result_free(r);

    REQUIRE(sw_run_cover(in, &opt, &r) == SW_OK);
    CHECK(std::string(sw_result_verdict(r)) == "witness found");
    sw_result_free(r);
    opt.degree = -1;
    CHECK(sw_run_cover(in, &opt, &r) == SW_ERR_ARGUMENT);
    opt.degree = 8;

    REQUIRE(sw_run_primitive(in, &opt, &r) == SW_OK);
    CHECK(std::string(sw_result_verdict(r)) == "not primitive, U=dim 1");
    sw_result_free(r);

    sw_input* line = load("line_plus.json");
    CHECK(sw_run_cobordant(in, line, &opt, &r) == SW_ERR_INVALID);
    CHECK(r == nullptr);
    sw_input* module_only = load("s_one.json");
    CHECK(sw_run_invariants(module_only, &opt, &r) == SW_ERR_SCHEMA);

    sw_input* quat = load("quaternion_hyperbolic.json");
    REQUIRE(sw_run_invariants(quat, &opt, &r) == SW_ERR_UNSUPPORTED);
    REQUIRE(r != nullptr);
    CHECK(std::string(sw_result_verdict(r)) == "undetermined(quaternionic)");
    sw_result_free(r);

    sw_input_free(quat);
    sw_input_free(module_only);
    sw_input_free(line);
    sw_input_free(in);
    CHECK(std::string(sw_version()).size() > 0);
}
