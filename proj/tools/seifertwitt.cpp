#include "seifertwitt.h"

#include <CLI11.hpp>

#include <cstdio>
#include <string>
#include <vector>

namespace {

struct Inputs {
    std::vector<sw_input*> items;
    ~Inputs() {
        for (auto* p : items) sw_input_free(p);
    }
};

int report_error(int code) {
    std::fprintf(stderr, "seifertwitt: %s\n", sw_last_error());
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Witt-group invariants of Seifert forms and their covering modules"};
    app.require_subcommand(1);
    app.fallthrough();

    sw_options opt;
    sw_options_default(&opt);
    std::string format = "text";
    app.add_option("--seed", opt.seed, "seed for the randomized searches")->capture_default_str();
    app.add_option("--degree", opt.degree, "truncation degree for power series")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();

    std::string first, second;
    auto* inv = app.add_subcommand("invariants", "Witt invariants of a Seifert form");
    inv->add_option("input", first, "input JSON file")->required();
    auto* cob = app.add_subcommand("cobordant", "compare two forms by the invariants of a + (-b)");
    cob->add_option("a", first, "first input")->required();
    cob->add_option("b", second, "second input")->required();
    auto* cov = app.add_subcommand("cover", "covering presentation, truncated inverse and pairing");
    cov->add_option("input", first, "input JSON file")->required();
    auto* prim = app.add_subcommand("primitive", "maximal primitive submodule and minimal coprimitive");
    prim->add_option("input", first, "input JSON file")->required();

    CLI11_PARSE(app, argc, argv);

    Inputs inputs;
    auto load = [&](const std::string& path) -> int {
        sw_input* in = nullptr;
        int rc = sw_input_load(path.c_str(), &in);
        if (rc != SW_OK) return rc;
        inputs.items.push_back(in);
        return SW_OK;
    };
    if (int rc = load(first); rc != SW_OK) return report_error(rc);
    if (cob->parsed())
        if (int rc = load(second); rc != SW_OK) return report_error(rc);

    sw_result* res = nullptr;
    int rc = SW_ERROR;
    if (inv->parsed()) rc = sw_run_invariants(inputs.items[0], &opt, &res);
    else if (cob->parsed()) rc = sw_run_cobordant(inputs.items[0], inputs.items[1], &opt, &res);
    else if (cov->parsed()) rc = sw_run_cover(inputs.items[0], &opt, &res);
    else if (prim->parsed()) rc = sw_run_primitive(inputs.items[0], &opt, &res);

    if (!res) return report_error(rc == SW_OK ? SW_ERROR : rc);
    std::fputs(format == "json" ? sw_result_json(res) : sw_result_text(res), stdout);
    sw_result_free(res);
    if (rc == SW_ERR_UNSUPPORTED) std::fprintf(stderr, "seifertwitt: %s\n", sw_last_error());
    return rc;
}
