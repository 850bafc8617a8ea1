#include "seifertwitt.h"

#include "seifertwitt/errors.hpp"
#include "seifertwitt/pipeline.hpp"

#include <fstream>
#include <sstream>
#include <string>

struct sw_input {
    sw::InputFile value;
};

struct sw_result {
    std::string json, text, verdict;
};

namespace {

thread_local std::string last_error;

int fail(int code, const std::string& msg) {
    last_error = msg;
    return code;
}

template <class F>
int guarded(F&& body) {
    try {
        last_error.clear();
        return body();
    } catch (const sw::ParseError& e) {
        return fail(SW_ERR_SCHEMA, e.what());
    } catch (const sw::ShapeError& e) {
        return fail(SW_ERR_SCHEMA, e.what());
    } catch (const sw::ValidationError& e) {
        return fail(SW_ERR_INVALID, e.what());
    } catch (const sw::UnsupportedError& e) {
        return fail(SW_ERR_UNSUPPORTED, e.what());
    } catch (const std::exception& e) {
        return fail(SW_ERROR, e.what());
    } catch (...) {
        return fail(SW_ERROR, "unknown failure");
    }
}

sw::RunOptions options(const sw_options* opt) {
    sw::RunOptions o;
    if (opt) {
        o.seed = opt->seed;
        o.degree = opt->degree;
    }
    return o;
}

int finish(const sw::RunResult& r, sw_result** out) {
    auto* res = new sw_result;
    res->json = r.report.dump(2) + "\n";
    res->text = sw::render_text(r.report);
    res->verdict = r.verdict;
    *out = res;
    if (r.unsupported) {
        last_error = "some pieces are unsupported";
        return SW_ERR_UNSUPPORTED;
    }
    return SW_OK;
}

}  // namespace

extern "C" {

const char* sw_version(void) { return "0.1.0"; }

const char* sw_last_error(void) { return last_error.c_str(); }

void sw_options_default(sw_options* opt) {
    if (!opt) return;
    opt->seed = 0;
    opt->degree = 8;
}

int sw_input_parse(const char* json, sw_input** out) {
    if (!json || !out) return fail(SW_ERR_ARGUMENT, "null argument");
    *out = nullptr;
    return guarded([&] {
        *out = new sw_input{sw::parse_input_text(json)};
        return SW_OK;
    });
}

int sw_input_load(const char* path, sw_input** out) {
    if (!path || !out) return fail(SW_ERR_ARGUMENT, "null argument");
    *out = nullptr;
    std::ifstream f(path);
    if (!f) return fail(SW_ERR_SCHEMA, std::string("cannot read ") + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return sw_input_parse(ss.str().c_str(), out);
}

void sw_input_free(sw_input* in) { delete in; }

int sw_input_mu(const sw_input* in) { return in ? in->value.module.mu : 0; }

int sw_input_dim(const sw_input* in) { return in ? static_cast<int>(in->value.module.dim()) : 0; }

int sw_input_has_form(const sw_input* in) { return in && in->value.form ? 1 : 0; }

int sw_input_zeta(const sw_input* in) { return in && in->value.form ? in->value.form->zeta : 0; }

int sw_run_invariants(const sw_input* in, const sw_options* opt, sw_result** out) {
    if (!in || !out) return fail(SW_ERR_ARGUMENT, "null argument");
    *out = nullptr;
    return guarded([&] { return finish(sw::run_invariants(in->value, options(opt)), out); });
}

int sw_run_cobordant(const sw_input* a, const sw_input* b, const sw_options* opt, sw_result** out) {
    if (!a || !b || !out) return fail(SW_ERR_ARGUMENT, "null argument");
    *out = nullptr;
    return guarded([&] { return finish(sw::run_cobordant(a->value, b->value, options(opt)), out); });
}

int sw_run_cover(const sw_input* in, const sw_options* opt, sw_result** out) {
    if (!in || !out) return fail(SW_ERR_ARGUMENT, "null argument");
    if (opt && opt->degree < 0) return fail(SW_ERR_ARGUMENT, "degree must be non-negative");
    *out = nullptr;
    return guarded([&] { return finish(sw::run_cover(in->value, options(opt)), out); });
}

int sw_run_primitive(const sw_input* in, const sw_options* opt, sw_result** out) {
    if (!in || !out) return fail(SW_ERR_ARGUMENT, "null argument");
    *out = nullptr;
    return guarded([&] { return finish(sw::run_primitive(in->value, options(opt)), out); });
}

const char* sw_result_json(const sw_result* r) { return r ? r->json.c_str() : ""; }

const char* sw_result_text(const sw_result* r) { return r ? r->text.c_str() : ""; }

const char* sw_result_verdict(const sw_result* r) { return r ? r->verdict.c_str() : ""; }

void sw_result_free(sw_result* r) { delete r; }

}
