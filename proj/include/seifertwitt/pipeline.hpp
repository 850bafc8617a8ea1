#pragma once

#include "seifertwitt/seifert.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace sw {

using Json = nlohmann::ordered_json;

struct InputFile {
    SeifertModule module;
    std::optional<SeifertForm> form;
};

struct RunOptions {
    std::uint64_t seed = 0;
    int degree = 8;
};

struct RunResult {
    Json report;
    std::string verdict;
    bool unsupported = false;
};

// ParseError for schema problems, ValidationError for invariant violations
InputFile parse_input(const Json& j);
InputFile parse_input_text(const std::string& text);
Json emit_input(const InputFile& in);

Json matrix_json(const QMatrix& m);
QMatrix matrix_from_json(const Json& j);

RunResult run_invariants(const InputFile& in, const RunOptions& opt);
RunResult run_invariants(const SeifertForm& f, const RunOptions& opt);
RunResult run_cobordant(const InputFile& a, const InputFile& b, const RunOptions& opt);
RunResult run_cover(const InputFile& in, const RunOptions& opt);
RunResult run_primitive(const InputFile& in, const RunOptions& opt);

// seed-independent summary of an invariants report
Json report_digest(const Json& report);

std::string render_text(const Json& report);

}  // namespace sw
