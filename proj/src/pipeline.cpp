#include "seifertwitt/pipeline.hpp"

#include "seifertwitt/covering.hpp"
#include "seifertwitt/devissage.hpp"
#include "seifertwitt/endo_field.hpp"
#include "seifertwitt/errors.hpp"
#include "seifertwitt/primitives.hpp"
#include "seifertwitt/witt.hpp"

#include <algorithm>
#include <sstream>

namespace sw {

namespace {

Rat rat_from_json(const Json& j) {
    if (j.is_string()) return parse_rat(j.get<std::string>());
    if (j.is_number_integer()) return Rat(Int(std::to_string(j.get<long long>())));
    throw ParseError("matrix entries must be rational strings");
}

long integer_field(const Json& j, const char* key) {
    if (!j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
    const Json& v = j.at(key);
    if (!v.is_number_integer()) throw ParseError(std::string("field '") + key + "' must be an integer");
    return v.get<long>();
}

QMatrix square_matrix(const Json& j, std::size_t n, const std::string& what) {
    QMatrix m = matrix_from_json(j);
    if (m.rows() != n || (n > 0 && m.cols() != n)) throw ParseError(what + " must be " + std::to_string(n) + "x" + std::to_string(n));
    return n == 0 ? QMatrix(0, 0) : m;
}

void check_integral(const QMatrix& m, const std::string& what) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j).get_den() != 1) throw ValidationError("ring", what + " has a non-integral entry over Z");
}

Json terms_json(const std::vector<std::pair<std::string, std::string>>& terms) {
    Json out = Json::array();
    for (const auto& [w, c] : terms) out.push_back({{"word", w}, {"coeff", c}});
    return out;
}

Json elem_json(const GroupRingElem& g) {
    Json out = Json::array();
    for (const auto& [w, c] : g.terms()) out.push_back({{"word", w.to_string()}, {"coeff", to_string(c)}});
    return out;
}

Json group_matrix_json(const GroupRingMatrix& m) {
    Json out = Json::array();
    for (const auto& row : m) {
        Json r = Json::array();
        for (const auto& g : row) r.push_back(elem_json(g));
        out.push_back(r);
    }
    return out;
}

Json series_matrix_json(const SeriesMatrix& m) {
    Json out = Json::array();
    for (const auto& row : m) {
        Json r = Json::array();
        for (const auto& s : row) r.push_back(terms_json(s.terms()));
        out.push_back(r);
    }
    return out;
}

Json poly_list(const std::vector<QPoly>& ps) {
    Json out = Json::array();
    for (const auto& p : ps) out.push_back(p.to_string("a"));
    return out;
}

Json report_json(const InvariantReport& r) {
    Json sig = Json::array();
    for (const auto& s : r.signatures) sig.push_back({{"place", s.place}, {"value", s.value}});
    Json disc = {{"group", r.discriminant.group},
                 {"representative", r.discriminant.representative.to_string("a")},
                 {"label", r.discriminant.label},
                 {"decidable", r.discriminant.decidable},
                 {"trivial", r.discriminant.trivial}};
    Json hasse = nullptr;
    if (r.hasse) {
        Json places = Json::array();
        for (const auto& p : r.hasse->nontrivial) places.push_back(p == 0 ? std::string("inf") : to_string(p));
        hasse = {{"minus_one_places", places}, {"matches_hyperbolic", r.hasse->matches_hyperbolic}};
    }
    return {{"algebra", r.algebra_kind},
            {"minpoly", r.minpoly},
            {"involution", r.involution},
            {"rank", r.rank},
            {"rank_mod2", r.rank_mod2},
            {"diagonal", r.diagonal},
            {"signatures", sig},
            {"discriminant", disc},
            {"hasse_witt", hasse},
            {"status", r.status},
            {"nontrivial", r.nontrivial},
            {"trivial", r.trivial}};
}

std::string ring_name(Ring r) { return r == Ring::Z ? "Z" : "Q"; }

std::string count_word(std::size_t k) {
    static const char* words[] = {"zero", "one", "two", "three", "four", "five", "six", "seven", "eight", "nine"};
    return k < 10 ? words[k] : std::to_string(k);
}

}  // namespace

Json matrix_json(const QMatrix& m) {
    Json out = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
        out.push_back(row);
    }
    return out;
}

QMatrix matrix_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("matrix must be an array of rows");
    if (j.empty()) return QMatrix(0, 0);
    std::size_t cols = 0;
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_array()) throw ParseError("matrix rows must be arrays");
        if (i == 0) cols = j[i].size();
        else if (j[i].size() != cols) throw ParseError("ragged matrix");
    }
    QMatrix m(j.size(), cols);
    for (std::size_t i = 0; i < j.size(); ++i)
        for (std::size_t c = 0; c < cols; ++c) m(i, c) = rat_from_json(j[i][c]);
    return m;
}

InputFile parse_input(const Json& j) {
    if (!j.is_object()) throw ParseError("input must be a JSON object");
    long mu = integer_field(j, "mu");
    if (mu < 1) throw ParseError("mu must be at least 1");
    long dim = integer_field(j, "dim");
    if (dim < 0) throw ParseError("dim must be non-negative");
    std::size_t n = static_cast<std::size_t>(dim);
    if (!j.contains("ring") || !j["ring"].is_string()) throw ParseError("missing field 'ring'");
    std::string ring = j["ring"].get<std::string>();
    if (ring != "Z" && ring != "Q") throw ParseError("ring must be \"Z\" or \"Q\"");
    if (!j.contains("s")) throw ParseError("missing field 's'");
    if (!j.contains("projections") || !j["projections"].is_object()) throw ParseError("missing field 'projections'");

    InputFile in;
    SeifertModule& m = in.module;
    m.mu = static_cast<int>(mu);
    m.ring = ring == "Z" ? Ring::Z : Ring::Q;
    m.s = square_matrix(j["s"], n, "s");
    const Json& pj = j["projections"];
    std::string type = pj.value("type", "");
    if (type == "blocks") {
        if (!pj.contains("sizes") || !pj["sizes"].is_array()) throw ParseError("blocks need 'sizes'");
        std::vector<std::size_t> sizes;
        for (const auto& x : pj["sizes"]) {
            if (!x.is_number_integer() || x.get<long>() < 0) throw ParseError("block sizes must be non-negative integers");
            sizes.push_back(x.get<std::size_t>());
        }
        if (sizes.size() != static_cast<std::size_t>(mu)) throw ParseError("need one block size per colour");
        std::size_t total = 0;
        for (auto s : sizes) total += s;
        if (total != n) throw ParseError("block sizes must sum to dim");
        m = block_module(m.s, sizes, m.ring);
    } else if (type == "matrices") {
        if (!pj.contains("pi") || !pj["pi"].is_array()) throw ParseError("matrices need 'pi'");
        if (pj["pi"].size() != static_cast<std::size_t>(mu)) throw ParseError("need one projection per colour");
        for (const auto& p : pj["pi"]) m.proj.push_back(square_matrix(p, n, "projection"));
    } else {
        throw ParseError("projections.type must be \"blocks\" or \"matrices\"");
    }
    if (j.contains("form") && !j["form"].is_null()) {
        const Json& fj = j["form"];
        if (!fj.is_object()) throw ParseError("form must be an object");
        long zeta = integer_field(fj, "zeta");
        if (zeta != 1 && zeta != -1) throw ParseError("zeta must be 1 or -1");
        if (!fj.contains("phi")) throw ParseError("missing field 'phi'");
        in.form = SeifertForm{m, static_cast<int>(zeta), square_matrix(fj["phi"], n, "phi")};
    }
    if (m.ring == Ring::Z) {
        check_integral(m.s, "s");
        for (const auto& p : m.proj) check_integral(p, "projection");
        if (in.form) check_integral(in.form->phi, "phi");
    }
    if (auto v = validate_module(m)) throw ValidationError(v->kind, v->detail);
    if (in.form)
        if (auto v = validate_form(*in.form)) throw ValidationError(v->kind, v->detail);
    return in;
}

InputFile parse_input_text(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return parse_input(j);
}

Json emit_input(const InputFile& in) {
    const SeifertModule& m = in.module;
    Json j;
    j["mu"] = m.mu;
    j["ring"] = ring_name(m.ring);
    j["dim"] = m.dim();
    j["s"] = matrix_json(m.s);
    auto sizes = block_sizes(m);
    if (!sizes.empty() || m.dim() == 0) {
        if (sizes.empty()) sizes.assign(static_cast<std::size_t>(m.mu), 0);
        j["projections"] = {{"type", "blocks"}, {"sizes", sizes}};
    } else {
        Json pi = Json::array();
        for (const auto& p : m.proj) pi.push_back(matrix_json(p));
        j["projections"] = {{"type", "matrices"}, {"pi", pi}};
    }
    if (in.form) j["form"] = {{"zeta", in.form->zeta}, {"phi", matrix_json(in.form->phi)}};
    return j;
}

RunResult run_invariants(const SeifertForm& input, const RunOptions& opt) {
    if (auto v = validate_form(input)) throw ValidationError(v->kind, v->detail);
    SeifertForm f = input;
    f.module.ring = Ring::Q;
    int zeta = f.zeta;
    auto d = witt_reduce(f, opt.seed);
    Rng rng(opt.seed);
    auto groups = isotypic_group(d, rng);

    Json pieces = Json::array();
    for (const auto& p : d.pieces) {
        Json pj = {{"dim", p.form.module.dim()}, {"certified", p.certified}, {"s", matrix_json(p.form.module.s)}};
        auto sizes = block_sizes(p.form.module);
        if (!sizes.empty()) pj["blocks"] = sizes;
        else {
            Json pi = Json::array();
            for (const auto& e : p.form.module.proj) pi.push_back(matrix_json(e));
            pj["projections"] = pi;
        }
        pj["phi"] = matrix_json(p.form.phi);
        if (!p.certified) pj["note"] = p.note;
        pieces.push_back(pj);
    }

    std::vector<InvariantReport> reports;
    Json groups_json = Json::array();
    for (const auto& g : groups) {
        QMatrix b = Rat(zeta) * g.forms.front();
        Json gj = {{"members", g.members}, {"dim", g.representative.dim()}, {"b", matrix_json(b)}};
        InvariantReport r;
        try {
            auto e = endomorphism_ring(g.representative, rng);
            gj["endomorphism_dimension"] = e.dim();
            auto fa = as_number_field(e);
            if (fa.noncommutative) {
                auto info = classify_noncommutative(e, &b);
                r = unsupported_report(g.members.size(), info.row, "quaternionic");
            } else {
                NumberField field = involution_from_form(*fa.field, {g.representative, zeta, b});
                HermitianForm h = morita_transport(field, g.representative, zeta, b, g.forms);
                Json gram = Json::array();
                for (const auto& row : h.gram) gram.push_back(poly_list(row));
                gj["hermitian_gram"] = gram;
                r = invariant_report(h);
            }
        } catch (const UnsupportedError& e) {
            r = unsupported_report(g.members.size(), "noncommutative, involution unknown", e.what());
        }
        gj["report"] = report_json(r);
        reports.push_back(r);
        groups_json.push_back(gj);
    }
    for (std::size_t i = 0; i < d.pieces.size(); ++i) {
        const auto& p = d.pieces[i];
        if (p.certified) continue;
        std::string reason = p.note.rfind("quaternionic", 0) == 0 ? "quaternionic" : "not certified";
        InvariantReport r = unsupported_report(0, "noncommutative, involution unknown", reason);
        Json gj = {{"members", std::vector<std::size_t>{i}}, {"dim", p.form.module.dim()}, {"report", report_json(r)}};
        reports.push_back(r);
        groups_json.push_back(gj);
    }

    RunResult out;
    out.verdict = verdict(reports);
    out.unsupported = std::any_of(reports.begin(), reports.end(),
                                  [](const InvariantReport& r) { return r.status.rfind("unsupported", 0) == 0; });
    Json& j = out.report;
    j["command"] = "invariants";
    j["verdict"] = out.verdict;
    j["seed"] = opt.seed;
    j["ring"] = ring_name(input.module.ring);
    j["mu"] = f.module.mu;
    j["zeta"] = zeta;
    j["dim"] = f.module.dim();
    j["decomposition"] = {{"log", d.log}, {"pieces", pieces}};
    j["groups"] = groups_json;
    j["digest"] = report_digest(j);
    return out;
}

RunResult run_invariants(const InputFile& in, const RunOptions& opt) {
    if (!in.form) throw ParseError("input has no form");
    return run_invariants(*in.form, opt);
}

RunResult run_cobordant(const InputFile& a, const InputFile& b, const RunOptions& opt) {
    if (!a.form || !b.form) throw ParseError("both inputs need a form");
    if (a.module.mu != b.module.mu) throw ValidationError("mismatch", "mu differs between the inputs");
    if (a.form->zeta != b.form->zeta) throw ValidationError("mismatch", "zeta differs between the inputs");
    RunResult r = run_invariants(direct_sum(*a.form, negate(*b.form)), opt);
    if (r.verdict == "Witt-trivial") r.verdict = "cobordant-by-these-invariants";
    else if (r.verdict == "nontrivial") r.verdict = "not cobordant";
    else r.verdict = "undetermined";
    r.report["command"] = "cobordant";
    r.report["invariants_verdict"] = r.report["verdict"];
    r.report["verdict"] = r.verdict;
    return r;
}

RunResult run_cover(const InputFile& in, const RunOptions& opt) {
    if (opt.degree < 0) throw PreconditionError("degree must be non-negative");
    SeifertModule m = in.module;
    m.ring = Ring::Q;
    int d = opt.degree;
    auto p = cover_presentation(m);
    RunResult out;
    Json report;
    report["command"] = "cover";
    report["degree"] = d;
    report["mu"] = m.mu;
    report["dim"] = m.dim();
    report["sigma"] = group_matrix_json(p.sigma);
    report["augmentation_is_identity"] = p.augmentation().is_identity();
    report["sigma_inverse"] = series_matrix_json(sigma_inverse_truncated(m, d));
    auto coker = cokernel_data(p, 0);
    report["alexander"] = {{"delta", coker.delta_string()}, {"unit", coker.vanishes}};
    if (in.form) {
        SeifertForm f = *in.form;
        f.module = m;
        auto pairing = truncations(blanchfield_pairing(f, d));
        report["pairing"] = series_matrix_json(pairing);
        auto w = symmetry_witness(pairing, f.zeta, m.mu, d);
        Json sym = {{"witness_found", w.has_value()}, {"support_bound", d / 2}, {"scope", "truncation-level"}};
        if (w) sym["witness"] = group_matrix_json(*w);
        report["symmetry"] = sym;
        out.verdict = w ? "witness found" : "no witness at this truncation";
    } else {
        report["pairing"] = nullptr;
        out.verdict = "no form";
    }
    report["verdict"] = out.verdict;
    out.report = std::move(report);
    return out;
}

RunResult run_primitive(const InputFile& in, const RunOptions&) {
    SeifertModule m = in.module;
    m.ring = Ring::Q;
    auto a = analyze_primitive(m);
    RunResult out;
    Json layers = Json::array();
    for (const auto& l : a.filtration) layers.push_back({{"step", l.step}, {"s", l.value}, {"dim", l.dim}});
    std::size_t k = a.filtration.size();
    out.verdict = a.primitive ? "primitive, " + count_word(k) + (k == 1 ? " layer" : " layers")
                              : "not primitive, U=" + (a.max_primitive.cols() ? "dim " + std::to_string(a.max_primitive.cols()) : std::string("0"));
    Json& j = out.report;
    j["command"] = "primitive";
    j["verdict"] = out.verdict;
    j["mu"] = m.mu;
    j["dim"] = m.dim();
    j["primitive"] = a.primitive;
    j["max_primitive"] = {{"dim", a.max_primitive.cols()}, {"basis", matrix_json(a.max_primitive)}};
    j["min_coprimitive"] = {{"dim", a.min_coprimitive.cols()}, {"basis", matrix_json(a.min_coprimitive)}};
    j["filtration"] = layers;
    return out;
}

Json report_digest(const Json& report) {
    std::vector<std::string> rows;
    for (const auto& g : report.at("groups")) {
        const Json& r = g.at("report");
        std::vector<int> sig;
        for (const auto& s : r.at("signatures")) sig.push_back(std::abs(s.at("value").get<int>()));
        std::sort(sig.begin(), sig.end());
        Json row = {{"algebra", r.at("algebra")},
                    {"rank_mod2", r.at("rank_mod2")},
                    {"abs_signatures", sig},
                    {"status", r.at("status")},
                    {"nontrivial", r.at("nontrivial")},
                    {"trivial", r.at("trivial")}};
        rows.push_back(row.dump());
    }
    std::sort(rows.begin(), rows.end());
    Json pieces = Json::array();
    for (const auto& s : rows) pieces.push_back(Json::parse(s));
    return {{"verdict", report.at("verdict")}, {"pieces", pieces}};
}

namespace {

bool is_scalar(const Json& j) { return !j.is_array() && !j.is_object(); }

std::string scalar_text(const Json& j) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_null()) return "-";
    return j.dump();
}

bool flat_array(const Json& j) {
    return j.is_array() && std::all_of(j.begin(), j.end(), [](const Json& x) { return is_scalar(x); });
}

bool inline_array(const Json& j) {
    return flat_array(j) && std::all_of(j.begin(), j.end(), [](const Json& x) {
               return !x.is_string() || x.get<std::string>().find(' ') == std::string::npos;
           });
}

bool term_list(const Json& j) {
    return j.is_array() && !j.empty() && std::all_of(j.begin(), j.end(), [](const Json& x) {
               return x.is_object() && x.size() == 2 && x.contains("word") && x.contains("coeff");
           });
}

void render(std::ostringstream& os, const std::string& key, const Json& j, int indent) {
    std::string pad(static_cast<std::size_t>(indent), ' ');
    std::string head = pad + (key.empty() ? "-" : key + ":");
    if (term_list(j)) {
        os << head << ' ';
        for (std::size_t i = 0; i < j.size(); ++i) {
            std::string c = scalar_text(j[i]["coeff"]);
            bool neg = c[0] == '-';
            if (i) os << (neg ? " - " : " + ");
            else if (neg) os << '-';
            os << (neg ? c.substr(1) : c) << '*' << scalar_text(j[i]["word"]);
        }
        os << '\n';
    } else if (is_scalar(j)) {
        os << head << ' ' << scalar_text(j) << '\n';
    } else if (inline_array(j)) {
        os << head << " [";
        for (std::size_t i = 0; i < j.size(); ++i) os << (i ? ", " : "") << scalar_text(j[i]);
        os << "]\n";
    } else if (!j.empty() && std::all_of(j.begin(), j.end(), [](const Json& x) { return inline_array(x); })) {
        if (std::all_of(j.begin(), j.end(), [](const Json& x) { return x.empty(); })) {
            os << head << " []\n";
            return;
        }
        os << head << '\n';
        for (const auto& row : j) {
            os << pad << "  ";
            for (std::size_t i = 0; i < row.size(); ++i) os << (i ? " " : "") << scalar_text(row[i]);
            os << '\n';
        }
    } else if (j.is_array()) {
        os << head << '\n';
        for (const auto& x : j) render(os, "", x, indent + 2);
    } else {
        os << head << '\n';
        for (auto it = j.begin(); it != j.end(); ++it) render(os, it.key(), it.value(), indent + 2);
    }
}

}  // namespace

std::string render_text(const Json& report) {
    std::ostringstream os;
    if (report.is_object())
        for (auto it = report.begin(); it != report.end(); ++it) render(os, it.key(), it.value(), 0);
    else
        render(os, "", report, 0);
    return os.str();
}

}  // namespace sw
