#include "hameig/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace hameig {

namespace {

[[noreturn]] void format_error(const std::string& what) {
    throw std::runtime_error("malformed function file: " + what);
}

Rational rational_from_json(const json& value) {
    if (value.is_string()) {
        return parse_rational(value.get<std::string>());
    }
    if (value.is_number_integer()) {
        Rational r;
        r = value.get<long>();
        return r;
    }
    format_error("values must be rational strings or integers");
}

int int_field(const json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_number_integer()) {
        format_error(std::string("missing integer field \"") + key + "\"");
    }
    return j.at(key).get<int>();
}

}  // namespace

json function_to_json(const VertexFunction& f) {
    json j;
    j["n"] = f.params().n();
    j["q"] = f.params().q();
    json values = json::array();
    for (std::int64_t x = 0; x < f.size(); ++x) {
        values.push_back(to_string(f[x]));
    }
    j["values"] = std::move(values);
    return j;
}

VertexFunction function_from_json(const json& j) {
    if (!j.is_object()) {
        format_error("top level must be an object");
    }
    const int n = int_field(j, "n");
    const int q = int_field(j, "q");
    GraphParams params(n, q);
    if (!j.contains("values") || !j.at("values").is_array()) {
        format_error("missing array field \"values\"");
    }
    const json& values = j.at("values");
    if (static_cast<std::int64_t>(values.size()) != params.vertex_count()) {
        std::ostringstream msg;
        msg << "expected " << params.vertex_count() << " values for H(" << n << ","
            << q << "), got " << values.size();
        format_error(msg.str());
    }
    std::vector<Rational> table;
    table.reserve(values.size());
    for (const json& value : values) {
        table.push_back(rational_from_json(value));
    }
    return VertexFunction(std::move(params), std::move(table));
}

VertexFunction load_function(const std::string& path) {
    json j;
    try {
        j = json::parse(read_text_file(path));
    } catch (const json::parse_error& error) {
        throw std::runtime_error(path + ": " + error.what());
    }
    try {
        return function_from_json(j);
    } catch (const std::exception& error) {
        throw std::runtime_error(path + ": " + error.what());
    }
}

void save_function(const VertexFunction& f, const std::string& path) {
    write_text_file(path, render_json(function_to_json(f)));
}

json form_to_json(const CanonicalForm& form) {
    json j;
    j["form"] = to_string(form.tag);
    switch (form.tag) {
        case CanonicalForm::Tag::Zero:
            break;
        case CanonicalForm::Tag::SingleLayer:
            j["i"] = form.i;
            j["k"] = form.k;
            j["c"] = to_string(form.c);
            break;
        case CanonicalForm::Tag::DualLayer:
            j["i"] = form.i;
            j["k"] = form.k;
            j["j"] = form.j;
            j["m"] = form.m;
            j["c"] = to_string(form.c);
            break;
    }
    return j;
}

CanonicalForm form_from_json(const json& j) {
    if (!j.is_object() || !j.contains("form") || !j.at("form").is_string()) {
        throw std::runtime_error("malformed form: missing \"form\" tag");
    }
    const std::string tag = j.at("form").get<std::string>();
    CanonicalForm form;
    if (tag == "zero") {
        form.tag = CanonicalForm::Tag::Zero;
        return form;
    }
    if (tag == "single_layer") {
        form.tag = CanonicalForm::Tag::SingleLayer;
        form.i = int_field(j, "i");
        form.k = int_field(j, "k");
        form.c = parse_rational(j.at("c").get<std::string>());
        return form;
    }
    if (tag == "dual_layer") {
        form.tag = CanonicalForm::Tag::DualLayer;
        form.i = int_field(j, "i");
        form.k = int_field(j, "k");
        form.j = int_field(j, "j");
        form.m = int_field(j, "m");
        form.c = parse_rational(j.at("c").get<std::string>());
        return form;
    }
    throw std::runtime_error("malformed form: unknown tag \"" + tag + "\"");
}

json report_to_json(const SearchReport& report) {
    json j;
    j["n"] = report.n;
    j["q"] = report.q;
    j["coefficient_set"] = report.coefficient_set;
    j["theoretical_min"] = report.theoretical_min;
    j["observed_min"] = report.observed_min;
    j["enumerated_count"] = report.enumerated_count;
    json achievers = json::array();
    for (const Achiever& achiever : report.achievers) {
        json a;
        a["coeffs"] = achiever.coeffs;
        a["support"] = achiever.support;
        if (report.classified) {
            a["form"] = achiever.form ? form_to_json(*achiever.form) : json(nullptr);
            a["eigen_ok"] = achiever.eigen_ok;
            a["additive_ok"] = achiever.additive_ok;
        }
        achievers.push_back(std::move(a));
    }
    j["achievers"] = std::move(achievers);
    j["eigencheck_samples"] = report.eigencheck_samples;
    j["eigencheck_passed"] = report.eigencheck_passed;
    j["classified"] = report.classified;
    j["verdict"] = report.verdict;
    j["note"] = report.note;
    return j;
}

SearchReport report_from_json(const json& j) {
    SearchReport report;
    report.n = int_field(j, "n");
    report.q = int_field(j, "q");
    report.coefficient_set = j.at("coefficient_set").get<std::vector<int>>();
    report.theoretical_min = j.at("theoretical_min").get<std::int64_t>();
    report.observed_min = j.at("observed_min").get<std::int64_t>();
    report.enumerated_count = j.at("enumerated_count").get<std::int64_t>();
    report.classified = j.at("classified").get<bool>();
    for (const json& a : j.at("achievers")) {
        Achiever achiever;
        achiever.coeffs = a.at("coeffs").get<std::vector<int>>();
        achiever.support = a.at("support").get<std::int64_t>();
        if (report.classified) {
            if (!a.at("form").is_null()) {
                achiever.form = form_from_json(a.at("form"));
            }
            achiever.eigen_ok = a.at("eigen_ok").get<bool>();
            achiever.additive_ok = a.at("additive_ok").get<bool>();
        }
        report.achievers.push_back(std::move(achiever));
    }
    report.eigencheck_samples = int_field(j, "eigencheck_samples");
    report.eigencheck_passed = j.at("eigencheck_passed").get<bool>();
    report.verdict = j.at("verdict").get<bool>();
    report.note = j.at("note").get<std::string>();
    return report;
}

json lemma3_to_json(const Lemma3Report& report) {
    json j;
    j["q"] = report.q;
    j["coefficient_set"] = report.coefficient_set;
    j["enumerated"] = report.enumerated;
    j["qualifying"] = report.qualifying;
    j["zero_count"] = report.zero_count;
    j["single_count"] = report.single_count;
    j["dual_count"] = report.dual_count;
    j["failures"] = report.failures;
    j["diagnostics"] = report.diagnostics;
    return j;
}

std::string render_json(const json& j) { return j.dump(2) + "\n"; }

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write " + path);
    }
    out << text;
    if (!out) {
        throw std::runtime_error("failed while writing " + path);
    }
}

}  // namespace hameig
