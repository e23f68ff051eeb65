/*
   Copyright 2026 The cyclomac Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include <cyclomac/cyclomac.hpp>
#include <cyclomac/json_io.hpp>

namespace cyclomac::cli {

namespace {

class UsageError : public Error {
   public:
    using Error::Error;
};

struct Report {
    Json json = Json::object();
    std::vector<std::string> text;
    std::vector<Certificate> certificates;
    const QSeries<Rational>* csv_series = nullptr;
};

std::string term_text(const EisensteinTerm& t) {
    std::string s = "(" + t.coefficient.to_string() + ") * F_" + std::to_string(t.weight) + "(" +
                    t.character.label() + "; ";
    s += t.dilation == 1 ? "tau)" : std::to_string(t.dilation) + "tau)";
    return s;
}

std::string certificate_text(const Certificate& c) {
    std::string s = (c.match ? "MATCH    " : "MISMATCH ") + c.spec + ": " + c.lhs_label + " vs " + c.rhs_label +
                    " through q^" + std::to_string(c.order);
    if (c.first_mismatch)
        s += " (first difference at q^" + std::to_string(c.first_mismatch->exponent) + ": " + c.first_mismatch->lhs +
             " != " + c.first_mismatch->rhs + ")";
    return s;
}

void add_certificate(Report& r, Certificate c) {
    r.text.push_back(certificate_text(c));
    r.certificates.push_back(std::move(c));
}

void add_closed_form_text(Report& r, const std::string& heading, const ClosedForm& f) {
    r.text.push_back(heading + ":");
    for (const auto& t : f.terms) r.text.push_back("  " + term_text(t));
    if (f.g_form) r.text.push_back("  constant " + f.constant.to_string());
}

MacMahonInput raw_input(const RunConfig& c) { return MacMahonInput{c.n, c.k, parse_polynomial(c.q)}; }

// Brute force against the F-form and G-form closed expressions (t = 1).
void certify_closed_form(Report& r, const AdmissibleInput& in, const QSeries<Rational>& bf, std::size_t order,
                         const ClosedForm& f) {
    const ClosedForm g = to_g_form(f);
    const QSeries<CycNum> lhs = to_cyclotomic(bf, f.level);
    const std::string spec = describe(MacMahonSpec{1, in.raw(), true});
    add_certificate(r, certify(lhs, evaluate(f, order), spec, "brute_force", "closed_form"));
    add_certificate(r, certify(lhs, evaluate_g_terms(g, order), spec, "brute_force", "g_form", g.constant));
}

QSeries<Rational> cmd_expand(const RunConfig& c, Report& r) {
    const MacMahonSpec spec{c.t, raw_input(c), c.strict};
    QSeries<Rational> s = brute_force(spec, c.order);
    r.json["series"]["brute_force"] = to_json(s);
    r.text.push_back(describe(spec) + " through q^" + std::to_string(c.order) + ":");
    for (std::size_t i = 1; i <= s.order(); ++i) r.text.push_back("  q^" + std::to_string(i) + ": " + to_string(s[i]));
    return s;
}

void cmd_closed_form(const RunConfig& c, Report& r) {
    const AdmissibleInput in = validate(raw_input(c));
    const ClosedForm f = closed_form(in);
    const ClosedForm g = to_g_form(f);
    const ClosedForm p = to_primitive_basis(f);
    r.json["closed_form"] = to_json(f);
    r.json["g_form"] = to_json(g);
    r.json["primitive_basis"] = to_json(p);
    add_closed_form_text(r, "F-form", f);
    add_closed_form_text(r, "G-form", g);
    add_closed_form_text(r, "primitive basis", p);
}

void cmd_verify(const RunConfig& c, Report& r) {
    const AdmissibleInput in = validate(raw_input(c));
    const MacMahonSpec spec{c.t, in.raw(), c.strict};
    const QSeries<Rational> bf = brute_force(spec, c.order);
    r.json["series"]["brute_force"] = to_json(bf);
    if (c.t == 1) certify_closed_form(r, in, bf, c.order, closed_form(in));
    add_certificate(r, certify(bf, evaluate_isobaric(in.raw(), c.t, c.strict, c.order), describe(spec), "brute_force",
                               "isobaric"));
    add_certificate(r, certify(bf, evaluate_isobaric_closed_form(in, c.t, c.strict, c.order), describe(spec),
                               "brute_force", "isobaric_closed_form"));
}

void cmd_examples(const RunConfig& c, Report& r) {
    struct Case {
        const char* name;
        long n;
        unsigned k;
    };
    const Case cases[] = {{"U_{2,2}(2;q)", 2, 4}, {"U_{2,2}(1;q)", 3, 2}, {"U_{2,2}(0;q)", 4, 2}, {"U_{2,2}(-1;q)", 6, 2}};
    Json list = Json::array();
    for (const auto& cs : cases) {
        const AdmissibleInput in = validate(MacMahonInput{cs.n, cs.k, Polynomial::monomial(2)});
        const ClosedForm f = closed_form(in);
        const ClosedForm p = to_primitive_basis(f);
        const ClosedForm g = to_g_form(f);
        r.text.push_back(std::string(cs.name) + " = " + describe(in.raw()) + ", G-form constant " + g.constant.to_string());
        for (const auto& t : p.terms) r.text.push_back("  " + term_text(t));
        list.push_back(Json{{"name", cs.name},
                            {"N", cs.n},
                            {"k", cs.k},
                            {"Q", in.q().to_string()},
                            {"primitive_basis", to_json(p)},
                            {"g_form_constant", g.constant.to_string()}});
        certify_closed_form(r, in, brute_force(in.raw(), c.order), c.order, f);
    }
    r.json["examples"] = list;
}

void cmd_sweep(const RunConfig& c, Report& r) {
    for (const auto& raw : sweep_inputs(12, 4, 12)) {
        const AdmissibleInput in = validate(raw);
        const ClosedForm f = closed_form(in);
        add_certificate(r, certify(to_cyclotomic(brute_force(raw, c.order), f.level), evaluate(f, c.order),
                                   describe(raw), "brute_force", "closed_form"));
    }
}

Json params_json(const RunConfig& c) {
    return Json{{"N", c.n}, {"k", c.k}, {"t", c.t}, {"Q", c.q}, {"order", c.order}, {"strict", c.strict}};
}

void emit(const RunConfig& c, const Report& r, std::ostream& os) {
    if (c.format == "json") {
        Json j{{"command", c.command}, {"params", params_json(c)}, {"certificates", Json::array()}, {"series", Json::object()}};
        for (const auto& cert : r.certificates) j["certificates"].push_back(to_json(cert));
        for (const auto& [key, value] : r.json.items()) j[key] = value;
        os << j.dump(2) << "\n";
    } else if (c.format == "csv") {
        if (r.csv_series == nullptr) throw UsageError("csv output is only available for the expand command");
        os << "n,coefficient\n";
        for (std::size_t i = 0; i <= r.csv_series->order(); ++i) os << i << "," << to_string((*r.csv_series)[i]) << "\n";
    } else {
        for (const auto& line : r.text) os << line << "\n";
    }
}

}  // namespace

std::size_t default_order() {
    const char* env = std::getenv(kOrderEnv);
    if (env == nullptr || *env == '\0') return kDefaultOrder;
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 1) return kDefaultOrder;
    return static_cast<std::size_t>(v);
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        if (config.n < 1 || config.k < 1 || config.t < 1 || config.order < 1)
            throw UsageError("N, k, t and order must all be at least 1");
        if (config.format != "json" && config.format != "csv" && config.format != "text")
            throw UsageError("unknown format '" + config.format + "'");
        if (config.format == "csv" && config.command != "expand")
            throw UsageError("csv output is only available for the expand command");
        Report r;
        std::optional<QSeries<Rational>> expanded;
        if (config.command == "expand") {
            expanded = cmd_expand(config, r);
            r.csv_series = &*expanded;
        } else if (config.command == "closed-form") {
            cmd_closed_form(config, r);
        } else if (config.command == "verify") {
            cmd_verify(config, r);
        } else if (config.command == "examples") {
            cmd_examples(config, r);
        } else if (config.command == "sweep") {
            cmd_sweep(config, r);
        } else {
            throw UsageError("unknown command '" + config.command + "'");
        }
        if (config.output.empty()) {
            emit(config, r, out);
        } else {
            std::ofstream file(config.output);
            if (!file) throw UsageError("cannot open " + config.output + " for writing");
            emit(config, r, file);
        }
        for (const auto& cert : r.certificates)
            if (!cert.match) return kMismatch;
        return kMatch;
    } catch (const ValidationError& e) {
        err << "invalid input: " << e.what() << "\n";
        return kInvalidInput;
    } catch (const ParseError& e) {
        err << "invalid Q: " << e.what() << "\n";
        return kInvalidInput;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kInvalidInput;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kInvalidInput;
    }
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig config;
    config.order = default_order();
    CLI::App app{"Exact expansions and closed forms of generalized MacMahon q-series", "cyclomac-cli"};
    app.add_option("command", config.command, "expand | closed-form | verify | examples | sweep")
        ->required()
        ->check(CLI::IsMember({"expand", "closed-form", "verify", "examples", "sweep"}));
    app.add_option("--N", config.n, "cyclotomic index N")->check(CLI::PositiveNumber);
    app.add_option("--k", config.k, "exponent k of Phi_N")->check(CLI::PositiveNumber);
    app.add_option("--t", config.t, "depth t")->check(CLI::PositiveNumber);
    app.add_option("--Q", config.q, "numerator polynomial in x, e.g. \"x + x^3\"");
    app.add_option("--order", config.order, "truncation order M (default $CYCLOMAC_ORDER or 60)")
        ->check(CLI::PositiveNumber);
    auto* weak = app.add_flag("--weak", "use n_1 <= ... <= n_t");
    app.add_flag("--strict", "use n_1 < ... < n_t (default)")->excludes(weak);
    app.add_option("--format", config.format, "json | csv | text")->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--output", config.output, "write the report to this file");

    std::vector<const char*> argv{"cyclomac-cli"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kMatch : kInvalidInput;
    }
    config.strict = weak->count() == 0;
    return run(config, out, err);
}

}  // namespace cyclomac::cli
