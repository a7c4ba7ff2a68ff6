// nilgc: command-line front end.
// Exit codes: 0 all checks pass, 1 a check fails, 2 usage or input error.

#include "nilgc/catalog.hpp"
#include "nilgc/cohomology.hpp"
#include "nilgc/gcs.hpp"
#include "nilgc/notation.hpp"
#include "nilgc/transforms.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>

using namespace nilgc;
using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Inputs {
    std::string algebra, algebra_file, form, form_file;
    bool json = false;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string trimmed(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    return s.substr(b, s.find_last_not_of(" \t\r\n") - b + 1);
}

void add_algebra(CLI::App* sub, Inputs& in) {
    auto* a = sub->add_option("--algebra", in.algebra, "algebra in compact notation, e.g. (0,0,12)");
    auto* f = sub->add_option("--algebra-file", in.algebra_file, "algebra file (compact text or JSON)");
    a->excludes(f);
}

void add_form(CLI::App* sub, Inputs& in) {
    auto* a = sub->add_option("--form", in.form, "spinor in compact notation, e.g. (1+i2)exp i(36-45)");
    auto* f = sub->add_option("--form-file", in.form_file, "form file (compact text or JSON)");
    a->excludes(f);
}

void add_json(CLI::App* sub, Inputs& in) { sub->add_flag("--json", in.json, "machine-readable output"); }

NilAlgebra load_algebra(const Inputs& in) {
    std::string text = in.algebra;
    if (!in.algebra_file.empty()) text = trimmed(slurp(in.algebra_file));
    if (text.empty()) throw UsageError("an algebra is required (--algebra or --algebra-file)");
    if (text.front() == '{') return algebra_from_json(json::parse(text));
    return parse_algebra(text);
}

/// Structured ansatz for compact text; raw form for JSON.
std::variant<PureSpinorAnsatz, Form> load_form(const Inputs& in, int dim) {
    std::string text = in.form;
    if (!in.form_file.empty()) text = trimmed(slurp(in.form_file));
    if (text.empty()) throw UsageError("a form is required (--form or --form-file)");
    if (text.front() == '[' || text.front() == '{') return form_from_json(json::parse(text), dim);
    return parse_ansatz(text, dim);
}

Form as_form(const std::variant<PureSpinorAnsatz, Form>& v) {
    if (const auto* a = std::get_if<PureSpinorAnsatz>(&v)) return ansatz_to_form(*a);
    return std::get<Form>(v);
}

GcsReport check(const std::variant<PureSpinorAnsatz, Form>& v, const NilAlgebra& g) {
    if (const auto* a = std::get_if<PureSpinorAnsatz>(&v)) return check_gcs(*a, g);
    return check_gcs(std::get<Form>(v), g);
}

json filtration_json(const Filtration& f) {
    json spaces = json::array();
    for (std::size_t i = 1; i < f.spaces.size(); ++i) {
        json basis = json::array();
        for (const auto& b : f.spaces[i]) basis.push_back(to_string(b));
        spaces.push_back(basis);
    }
    return {{"dimensions", f.dimensions()}, {"nil_index", f.nil_index}, {"spaces", spaces}};
}

int emit(const Inputs& in, const json& j, const std::string& text, bool ok) {
    if (in.json) std::cout << j.dump(2) << "\n";
    else std::cout << text;
    return ok ? 0 : 1;
}

int cmd_validate(const Inputs& in) {
    try {
        const NilAlgebra g = load_algebra(in);
        const Filtration f = filtration(g);
        const bool ok = malcev_valid(g);
        std::ostringstream os;
        os << (ok ? "VALID" : "INVALID") << " " << to_compact(g) << "\n"
           << "dimension: " << g.dim() << "\nnilpotency index: " << f.nil_index << "\n";
        return emit(in, {{"valid", ok}, {"algebra", to_compact(g)}, {"dim", g.dim()}, {"nil_index", f.nil_index}},
                    os.str(), ok);
    } catch (const ValidationError& e) {
        return emit(in, {{"valid", false}, {"error", e.what()}}, std::string("INVALID ") + e.what() + "\n", false);
    }
}

int cmd_betti(const Inputs& in) {
    const NilAlgebra g = load_algebra(in);
    const BettiVector b = betti(g);
    std::ostringstream os;
    os << "betti: " << b.to_string() << "\nb1 = " << b[1] << ", b2 = " << b[2] << "\n";
    return emit(in, {{"algebra", to_compact(g)}, {"betti", b.b}, {"invariants", b.satisfies_invariants()}}, os.str(),
                b.satisfies_invariants());
}

int cmd_filtration(const Inputs& in) {
    const NilAlgebra g = load_algebra(in);
    const Filtration f = filtration(g);
    std::ostringstream os;
    os << "nilpotency index: " << f.nil_index << "\n";
    for (std::size_t i = 1; i < f.spaces.size(); ++i) {
        os << "V_" << i << " (dim " << f.spaces[i].size() << "):";
        for (const auto& b : f.spaces[i]) os << " " << to_string(b);
        os << "\n";
    }
    return emit(in, filtration_json(f), os.str(), true);
}

int cmd_bound(const Inputs& in) {
    const NilAlgebra g = load_algebra(in);
    const int bound = max_type_bound(g);
    const Filtration f = filtration(g);
    std::ostringstream os;
    os << "nilpotency index: " << f.nil_index << "\nmaximal type not excluded: " << bound << "\n";
    return emit(in, {{"algebra", to_compact(g)}, {"nil_index", f.nil_index}, {"max_type", bound}}, os.str(), true);
}

int cmd_check(const Inputs& in) {
    const NilAlgebra g = load_algebra(in);
    const auto form = load_form(in, g.dim());
    const GcsReport r = check(form, g);
    return emit(in, r.to_json(), r.to_text(), r.is_gcs);
}

int cmd_table(const Inputs& in) {
    const TableReport t = verify_table(catalog());
    return emit(in, t.to_json(), t.to_text(), t.passed());
}

int cmd_exclusions(const Inputs& in, const std::string& which, int samples, std::uint64_t seed) {
    std::optional<CaseId> only;
    if (!which.empty()) {
        only = case_from_string(which);
        if (!only) throw UsageError("unknown case " + which + " (LEM41, LEM42, LEM43, THM45, THM38)");
    }
    json all = json::array();
    std::string text;
    bool ok = true;
    for (const auto& c : exclusion_cases(samples, seed)) {
        if (only && c.id != *only) continue;
        const ReplayResult r = replay_exclusion(c);
        ok = ok && r.outcome == ReplayOutcome::EXCLUDED_AT_SAMPLES && r.forced_all();
        all.push_back(r.to_json());
        text += r.to_text();
    }
    return emit(in, {{"cases", all}, {"passed", ok}}, text, ok);
}

int cmd_symplectic(const Inputs& in) {
    const NilAlgebra g = load_algebra(in);
    const SymplecticDecision s = symplectic_decision(g);
    json j{{"algebra", to_compact(g)}, {"decision", s.exists ? "YES" : "NO"}, {"certificate", s.certificate}};
    std::ostringstream os;
    os << (s.exists ? "YES" : "NO") << "\n";
    if (s.witness) {
        j["witness"] = to_string(*s.witness);
        os << "witness: " << to_string(*s.witness) << "\n";
    }
    os << s.certificate << "\n";
    return emit(in, j, os.str(), true);
}

int cmd_transform(const Inputs& in, const std::string& b_field, const std::string& beta) {
    if (b_field.empty() == beta.empty()) throw UsageError("give exactly one of --b-field and --beta");
    const NilAlgebra g = load_algebra(in);
    const Form rho = as_form(load_form(in, g.dim()));
    json j{{"input", to_string(rho)}};
    std::ostringstream os;
    Form out(g.dim());
    try {
        if (!b_field.empty()) {
            j["b_field"] = b_field;
            out = b_transform(rho, parse_two_form(b_field, g.dim()), g);
        } else {
            const Polyvector p = parse_bivector(beta, g.dim());
            j["beta"] = beta;
            j["beta_poisson"] = schouten(p, p, g).is_zero();
            out = beta_transform(rho, p);
        }
    } catch (const NotClosed& e) {
        j["error"] = e.what();
        return emit(in, j, std::string("rejected: ") + e.what() + "\n", false);
    }
    const GcsReport r = check_gcs(out, g);
    j["output"] = to_string(out);
    j["report"] = r.to_json();
    os << "output: " << to_string(out) << "\n" << r.to_text();
    return emit(in, j, os.str(), r.is_gcs);
}

int cmd_iwasawa(const Inputs& in) {
    const IwasawaReport r = iwasawa_demo();
    return emit(in, r.to_json(), r.to_text(), r.passed());
}

int cmd_8d(const Inputs& in) {
    const EightDimReport r = verify_8d();
    return emit(in, r.to_json(), r.to_text(), r.passed());
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of invariant generalized complex structures on nilpotent Lie algebras", "nilgc"};
    app.require_subcommand(1);
    Inputs in;

    auto* validate = app.add_subcommand("validate", "check the Malcev staircase and d^2 = 0");
    auto* bettis = app.add_subcommand("betti", "Betti numbers of the Chevalley-Eilenberg complex");
    auto* filt = app.add_subcommand("filtration", "the ascending filtration V_i");
    auto* bound = app.add_subcommand("bound", "largest type not excluded by the filtration");
    for (auto* s : {validate, bettis, filt, bound}) {
        add_algebra(s, in);
        add_json(s, in);
    }

    auto* checkc = app.add_subcommand("check", "verify a spinor as a generalized complex structure");
    add_algebra(checkc, in);
    add_form(checkc, in);
    add_json(checkc, in);

    auto* table = app.add_subcommand("table", "the six-dimensional table");
    table->require_subcommand(1);
    auto* verify = table->add_subcommand("verify", "verify every row of the table");
    add_json(verify, in);

    auto* excl = app.add_subcommand("exclusions", "exclusion arguments for the table's dashes");
    excl->require_subcommand(1);
    auto* replay = excl->add_subcommand("replay", "replay the exclusion computations at random parameters");
    std::string case_id;
    int samples = 20;
    std::uint64_t seed = 0;
    replay->add_option("--case", case_id, "LEM41, LEM42, LEM43, THM45 or THM38");
    replay->add_option("--samples", samples, "samples per algebra")->check(CLI::PositiveNumber);
    replay->add_option("--seed", seed, "random seed");
    add_json(replay, in);

    auto* sympl = app.add_subcommand("symplectic", "invariant symplectic forms");
    sympl->require_subcommand(1);
    auto* decide = sympl->add_subcommand("decide", "decide whether a symplectic form exists");
    add_algebra(decide, in);
    add_json(decide, in);

    auto* transform = app.add_subcommand("transform", "apply a B-field or beta transform to a spinor");
    std::string b_field, beta;
    transform->add_option("--b-field", b_field, "closed real 2-form, e.g. 35-46");
    transform->add_option("--beta", beta, "bivector, e.g. -1/4*(3-i4)(5-i6)");
    add_algebra(transform, in);
    add_form(transform, in);
    add_json(transform, in);

    auto* iwasawa = app.add_subcommand("iwasawa-demo", "connect the two complex structures on the Iwasawa manifold");
    add_json(iwasawa, in);
    auto* eight = app.add_subcommand("counterexample-8d", "the eight-dimensional algebra with no structure");
    add_json(eight, in);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*validate) return cmd_validate(in);
        if (*bettis) return cmd_betti(in);
        if (*filt) return cmd_filtration(in);
        if (*bound) return cmd_bound(in);
        if (*checkc) return cmd_check(in);
        if (*verify) return cmd_table(in);
        if (*replay) return cmd_exclusions(in, case_id, samples, seed);
        if (*decide) return cmd_symplectic(in);
        if (*transform) return cmd_transform(in, b_field, beta);
        if (*iwasawa) return cmd_iwasawa(in);
        if (*eight) return cmd_8d(in);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const ValidationError& e) {
        std::cerr << "invalid algebra: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "bad JSON: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
