#include "nilgc/catalog.hpp"

#include "nilgc/notation.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace nilgc {

namespace {

struct RawRow {
    const char* tuple;
    int b1;
    int b2;
    const char* cells[4];  // nullptr for a dash
};

// Table text as printed, with \exp and \times spelled `exp` and `×`.
constexpr RawRow kTable[] = {
    {"(0,0,12,13,14,15)", 2, 3, {nullptr, nullptr, "(1+i2)exp i(36-45)", "16 + 34 - 25"}},
    {"(0,0,12,13,14,34+52)", 2, 2, {nullptr, nullptr, "(1+i2)exp(- 45 +  36 + i(36+ 45))", nullptr}},
    {"(0,0,12,13,14,23+15)", 2, 3, {nullptr, nullptr, "(1+i2)exp i(36-45)", "16 + 24 + 34 -25"}},
    {"(0,0,12,13,23,14)", 2, 4, {nullptr, nullptr, nullptr, "15 + 24 + 34 - 26"}},
    {"(0,0,12,13,23,14-25)", 2, 4, {nullptr, nullptr, nullptr, "15 + 24 - 35 + 16"}},
    {"(0,0,12,13,23,14+25)", 2, 4,
     {"(1+i2)(4+i5)(3+i6)", "(1 + i2)(4+i5)exp i(36)", "(1 + i2)exp(43-56+i(46 - 35))", "15 + 24 + 35 + 16"}},
    {"(0,0,12,13,14+23,34+52)", 2, 2, {nullptr, nullptr, "(1+i2)exp(45-35+36+i(-36+45-16))", nullptr}},
    {"(0,0,12,13,14+23,24+15)", 2, 3, {nullptr, nullptr, "(1+i2)exp(2 × 35 + i(36- 45))", "16 + 2 × 34 - 25"}},
    {"(0,0,0,12,13,14+35)", 3, 5, {nullptr, "(1+2+i3)(4+i5)exp i(26)", "(1+i2)exp i( 36 + 45)", nullptr}},
    {"(0,0,0,12,13,14+23)", 3, 6,
     {"(1+i2)(3 - 2 × i4)(5+ 2× i6)", "(2+i3)(4+i5)exp i(16-34)", "(1+i2)exp i(36+45)", "16 -2× 34 - 25"}},
    {"(0,0,0,12,13,24)", 3, 6,
     {"(1+i2)(3+4+i4)(5+6-i6)", "(1+2+i3)(4+i5)exp i(26)", "(1+i2)exp i(35+46)", "26+14+35"}},
    {"(0,0,0,12,13,14)", 3, 6,
     {"(1+i2)(3+i4)(5+i6)", "(2+i3) (4+i5) exp i(16)", "(1+i2)exp(35-46+i(36+45))", "16+24+35"}},
    {"(0,0,0,12,13,23)", 3, 8,
     {"(1+i2)(3+i4)(5+i6)", "(1+i2)(5+i6)exp i(16-34)", "(1+i2)exp(35-46 + i(36 + 45))", "15 + 24 +36"}},
    {"(0,0,0,12,14,15+23)", 3, 5, {nullptr, nullptr, "(1+i3)exp i(26-45)", "13 +26 - 45"}},
    {"(0,0,0,12,14,15 + 23 + 24)", 3, 5, {nullptr, nullptr, "(1+i3) exp i(26-45)", "13+26-45"}},
    {"(0,0,0,12,14,15+24)", 3, 5, {nullptr, nullptr, "(1+i3) exp i(26-45)", "13+26-45"}},
    {"(0,0,0,12,14,15)", 3, 5, {nullptr, nullptr, "(1+i3) exp i(26-45)", "13+26-45"}},
    {"(0,0,0,12,14,24)", 3, 5,
     {"(1+i2)(3+i4)(5+i6)", "(1+i2)(5+i6)exp i(34)", "(1+i2)exp(35-46 + i(45+36))", nullptr}},
    {"(0,0,0,12,14,13+42)", 3, 5, {"(1+i2)(3+i4)(2 × 5 - i6)", nullptr, "(1+i2)exp i(35 + 46)", "15 + 26 + 34"}},
    {"(0,0,0,12,14,23+24)", 3, 5, {"(1+i2)(3+4+i3)(5+6+i6)", nullptr, "(1+i2)exp(35+46+i(35-46))", "16-34+25"}},
    {"(0,0,0,12,23,14+35)", 3, 5, {nullptr, "(1+2+i3)(5+i4)exp(3+i1)6", "(1+i2)exp(36 + 45 +i(36 - 45))", nullptr}},
    {"(0,0,0,12,23,14-35)", 3, 5,
     {"(1+i3)(4-i5)(2+i6)", "(1+i3)(4-i5)exp i(26)", "(1+i3)exp(24 + 56 + i(25+46))", nullptr}},
    {"(0,0,0,12,14-23,15+34)", 3, 4, {nullptr, "(1+i2)(3+i4)exp i(56)", "(2+i3) exp i(16 + 35 + 45-26)", "16+35+24"}},
    {"(0,0,0,12,14+23,13+42)", 3, 5,
     {"(1+i2)(3-i4)(5+i6)", "(1+i2)(3-i4)exp i(56)", "(1+i2)exp(35+46 + i(36-45))", "15+2× 26+34"}},
    {"(0,0,0,0,12,15+34)", 4, 6, {nullptr, "(1+i2)(3+i4)exp i(56)", "(3+i4)exp i(25+16)", nullptr}},
    {"(0,0,0,0,12,15)", 4, 7, {nullptr, "(1+i2)(3+i4)exp i(56)", "(1+i2)exp i(34 + 56)", "16+25+34"}},
    {"(0,0,0,0,12,14+25)", 4, 7,
     {"(1+i2)(4+i5)(3+i6)", "(1+i2)(4+i5)exp i(36)", "(1+i2) exp(34 + 56 + i(35 - 46))", "13+26+45"}},
    {"(0,0,0,0,12,14+23)", 4, 8,
     {"(1+i2)(3-i4)(5+i6)", "(1+i2)(3-i4)exp i(56)", "(1+i2)exp(35 + 46 +i(36 - 45))", "13+26+45"}},
    {"(0,0,0,0,12,34)", 4, 8,
     {"(1+i2)(3+i4)(5+i6)", "(1+i2)(3+i4)exp i(56)", "(1+i2)exp(35-46 + i(45 + 36))", "15+36+24"}},
    {"(0,0,0,0,12,13)", 4, 9,
     {"(2+i3)(1+i4)(5+i6)", "(2+i3)(5+i6)exp i(14)", "(2+i3)exp(15-46 +i(16+45))", "16+25+34"}},
    {"(0,0,0,0,13+42,14+23)", 4, 8,
     {"(1+i2)(3-i4)(5+i6)", "(1+i2)(3+i4)exp i(56)", "(1+i2)exp(35+46+i(36-45))", "16+25+34"}},
    {"(0,0,0,0,0,12+34)", 5, 9, {"(1+i2)(3+i4)(5+i6)", "(1+i2)(3+i4)exp i(56)", "(1+i2)exp i(36+45)", nullptr}},
    {"(0,0,0,0,0,12)", 5, 11,
     {"(1+i2)(3+i4)(5+i6)", "(1+i2)(3+i4)exp i(56)", "(1+i2)exp i(36+45)", "16+23+45"}},
    {"(0,0,0,0,0,0)", 6, 15,
     {"(1+i2)(3+i4)(5+i6)", "(1+i2)(3+i4)exp i(56)", "(1+i2)exp i(36+45)", "12+34+56"}},
};

int column_of(int type) {
    for (std::size_t c = 0; c < kColumnTypes.size(); ++c)
        if (kColumnTypes[c] == type) return static_cast<int>(c);
    throw std::out_of_range("no column for type " + std::to_string(type));
}

std::string join(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

}  // namespace

const std::optional<std::string>& CatalogEntry::witness_for(int type) const {
    return witness.at(static_cast<std::size_t>(column_of(type)));
}

NilAlgebra CatalogEntry::algebra() const { return parse_algebra(tuple_text); }

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = [] {
        std::vector<CatalogEntry> out;
        int row = 0;
        for (const auto& r : kTable) {
            CatalogEntry e;
            e.row = ++row;
            e.tuple_text = r.tuple;
            e.b1 = r.b1;
            e.b2 = r.b2;
            for (std::size_t c = 0; c < 4; ++c)
                if (r.cells[c]) e.witness[c] = r.cells[c];
            out.push_back(std::move(e));
        }
        return out;
    }();
    return entries;
}

nlohmann::json catalog_to_json(const std::vector<CatalogEntry>& entries) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& e : entries) {
        nlohmann::json w = nlohmann::json::object();
        for (std::size_t c = 0; c < 4; ++c)
            w[std::to_string(kColumnTypes[c])] = e.witness[c] ? nlohmann::json(*e.witness[c]) : nlohmann::json(nullptr);
        rows.push_back({{"row", e.row},
                        {"tuple", e.tuple_text},
                        {"algebra", algebra_to_json(e.algebra())},
                        {"b1", e.b1},
                        {"b2", e.b2},
                        {"witnesses", w}});
    }
    return {{"format", "nilgc-catalog"}, {"version", 1}, {"rows", rows}};
}

std::vector<CatalogEntry> catalog_from_json(const nlohmann::json& j) {
    std::vector<CatalogEntry> out;
    for (const auto& r : j.at("rows")) {
        CatalogEntry e;
        e.row = r.at("row").get<int>();
        e.tuple_text = r.at("tuple").get<std::string>();
        e.b1 = r.at("b1").get<int>();
        e.b2 = r.at("b2").get<int>();
        const auto& w = r.at("witnesses");
        for (std::size_t c = 0; c < 4; ++c) {
            const auto& cell = w.at(std::to_string(kColumnTypes[c]));
            if (!cell.is_null()) e.witness[c] = cell.get<std::string>();
        }
        if (r.contains("algebra") && !(algebra_from_json(r.at("algebra")) == e.algebra()))
            throw ValidationError("row " + std::to_string(e.row) + ": algebra JSON does not match its tuple");
        out.push_back(std::move(e));
    }
    return out;
}

int max_type_bound(const NilAlgebra& g) {
    const int n = g.dim() / 2;
    const Filtration f = filtration(g);
    std::vector<int> full{0};
    for (int k : f.dimensions()) full.push_back(k);
    const int s = f.nil_index;
    int j = s;
    while (j - 1 >= 1 && full[j] - full[j - 1] == 1) --j;
    return std::min(n, 2 * n - s + j - 1);
}

bool malcev_valid(const NilAlgebra& g) {
    for (int i = 1; i <= g.dim(); ++i) {
        const Form& de = g.d_generator(i);
        for (const auto& [b, c] : de.terms())
            if (b.grade() != 2 || b.max_index() >= i) return false;
        if (!d(de, g).is_zero()) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------

nlohmann::json RowReport::to_json() const {
    nlohmann::json cells_json = nlohmann::json::array();
    for (const auto& c : cells) {
        nlohmann::json cj{{"type", c.type},
                          {"witness", c.text ? nlohmann::json(*c.text) : nlohmann::json(nullptr)},
                          {"status", !c.text ? "dash" : (c.passed ? "pass" : "fail")},
                          {"failures", c.failures}};
        if (c.report) cj["report"] = c.report->to_json();
        cells_json.push_back(cj);
    }
    nlohmann::json j{{"row", row},
                     {"tuple", tuple_text},
                     {"algebra_valid", algebra_valid},
                     {"betti", betti ? nlohmann::json(betti->b) : nlohmann::json(nullptr)},
                     {"betti_match", betti_match},
                     {"type_bound", bound},
                     {"cells", cells_json},
                     {"symplectic_agrees", symplectic_agrees},
                     {"status", passed() ? "pass" : "fail"},
                     {"failures", failures}};
    j["symplectic_decision"] = symplectic_decision ? nlohmann::json(*symplectic_decision ? "YES" : "NO") : nlohmann::json(nullptr);
    return j;
}

RowReport verify_entry(const CatalogEntry& e, const VerifyOptions& options) {
    RowReport r;
    r.row = e.row;
    r.tuple_text = e.tuple_text;
    for (std::size_t c = 0; c < 4; ++c) {
        r.cells[c].type = kColumnTypes[c];
        r.cells[c].text = e.witness[c];
    }
    std::optional<NilAlgebra> g;
    try {
        g = e.algebra();
        r.algebra_valid = malcev_valid(*g);
    } catch (const std::exception& ex) {
        r.failures.push_back(std::string("algebra: ") + ex.what());
        return r;
    }
    if (!r.algebra_valid) r.failures.push_back("algebra: Malcev staircase or d^2 = 0 fails");

    r.betti = betti(*g);
    r.betti_match = (*r.betti)[1] == e.b1 && (*r.betti)[2] == e.b2;
    if (!r.betti_match)
        r.failures.push_back("betti: table (" + std::to_string(e.b1) + "," + std::to_string(e.b2) + "), computed " +
                             r.betti->to_string());
    r.bound = max_type_bound(*g);

    for (auto& cell : r.cells) {
        if (!cell.text) continue;
        try {
            const PureSpinorAnsatz a = parse_ansatz(*cell.text, g->dim());
            const GcsReport rep = check_gcs(a, *g);
            cell.report = rep;
            if (!rep.is_gcs) cell.failures.push_back("verdict NOT_GCS");
            if (rep.type != cell.type) cell.failures.push_back("type " + std::to_string(rep.type));
            if (!rep.closed) cell.failures.push_back("d rho != 0");
            for (const auto& f : rep.failures) cell.failures.push_back(f);
        } catch (const std::exception& ex) {
            cell.failures.push_back(ex.what());
        }
        if (cell.type > r.bound) cell.failures.push_back("exceeds type bound " + std::to_string(r.bound));
        cell.passed = cell.failures.empty();
        for (const auto& f : cell.failures)
            r.failures.push_back("type " + std::to_string(cell.type) + " cell \"" + *cell.text + "\": " + f);
    }

    if (options.run_symplectic) {
        const SymplecticDecision dec = symplectic_decision(*g, options.symplectic);
        r.symplectic_decision = dec.exists;
        const bool listed = e.witness[3].has_value();
        r.symplectic_agrees = dec.exists == listed;
        if (dec.exists && (!dec.witness || top_power(*dec.witness).is_zero() || !d(*dec.witness, *g).is_zero()))
            r.symplectic_agrees = false;
        if (!dec.exists && !poly_is_zero(dec.top_power)) r.symplectic_agrees = false;
        if (!r.symplectic_agrees)
            r.failures.push_back(std::string("symplectic decision ") + (dec.exists ? "YES" : "NO") + " disagrees with the table");
    }
    return r;
}

TableCounts count_witnesses(const std::vector<CatalogEntry>& entries) {
    TableCounts t;
    for (const auto& e : entries) {
        const bool c = e.witness_for(3).has_value();
        const bool s = e.witness_for(0).has_value();
        t.complex += c;
        t.symplectic += s;
        t.both += c && s;
        t.complex_only += c && !s;
        t.symplectic_only += s && !c;
        t.neither += !c && !s;
    }
    return t;
}

int TableReport::rows_passed() const {
    return static_cast<int>(std::count_if(rows.begin(), rows.end(), [](const RowReport& r) { return r.passed(); }));
}

TableReport verify_table(const std::vector<CatalogEntry>& entries, const VerifyOptions& options) {
    TableReport t;
    for (const auto& e : entries) {
        t.rows.push_back(verify_entry(e, options));
        for (const auto& f : t.rows.back().failures) t.failures.push_back("row " + std::to_string(e.row) + ": " + f);
    }
    t.counts = count_witnesses(entries);
    t.counts_match = t.counts == kExpectedCounts;
    if (!t.counts_match) t.failures.push_back("witness counts differ from (18, 26, 15, 3, 11, 5)");
    t.every_row_has_witness = std::all_of(entries.begin(), entries.end(), [](const CatalogEntry& e) {
        return std::any_of(e.witness.begin(), e.witness.end(), [](const auto& w) { return w.has_value(); });
    });
    if (!t.every_row_has_witness) t.failures.push_back("a row has no witness of any type");
    return t;
}

nlohmann::json TableReport::to_json() const {
    nlohmann::json rj = nlohmann::json::array();
    for (const auto& r : rows) rj.push_back(r.to_json());
    return {{"rows", rj},
            {"rows_passed", rows_passed()},
            {"rows_total", rows.size()},
            {"counts",
             {{"complex", counts.complex},
              {"symplectic", counts.symplectic},
              {"both", counts.both},
              {"complex_only", counts.complex_only},
              {"symplectic_only", counts.symplectic_only},
              {"neither", counts.neither}}},
            {"counts_match", counts_match},
            {"every_row_has_witness", every_row_has_witness},
            {"status", passed() ? "pass" : "fail"},
            {"failures", failures}};
}

std::string TableReport::to_text() const {
    std::ostringstream os;
    os << "row  algebra                      b1 b2  bound  t3   t2   t1   t0   sympl  status\n";
    for (const auto& r : rows) {
        std::string tuple = r.tuple_text;
        tuple.resize(std::max<std::size_t>(tuple.size(), 28), ' ');
        os << (r.row < 10 ? " " : "") << r.row << "   " << tuple << " ";
        if (r.betti) os << (*r.betti)[1] << "  " << ((*r.betti)[2] < 10 ? " " : "") << (*r.betti)[2];
        else os << "?   ?";
        os << "  " << r.bound << "      ";
        for (const auto& c : r.cells) os << (!c.text ? "--   " : c.passed ? "ok   " : "FAIL ");
        os << (r.symplectic_decision ? (*r.symplectic_decision ? "YES  " : "NO   ") : "-    ") << "  "
           << (r.passed() ? "pass" : "FAIL") << "\n";
    }
    os << "rows passed: " << rows_passed() << "/" << rows.size() << "\n";
    os << "counts: complex " << counts.complex << ", symplectic " << counts.symplectic << ", both " << counts.both
       << ", complex-only " << counts.complex_only << ", symplectic-only " << counts.symplectic_only << ", neither "
       << counts.neither << (counts_match ? "" : "  (expected 18, 26, 15, 3, 11, 5)") << "\n";
    for (const auto& f : failures) os << "  - " << f << "\n";
    return os.str();
}

// ---------------------------------------------------------------------------

std::string to_string(CaseId id) {
    switch (id) {
        case CaseId::LEM41: return "LEM41";
        case CaseId::LEM42: return "LEM42";
        case CaseId::LEM43: return "LEM43";
        case CaseId::THM45: return "THM45";
        case CaseId::THM38: return "THM38";
    }
    return "?";
}

std::optional<CaseId> case_from_string(std::string_view s) {
    for (CaseId id : {CaseId::LEM41, CaseId::LEM42, CaseId::LEM43, CaseId::THM45, CaseId::THM38})
        if (to_string(id) == s) return id;
    return std::nullopt;
}

namespace {

std::vector<int> rows_matching(const std::vector<const char*>& tuples) {
    std::vector<int> rows;
    std::vector<NilAlgebra> wanted;
    for (const char* t : tuples) wanted.push_back(parse_algebra(t));
    for (const auto& e : catalog()) {
        const NilAlgebra g = e.algebra();
        if (std::any_of(wanted.begin(), wanted.end(), [&](const NilAlgebra& w) { return w == g; })) rows.push_back(e.row);
    }
    return rows;
}

}  // namespace

std::vector<ExclusionCase> exclusion_cases(int samples, std::uint64_t seed) {
    std::vector<ExclusionCase> out;
    std::vector<int> maximal, lem41;
    // d e_1 .. d e_5 of (0,0,0,12,14,-)
    const std::vector<Form> want{Form(6), Form(6), Form(6), parse_two_form("12", 6), parse_two_form("14", 6)};
    for (const auto& e : catalog()) {
        const NilAlgebra g = e.algebra();
        const int nil = filtration(g).nil_index;
        if (nil == g.dim() - 1) maximal.push_back(e.row);
        bool starts = true;
        for (int k = 1; k <= 5; ++k) starts = starts && g.d_generator(k) == want[static_cast<std::size_t>(k - 1)];
        if (starts && nil == 4) lem41.push_back(e.row);
    }
    out.push_back({CaseId::LEM41, lem41, 2,
                   "theta1 = e1 + z2 e2 + z3 e3, theta2 = w2 e2 + w3 e3 + w4 e4; z3 = 0 on even samples", samples, seed});
    out.push_back({CaseId::LEM42, rows_matching({"(0,0,0,12,14,13-24)", "(0,0,0,12,14,23+24)"}), 2,
                   "even samples: theta1 = e1 + z2 e2, theta2 = w2 e2 + w3 e3 + w4 e4 (nil 2); "
                   "odd samples: theta1 = e1 + z2 e2 + z3 e3, theta2 = w2 e2 + ... + w6 e6 (nil 3)",
                   samples, seed});
    out.push_back({CaseId::LEM43, rows_matching({"(0,0,12,13,23,14)", "(0,0,12,13,23,14-25)"}), 2,
                   "theta1 = e1 + z2 e2, theta2 = w2 e2 + w3 e3 + w4 (e4 + z2 e5)", samples, seed});
    out.push_back({CaseId::THM45, rows_matching({"(0,0,12,13,23,14)", "(0,0,12,13,23,14-25)"}), 1,
                   "theta1 = e1 + z2 e2", samples, seed});
    out.push_back({CaseId::THM38, maximal, 2, "none: excluded by the type bound", 0, seed});
    return out;
}

namespace {

GaussianRational draw(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-5, 5);
    std::uniform_int_distribution<long> den(1, 4);
    return GaussianRational::fraction(num(rng), den(rng), num(rng), den(rng));
}

Form one_form(const std::vector<std::pair<int, GaussianRational>>& coeffs) {
    Form f(6);
    for (const auto& [k, c] : coeffs) f += Form::generator(6, k, c);
    return f;
}

std::vector<Form> draw_thetas(CaseId id, int index, std::mt19937_64& rng) {
    const GaussianRational one(1);
    const bool even = index % 2 == 0;
    switch (id) {
        case CaseId::THM45: return {one_form({{1, one}, {2, draw(rng)}})};
        case CaseId::LEM43: {
            const GaussianRational z2 = draw(rng), w4 = draw(rng);
            return {one_form({{1, one}, {2, z2}}), one_form({{2, draw(rng)}, {3, draw(rng)}, {4, w4}, {5, w4 * z2}})};
        }
        case CaseId::LEM41: {
            const GaussianRational z3 = even ? GaussianRational(0) : draw(rng);
            return {one_form({{1, one}, {2, draw(rng)}, {3, z3}}), one_form({{2, draw(rng)}, {3, draw(rng)}, {4, draw(rng)}})};
        }
        case CaseId::LEM42:
            if (even)
                return {one_form({{1, one}, {2, draw(rng)}}), one_form({{2, draw(rng)}, {3, draw(rng)}, {4, draw(rng)}})};
            return {one_form({{1, one}, {2, draw(rng)}, {3, draw(rng)}}),
                    one_form({{2, draw(rng)}, {3, draw(rng)}, {4, draw(rng)}, {5, draw(rng)}, {6, draw(rng)}})};
        case CaseId::THM38: break;
    }
    return {};
}

struct ClosedSolutions {
    bool omega_closed = false;
    std::vector<Form> basis;  // C with dC ^ Omega = 0
    ParamPolynomial nondegeneracy;
};

// All C = B + i omega with d(e^C Omega) = 0, and the top coefficient of
// omega^{n-k} ^ Omega ^ conj(Omega) over that space with C = sum (u_a + i v_a) N_a.
ClosedSolutions closed_solutions(const NilAlgebra& g, const std::vector<Form>& thetas) {
    const int dim = g.dim();
    const int k = static_cast<int>(thetas.size());
    const Form omega = wedge_all(dim, thetas);
    ClosedSolutions out;
    out.omega_closed = d(omega, g).is_zero();
    if (!out.omega_closed) return out;
    const auto unknowns = blades_of_grade(dim, 2);
    const auto rows = blades_of_grade(dim, k + 3);
    Matrix<GaussianRational> m(rows.size(), unknowns.size());
    for (std::size_t c = 0; c < unknowns.size(); ++c) {
        const auto col = coordinates(wedge(g.d_blade(unknowns[c]), omega), rows);
        for (std::size_t r = 0; r < rows.size(); ++r) m(r, c) = col[r];
    }
    for (const auto& v : null_space(m)) out.basis.push_back(form_from_coordinates(dim, unknowns, v));

    PolyForm w(dim);
    for (std::size_t a = 0; a < out.basis.size(); ++a) {
        const auto u = ParamPolynomial::variable("u" + std::to_string(a + 1));
        const auto v = ParamPolynomial::variable("v" + std::to_string(a + 1));
        w += u * lift(imag_part(out.basis[a])) + v * lift(real_part(out.basis[a]));
    }
    PolyForm power = PolyForm::scalar(dim, 1);
    for (int i = 0; i < dim / 2 - k; ++i) power = wedge(power, w);
    out.nondegeneracy = top_coefficient(wedge(power, lift(wedge(omega, omega.conj()))));
    return out;
}

bool coefficient_vanishes(const std::vector<Form>& basis, const std::vector<Blade>& blades) {
    for (const auto& f : basis)
        for (Blade b : blades)
            if (!f.coefficient(b).is_zero()) return false;
    return true;
}

Blade pair(int i, int j) { return Blade::from_indices({i, j}).second; }

}  // namespace

bool ReplayResult::forced_all() const {
    return std::all_of(records.begin(), records.end(), [](const SampleRecord& s) { return s.forced_observed; });
}

SampleRecord replay_sample(CaseId id, const NilAlgebra& g, const std::vector<Form>& thetas, int index) {
    const ClosedSolutions sol = closed_solutions(g, thetas);
    SampleRecord s;
    s.index = index;
    for (const auto& t : thetas) s.thetas.push_back(to_string(t));
    s.omega_closed = sol.omega_closed;
    s.solution_dim = sol.basis.size();
    s.degenerate = !sol.omega_closed || poly_is_zero(sol.nondegeneracy);
    const bool odd = index % 2 == 1;
    if ((id == CaseId::LEM41 || id == CaseId::LEM42) && odd) {
        s.forced_observed = !sol.omega_closed;
        s.observation = "d Omega != 0";
    } else if (id == CaseId::LEM41 || id == CaseId::LEM42) {
        s.forced_observed = sol.omega_closed && coefficient_vanishes(sol.basis, {pair(5, 6)});
        s.observation = "k56 = 0";
    } else if (id == CaseId::LEM43) {
        const Form big = wedge_all(g.dim(), thetas);
        const Form both = wedge(big, big.conj());
        s.forced_observed = sol.omega_closed && std::all_of(sol.basis.begin(), sol.basis.end(),
                                                            [&](const Form& f) { return wedge(f, both).is_zero(); });
        s.holomorphic_ideal =
            std::all_of(sol.basis.begin(), sol.basis.end(), [&](const Form& f) { return wedge(f, big).is_zero(); });
        s.observation = "B + i omega vanishes on the leaves of Ann(Omega ^ conj Omega)";
    } else {
        s.forced_observed =
            sol.omega_closed && coefficient_vanishes(sol.basis, {pair(5, 6), pair(4, 6), pair(4, 5), pair(3, 6)});
        s.observation = "k56 = k46 = k45 = k36 = 0";
    }
    return s;
}

ReplayResult replay_exclusion(const ExclusionCase& c) {
    ReplayResult out;
    out.c = c;
    if (c.id == CaseId::THM38) {
        out.by_bound = true;
        for (int row : c.rows) {
            const NilAlgebra g = catalog().at(static_cast<std::size_t>(row - 1)).algebra();
            SampleRecord s;
            s.row = row;
            const int bound = max_type_bound(g);
            s.forced_observed = bound < c.excluded_type;
            s.observation = "max_type_bound = " + std::to_string(bound);
            out.records.push_back(s);
        }
        return out;
    }

    std::mt19937_64 rng(c.seed);
    for (int row : c.rows) {
        const NilAlgebra g = catalog().at(static_cast<std::size_t>(row - 1)).algebra();
        for (int index = 0; index < c.samples; ++index) {
            std::vector<Form> thetas;
            for (int attempt = 0;; ++attempt) {
                if (attempt == 100) throw std::runtime_error("replay: no nondegenerate frame drawn");
                thetas = draw_thetas(c.id, index, rng);
                const Form big = wedge_all(6, thetas);
                if (!wedge(big, big.conj()).is_zero()) break;
            }
            SampleRecord s = replay_sample(c.id, g, thetas, index);
            s.row = row;
            if (!s.degenerate) out.outcome = ReplayOutcome::COUNTEREXAMPLE;
            out.records.push_back(std::move(s));
        }
    }
    return out;
}

nlohmann::json ReplayResult::to_json() const {
    nlohmann::json samples = nlohmann::json::array();
    for (const auto& s : records)
        samples.push_back({{"row", s.row},
                           {"sample", s.index},
                           {"thetas", s.thetas},
                           {"omega_closed", s.omega_closed},
                           {"solution_dim", s.solution_dim},
                           {"degenerate", s.degenerate},
                           {"observation", s.observation},
                           {"observed", s.forced_observed},
                           {"holomorphic_ideal", s.holomorphic_ideal ? nlohmann::json(*s.holomorphic_ideal) : nlohmann::json(nullptr)}});
    return {{"case", to_string(c.id)},
            {"rows", c.rows},
            {"excluded_type", c.excluded_type},
            {"ansatz_family", c.ansatz_family},
            {"samples_per_row", c.samples},
            {"seed", c.seed},
            {"label", label()},
            {"outcome", outcome == ReplayOutcome::EXCLUDED_AT_SAMPLES ? "EXCLUDED_AT_SAMPLES" : "COUNTEREXAMPLE"},
            {"forced_all", forced_all()},
            {"records", samples}};
}

std::string ReplayResult::to_text() const {
    std::ostringstream os;
    const auto observed = std::count_if(records.begin(), records.end(), [](const SampleRecord& s) { return s.forced_observed; });
    os << to_string(c.id) << "  type " << c.excluded_type << "  rows " << join(c.rows) << "  "
       << (outcome == ReplayOutcome::EXCLUDED_AT_SAMPLES ? "EXCLUDED_AT_SAMPLES" : "COUNTEREXAMPLE") << " (" << label()
       << ")  forced " << observed << "/" << records.size() << "\n";
    if (by_bound) {
        for (const auto& s : records) os << "    row " << s.row << ": " << s.observation << "\n";
    } else {
        os << "    family: " << c.ansatz_family << "\n";
        std::vector<std::string> kinds;
        for (const auto& s : records)
            if (std::find(kinds.begin(), kinds.end(), s.observation) == kinds.end()) kinds.push_back(s.observation);
        for (const auto& k : kinds) os << "    checked: " << k << "\n";
    }
    const auto literal = std::count_if(records.begin(), records.end(),
                                       [](const SampleRecord& s) { return s.holomorphic_ideal.value_or(false); });
    if (c.id == CaseId::LEM43)
        os << "    B + i omega in the ideal of theta1, theta2 alone: " << literal << "/" << records.size() << "\n";
    for (const auto& s : records)
        if (!s.forced_observed || !s.degenerate)
            os << "    row " << s.row << " sample " << s.index << ": " << s.observation
               << (s.forced_observed ? " observed" : " NOT observed") << (s.degenerate ? "" : ", nondegenerate solution") << "\n";
    return os.str();
}

bool DashCoverage::exact() const {
    return std::all_of(dashes.begin(), dashes.end(), [](const Dash& d) { return d.cases.size() == 1; });
}

DashCoverage dash_coverage(const std::vector<CatalogEntry>& entries, const std::vector<ExclusionCase>& cases) {
    DashCoverage out;
    for (const auto& e : entries)
        for (int type : {2, 1}) {
            if (e.witness_for(type)) continue;
            DashCoverage::Dash dash{e.row, type, {}};
            for (const auto& c : cases)
                if (c.excluded_type == type && std::find(c.rows.begin(), c.rows.end(), e.row) != c.rows.end())
                    dash.cases.push_back(c.id);
            out.dashes.push_back(dash);
        }
    return out;
}

// ---------------------------------------------------------------------------

NilAlgebra leaf_algebra(const NilAlgebra& g, const std::vector<int>& keep) {
    std::vector<int> position(static_cast<std::size_t>(g.dim() + 1), 0);
    for (std::size_t i = 0; i < keep.size(); ++i) position.at(static_cast<std::size_t>(keep[i])) = static_cast<int>(i + 1);
    const int m = static_cast<int>(keep.size());
    auto kept = [&](Blade b) {
        for (int k : b.indices())
            if (position[static_cast<std::size_t>(k)] == 0) return false;
        return true;
    };
    for (int k = 1; k <= g.dim(); ++k) {
        if (position[static_cast<std::size_t>(k)] != 0) continue;
        for (const auto& [b, c] : g.d_generator(k).terms())
            if (kept(b)) throw std::invalid_argument("leaf_algebra: kept directions do not close under the bracket");
    }
    std::vector<Form> ds;
    for (int k : keep) {
        Form f(m);
        for (const auto& [b, c] : g.d_generator(k).terms()) {
            if (!kept(b)) continue;
            std::vector<int> idx;
            for (int i : b.indices()) idx.push_back(position[static_cast<std::size_t>(i)]);
            f += Form::basis(m, idx, c);
        }
        ds.push_back(std::move(f));
    }
    return NilAlgebra(m, std::move(ds));
}

NilAlgebra permute_basis(const NilAlgebra& g, const std::vector<int>& perm) {
    const int n = g.dim();
    if (static_cast<int>(perm.size()) != n) throw std::invalid_argument("permute_basis: wrong length");
    std::vector<int> inverse(static_cast<std::size_t>(n + 1), 0);
    for (int i = 1; i <= n; ++i) inverse.at(static_cast<std::size_t>(perm[static_cast<std::size_t>(i - 1)])) = i;
    std::vector<Form> ds;
    for (int i = 1; i <= n; ++i) {
        Form f(n);
        for (const auto& [b, c] : g.d_generator(perm[static_cast<std::size_t>(i - 1)]).terms()) {
            std::vector<int> idx;
            for (int k : b.indices()) idx.push_back(inverse[static_cast<std::size_t>(k)]);
            f += Form::basis(n, idx, c);
        }
        ds.push_back(std::move(f));
    }
    return NilAlgebra(n, std::move(ds));
}

EightDimReport verify_8d() {
    EightDimReport r;
    const NilAlgebra g = parse_algebra(kEightDimAlgebra);
    r.valid = malcev_valid(g);
    if (!r.valid) r.failures.push_back("algebra fails the Malcev staircase or d^2 = 0");
    r.nil_index = filtration(g).nil_index;
    if (r.nil_index != 7) r.failures.push_back("nilpotency index " + std::to_string(r.nil_index) + ", expected 7");
    r.bound = max_type_bound(g);
    if (r.bound != 1) r.failures.push_back("type bound " + std::to_string(r.bound) + ", expected 1");

    r.b2 = betti(g)[2];
    const std::vector<Form> gens{parse_two_form("23", 8), parse_two_form("34-25", 8), parse_two_form("17", 8)};
    r.h2_matches = r.b2 == 3 && spans_cohomology(g, 2, gens);
    if (!r.h2_matches) r.failures.push_back("H^2 is not span{e23, e34-e25, e17}");

    for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = a; b < 3; ++b)
            for (std::size_t c = b; c < 3; ++c)
                for (std::size_t e = c; e < 3; ++e) {
                    ++r.quadruple_products;
                    const Form p = wedge(wedge(gens[a], gens[b]), wedge(gens[c], gens[e]));
                    if (is_exact(p, g).exact) ++r.quadruple_exact;
                }
    if (r.quadruple_exact != r.quadruple_products) r.failures.push_back("a quadruple product is not exact");
    r.symplectic_no = !symplectic_decision(g).exists;
    if (!r.symplectic_no) r.failures.push_back("symplectic decision found a symplectic form");

    // Closed 1-forms are V_1 = <e1, e2>, so theta ^ conj(theta) lies in span{e12}.
    const auto closed1 = closed_basis(g, 1);
    const std::vector<Form> v1{Form::generator(8, 1), Form::generator(8, 2)};
    bool forced = span_rank(closed1) == 2 && in_span(closed1, v1[0]) && in_span(closed1, v1[1]);
    for (const auto& w : wedge_power_basis(closed1, 2)) forced = forced && in_span({Form::basis(8, {1, 2})}, w);
    r.theta_forced_e12 = forced;
    if (!forced) r.failures.push_back("theta1 ^ conj(theta1) is not forced into span{e12}");

    const NilAlgebra leaf = leaf_algebra(g, {3, 4, 5, 6, 7, 8});
    r.leaf_tuple = to_compact(leaf);
    const NilAlgebra reference = parse_algebra("(0,0,0,0,0,12+34)");
    r.leaf_isomorphic = permute_basis(leaf, {1, 4, 3, 2, 5, 6}) == reference;
    if (!r.leaf_isomorphic) r.failures.push_back("leaf algebra " + r.leaf_tuple + " is not (0,0,0,0,0,12+34) after relabeling");
    r.leaf_symplectic_no = !symplectic_decision(leaf).exists;
    r.reference_leaf_symplectic_no = !symplectic_decision(reference).exists;
    if (!r.leaf_symplectic_no || !r.reference_leaf_symplectic_no) r.failures.push_back("leaf algebra admits a symplectic form");
    return r;
}

nlohmann::json EightDimReport::to_json() const {
    return {{"algebra", kEightDimAlgebra},
            {"valid", valid},
            {"nil_index", nil_index},
            {"type_bound", bound},
            {"b2", b2},
            {"h2_matches", h2_matches},
            {"quadruple_products", quadruple_products},
            {"quadruple_exact", quadruple_exact},
            {"symplectic", symplectic_no ? "NO" : "YES"},
            {"theta_forced_e12", theta_forced_e12},
            {"leaf_algebra", leaf_tuple},
            {"leaf_isomorphic_to", "(0,0,0,0,0,12+34)"},
            {"leaf_isomorphic", leaf_isomorphic},
            {"leaf_symplectic", leaf_symplectic_no ? "NO" : "YES"},
            {"verdict", passed() ? "no left-invariant generalized complex structure" : "inconclusive"},
            {"status", passed() ? "pass" : "fail"},
            {"failures", failures}};
}

std::string EightDimReport::to_text() const {
    std::ostringstream os;
    auto yn = [](bool b) { return b ? "yes" : "no"; };
    os << "algebra " << kEightDimAlgebra << "\n";
    os << "  valid: " << yn(valid) << ", nil index " << nil_index << ", type bound " << bound << " (types 2..4 excluded)\n";
    os << "type 0:\n";
    os << "  b2 = " << b2 << ", H^2 = span{e23, e34-e25, e17}: " << yn(h2_matches) << "\n";
    os << "  quadruple products exact: " << quadruple_exact << "/" << quadruple_products << "\n";
    os << "  symplectic decision: " << (symplectic_no ? "NO" : "YES") << "\n";
    os << "type 1:\n";
    os << "  closed 1-forms span <e1,e2>, theta1 ^ conj(theta1) in span{e12}: " << yn(theta_forced_e12) << "\n";
    os << "  leaf algebra on <d3..d8>: " << leaf_tuple << ", isomorphic to (0,0,0,0,0,12+34): " << yn(leaf_isomorphic)
       << "\n";
    os << "  leaf symplectic decision: " << (leaf_symplectic_no ? "NO" : "YES") << " (reference "
       << (reference_leaf_symplectic_no ? "NO" : "YES") << ")\n";
    os << "verdict: " << (passed() ? "no left-invariant generalized complex structure" : "inconclusive") << "\n";
    for (const auto& f : failures) os << "  - " << f << "\n";
    return os.str();
}

// ---------------------------------------------------------------------------

namespace {

Form exp_times_theta(const Form& real, const Form& imag) {
    return wedge(wedge_exp(real + GaussianRational::i() * imag), parse_form("(1+i2)", 6));
}

IwasawaPath run_path(const std::string& name, const char* start, const char* beta, const char* b_field,
                     const Form& expected_mid, const Form& expected_end, const NilAlgebra& g) {
    IwasawaPath p;
    p.name = name;
    p.start = parse_form(start, 6);
    p.beta = parse_bivector(beta, 6);
    p.beta_poisson = schouten(p.beta, p.beta, g).is_zero();
    p.b_field = parse_two_form(b_field, 6);
    const Form mid = beta_transform(p.start, p.beta);
    const Form end = b_transform(mid, p.b_field, g);
    for (auto [label, form, expected] : {std::tuple{std::string("start"), p.start, p.start},
                                         std::tuple{std::string("after beta"), mid, expected_mid},
                                         std::tuple{std::string("after B"), end, expected_end}}) {
        IwasawaStep s{label, form, expected, projective_factor(expected, form), check_gcs(form, g).is_gcs};
        p.steps.push_back(std::move(s));
    }
    return p;
}

void path_json(nlohmann::json& j, const IwasawaPath& p) {
    j["start"] = to_string(p.start);
    j["beta"] = to_string(p.beta);
    j["beta_poisson"] = p.beta_poisson;
    j["b_field"] = to_string(p.b_field);
    nlohmann::json steps = nlohmann::json::array();
    for (const auto& s : p.steps)
        steps.push_back({{"step", s.label},
                         {"form", to_string(s.form)},
                         {"expected", to_string(s.expected)},
                         {"projective_factor", s.factor ? nlohmann::json(s.factor->to_string()) : nlohmann::json(nullptr)},
                         {"gcs", s.gcs}});
    j["steps"] = steps;
}

}  // namespace

IwasawaReport iwasawa_demo() {
    const NilAlgebra g = parse_algebra("(0,0,0,0,13-24,14+23)");
    const Form b = parse_two_form("35-46", 6);
    const Form w = parse_two_form("45+36", 6);
    const Form end = exp_times_theta(Form(6), -w);
    IwasawaReport r;
    r.a = run_path("A", "(1+i2)(3+i4)(5+i6)", "-1/4*(3-i4)(5-i6)", "35-46", exp_times_theta(-b, -w), end, g);
    r.b = run_path("B", "(1+i2)(3-i4)(5-i6)", "1/4*(3+i4)(5+i6)", "-35+46", exp_times_theta(b, -w), end, g);
    for (const IwasawaPath* p : {&r.a, &r.b}) {
        if (!p->beta_poisson) r.failures.push_back("path " + p->name + ": [beta, beta] != 0");
        for (const auto& s : p->steps) {
            if (!s.factor) r.failures.push_back("path " + p->name + ", " + s.label + ": not projectively equal to the expected form");
            if (!s.gcs) r.failures.push_back("path " + p->name + ", " + s.label + ": not a generalized complex structure");
        }
    }
    r.endpoints_equal = projectively_equal(r.a.steps.back().form, r.b.steps.back().form);
    if (!r.endpoints_equal) r.failures.push_back("the two paths end at different structures");
    return r;
}

nlohmann::json IwasawaReport::to_json() const {
    nlohmann::json j;
    j["algebra"] = "(0,0,0,0,13-24,14+23)";
    path_json(j["path_a"], a);
    path_json(j["path_b"], b);
    j["endpoints_projectively_equal"] = endpoints_equal;
    j["status"] = passed() ? "pass" : "fail";
    j["failures"] = failures;
    return j;
}

std::string IwasawaReport::to_text() const {
    std::ostringstream os;
    os << "algebra (0,0,0,0,13-24,14+23)\n";
    for (const IwasawaPath* p : {&a, &b}) {
        os << "path " << p->name << "\n";
        os << "  beta = " << to_string(p->beta) << "   [beta,beta] = 0: " << (p->beta_poisson ? "yes" : "no") << "\n";
        os << "  B    = " << to_string(p->b_field) << "\n";
        for (const auto& s : p->steps) {
            os << "  " << s.label << ": " << to_string(s.form) << "\n";
            os << "    expected (projectively): " << to_string(s.expected) << "\n";
            os << "    factor: " << (s.factor ? s.factor->to_string() : std::string("none")) << ", GCS: " << (s.gcs ? "yes" : "no")
               << "\n";
        }
    }
    os << "endpoints projectively equal: " << (endpoints_equal ? "yes" : "no") << "\n";
    for (const auto& f : failures) os << "  - " << f << "\n";
    return os.str();
}

}  // namespace nilgc
