// Acceptance runner: one PASS/FAIL line per criterion, details indented below.
// Exit status is 0 only when every criterion passes.

#include "nilgc/catalog.hpp"
#include "nilgc/notation.hpp"

#include "properties.hpp"

#include <chrono>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace nilgc;

namespace {

int failed = 0;

void report(int id, const std::string& name, bool ok, const std::vector<std::string>& details) {
    std::cout << (ok ? "PASS" : "FAIL") << "  " << id << ". " << name << "\n";
    for (const auto& d : details) std::cout << "        " << d << "\n";
    if (!ok) ++failed;
}

std::string counts_text(const TableCounts& c) {
    std::ostringstream os;
    os << "complex " << c.complex << ", symplectic " << c.symplectic << ", both " << c.both << ", complex-only "
       << c.complex_only << ", symplectic-only " << c.symplectic_only << ", neither " << c.neither;
    return os.str();
}

void tally_details(std::vector<std::string>& out, const std::string& label, const testsupport::Tally& t) {
    out.push_back(label + ": " + std::to_string(t.checked - static_cast<int>(t.failures.size())) + "/" +
                  std::to_string(t.checked));
    for (const auto& f : t.failures) out.push_back("  violation: " + f);
}

}  // namespace

int main() {
    const auto start = std::chrono::steady_clock::now();
    const auto& rows = catalog();
    const TableReport table = verify_table(rows);

    {
        int ok = 0;
        std::vector<std::string> details;
        for (const auto& r : table.rows) {
            if (r.algebra_valid) ++ok;
            else details.push_back("row " + std::to_string(r.row) + " " + r.tuple_text + " invalid");
        }
        details.insert(details.begin(), std::to_string(ok) + "/34 algebras valid");
        report(1, "catalog validity", ok == 34 && rows.size() == 34, details);
    }

    {
        int ok = 0;
        std::vector<std::string> details;
        for (const auto& r : table.rows) {
            if (r.betti_match) ++ok;
            else details.push_back("row " + std::to_string(r.row) + " mismatch");
        }
        const auto torus = betti(abelian(6));
        const auto small = betti(parse_algebra("(0,0,12,13,23,14)"));
        details.insert(details.begin(), std::to_string(ok) + "/34 rows match; torus (" + std::to_string(torus[1]) + "," +
                                            std::to_string(torus[2]) + "), (0,0,12,13,23,14) (" +
                                            std::to_string(small[1]) + "," + std::to_string(small[2]) + ")");
        report(2, "Betti columns", ok == 34 && torus[1] == 6 && torus[2] == 15 && small[1] == 2 && small[2] == 4, details);
    }

    {
        int cells = 0, bad = 0;
        std::vector<std::string> details;
        for (const auto& r : table.rows)
            for (const auto& c : r.cells) {
                if (!c.text) continue;
                ++cells;
                if (c.passed) continue;
                ++bad;
                std::string why;
                for (const auto& f : c.failures) why += (why.empty() ? "" : "; ") + f;
                details.push_back("row " + std::to_string(r.row) + " " + r.tuple_text + ", type " + std::to_string(c.type) +
                                  " cell " + *c.text + ": " + why);
            }
        details.insert(details.begin(), std::to_string(cells - bad) + "/" + std::to_string(cells) +
                                            " cells pass; every row has a witness: " +
                                            (table.every_row_has_witness ? "yes" : "no"));
        report(3, "witness verification", bad == 0 && table.every_row_has_witness, details);
    }

    report(4, "witness counts", table.counts_match, {counts_text(table.counts)});

    const EightDimReport eight = verify_8d();
    {
        int agree = 0, yes = 0;
        std::vector<std::string> details;
        for (const auto& r : table.rows) {
            if (r.symplectic_decision && r.symplectic_agrees) ++agree;
            else details.push_back("row " + std::to_string(r.row) + " disagrees with the symplectic column");
            if (r.symplectic_decision && *r.symplectic_decision) ++yes;
        }
        const bool reference_no = !symplectic_decision(parse_algebra("(0,0,0,0,0,12+34)")).exists;
        details.insert(details.begin(), std::to_string(agree) + "/34 agree (" + std::to_string(yes) + " YES, " +
                                            std::to_string(34 - yes) + " NO); (0,0,0,0,0,12+34): " +
                                            (reference_no ? "NO" : "YES") + "; 8-dim leaf " + eight.leaf_tuple + ": " +
                                            (eight.leaf_symplectic_no ? "NO" : "YES"));
        report(5, "symplectic decision", agree == 34 && yes == 26 && reference_no && eight.leaf_symplectic_no, details);
    }

    {
        const IwasawaReport iw = iwasawa_demo();
        std::vector<std::string> details;
        for (const IwasawaPath* p : {&iw.a, &iw.b})
            for (const auto& s : p->steps)
                details.push_back("path " + p->name + ", " + s.label + ": factor " +
                                  (s.factor ? s.factor->to_string() : std::string("none")) + (s.gcs ? ", GCS" : ", NOT_GCS"));
        details.push_back(std::string("endpoints projectively equal: ") + (iw.endpoints_equal ? "yes" : "no"));
        for (const auto& f : iw.failures) details.push_back(f);
        report(6, "Iwasawa connection", iw.passed(), details);
    }

    {
        int total = 0, ok = 0;
        std::vector<std::string> details;
        for (const auto& e : rows) {
            const auto& text = e.witness_for(3);
            if (!text) continue;
            ++total;
            const NilAlgebra g = e.algebra();
            const auto r = complex_to_lower_type(parse_ansatz(*text, 6).thetas, g);
            const bool good = r.beta_bracket.is_zero() && r.report.is_gcs && r.report.closed && r.report.type == 1;
            if (good) ++ok;
            else details.push_back("row " + std::to_string(e.row) + " fails");
        }
        details.insert(details.begin(), std::to_string(ok) + "/" + std::to_string(total) + " complex witnesses deform to type 1");
        report(7, "complex to type n-2", total == 18 && ok == 18, details);
    }

    {
        std::vector<int> maximal;
        bool ok = true;
        std::vector<std::string> details;
        for (const auto& e : rows) {
            const NilAlgebra g = e.algebra();
            const int bound = max_type_bound(g);
            if (filtration(g).dimensions().size() == 5) {
                maximal.push_back(e.row);
                if (bound != 1) {
                    ok = false;
                    details.push_back("row " + std::to_string(e.row) + " bound " + std::to_string(bound));
                }
            }
            for (int t : kColumnTypes)
                if (e.witness_for(t) && t > bound) {
                    ok = false;
                    details.push_back("row " + std::to_string(e.row) + " witness of type " + std::to_string(t) + " above bound");
                }
        }
        std::string list;
        for (int r : maximal) list += (list.empty() ? "" : ",") + std::to_string(r);
        details.insert(details.begin(), "maximal-index rows {" + list + "} bound 1; 8-dim bound " + std::to_string(eight.bound));
        report(8, "type bound", ok && !maximal.empty() && eight.bound == 1, details);
    }

    {
        std::vector<std::string> details{
            "b2 = " + std::to_string(eight.b2) + ", H2 = span{e23, e34-e25, e17}: " + (eight.h2_matches ? "yes" : "no"),
            std::to_string(eight.quadruple_exact) + "/" + std::to_string(eight.quadruple_products) + " quadruple products exact",
            std::string("type 0 excluded (symplectic NO): ") + (eight.symplectic_no ? "yes" : "no"),
            std::string("type 1 excluded (theta1 forced to e12, leaf not symplectic): ") +
                (eight.theta_forced_e12 && eight.leaf_symplectic_no ? "yes" : "no")};
        for (const auto& f : eight.failures) details.push_back(f);
        if (eight.passed()) details.push_back("verdict: no left-invariant generalized complex structure");
        report(9, "8-dimensional counterexample", eight.passed(), details);
    }

    {
        const auto cases = exclusion_cases(20, 0);
        bool ok = dash_coverage(rows, cases).exact();
        std::vector<std::string> details{std::string("dash coverage exact: ") + (ok ? "yes" : "no")};
        for (const auto& c : cases) {
            const ReplayResult r = replay_exclusion(c);
            const bool good = r.outcome == ReplayOutcome::EXCLUDED_AT_SAMPLES && r.forced_all();
            ok = ok && good;
            details.push_back(to_string(c.id) + " [" + r.label() + "]: " + std::to_string(r.records.size()) + " samples, " +
                              (r.outcome == ReplayOutcome::EXCLUDED_AT_SAMPLES ? "EXCLUDED_AT_SAMPLES" : "COUNTEREXAMPLE") +
                              ", forced vanishing observed: " + (r.forced_all() ? "all" : "not all"));
        }
        report(10, "exclusion replays", ok, details);
    }

    {
        std::vector<std::string> details;
        const auto clifford = testsupport::clifford_suite(1000);
        const auto population = testsupport::gcs_population_suite(100);
        const auto bettis = testsupport::betti_suite();
        tally_details(details, "(a) Clifford relation", clifford);
        tally_details(details, "(b) involutive <=> integrable", population.involutivity);
        tally_details(details, "(c) integrable and nondegenerate => closed", population.closedness);
        tally_details(details, "(d) Mukai vs structured nondegeneracy", population.pairing);
        tally_details(details, "(e) Betti invariants", bettis);
        details.push_back("population: " + std::to_string(population.table_cells) + " table cells, " +
                          std::to_string(population.random_ansatzes) + " random ansatzes");
        const bool ok = clifford.ok() && population.involutivity.ok() && population.closedness.ok() &&
                        population.pairing.ok() && bettis.ok();
        report(11, "property suites", ok, details);
    }

    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (11 - failed) << "/11 criteria pass (" << secs << " s)\n";
    return failed == 0 ? 0 : 1;
}
