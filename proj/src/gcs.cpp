#include "nilgc/gcs.hpp"

#include "nilgc/notation.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace nilgc {

namespace {

const GaussianRational kI = GaussianRational::i();

void require_real_two_form(const Form& f, const char* name) {
    if (!f.is_real()) throw std::invalid_argument(std::string(name) + " must be real");
    if (!f.is_zero() && f.pure_degree() != 2) throw std::invalid_argument(std::string(name) + " must be a 2-form");
}

// Columns i_{d_k} rho (k = 1..N) then e_k ^ rho; rows are the blades touched.
struct ActionSystem {
    std::vector<Blade> rows;
    Matrix<GaussianRational> matrix;
};

ActionSystem action_system(const Form& rho, const Form* target = nullptr) {
    const int n = rho.dim();
    std::vector<Form> cols;
    cols.reserve(static_cast<std::size_t>(2 * n));
    for (int k = 1; k <= n; ++k) cols.push_back(interior(Polyvector::generator(n, k), rho));
    for (int k = 1; k <= n; ++k) cols.push_back(wedge(Form::generator(n, k), rho));
    std::set<Blade> touched;
    for (const auto& c : cols)
        for (const auto& [b, x] : c.terms()) touched.insert(b);
    if (target)
        for (const auto& [b, x] : target->terms()) touched.insert(b);
    ActionSystem out{{touched.begin(), touched.end()}, {}};
    std::map<Blade, std::size_t> row_of;
    for (std::size_t r = 0; r < out.rows.size(); ++r) row_of.emplace(out.rows[r], r);
    out.matrix = Matrix<GaussianRational>(out.rows.size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (const auto& [b, x] : cols[c].terms()) out.matrix(row_of.at(b), c) = x;
    return out;
}

GaussianRational factorial_inverse(int m) {
    mpq_class f = 1;
    for (int k = 2; k <= m; ++k) f *= k;
    return GaussianRational(1 / f);
}

GaussianRational power(GaussianRational z, int m) {
    GaussianRational out = 1;
    for (int k = 0; k < m; ++k) out *= z;
    return out;
}

}  // namespace

void PureSpinorAnsatz::validate() const {
    const int n = dim();
    if (omega.dim() != n) throw DimensionMismatch("ansatz: B and omega dimensions differ");
    require_real_two_form(B, "B");
    require_real_two_form(omega, "omega");
    for (const auto& t : thetas) {
        if (t.dim() != n) throw DimensionMismatch("ansatz: theta dimension differs");
        if (!t.is_zero() && t.pure_degree() != 1) throw std::invalid_argument("ansatz: thetas must be 1-forms");
    }
    if (omega_decomposable().is_zero()) throw DependentThetas("ansatz: thetas are linearly dependent");
}

PureSpinorAnsatz parse_ansatz(std::string_view text, int dim) {
    const CompactSpinor s = parse_compact_spinor(text, dim);
    PureSpinorAnsatz a;
    if (s.bare_two_form) {
        a.B = Form(dim);
        a.omega = s.two_form;
    } else {
        a.B = real_part(s.exponent);
        a.omega = imag_part(s.exponent);
        a.thetas = s.thetas;
    }
    a.validate();
    return a;
}

Form ansatz_to_form(const PureSpinorAnsatz& a) {
    a.validate();
    return wedge(wedge_exp(a.exponent()), a.omega_decomposable());
}

AnnihilatorBasis annihilator(const Form& rho) {
    if (rho.is_zero()) throw std::invalid_argument("annihilator of the zero form");
    if (rho.dim() % 2 != 0) throw std::invalid_argument("annihilator needs even ambient dimension");
    const auto sys = action_system(rho);
    AnnihilatorBasis out;
    for (const auto& v : null_space(sys.matrix)) out.sections.push_back(GeneralizedSection::from_coordinates(rho.dim(), v));
    if (out.sections.size() > static_cast<std::size_t>(rho.dim()))
        throw std::logic_error("annihilator exceeds maximal isotropic dimension");
    out.is_pure = out.sections.size() == static_cast<std::size_t>(rho.dim());
    return out;
}

int type_of(const Form& rho) {
    if (!annihilator(rho).is_pure) throw ImpureSpinor("type_of: form is not a pure spinor");
    return *rho.lowest_degree();
}

GaussianRational pairing_constant(int n, int k) {
    if (k < 0 || k > n) throw std::invalid_argument("pairing_constant: need 0 <= k <= n");
    // Frozen values, confirmed by brute-force expansion in the test suite.
    struct Entry {
        int n, k;
        GaussianRational c;
    };
    static const Entry kTable[] = {
        {1, 0, GaussianRational(0, -2)},
        {2, 0, GaussianRational(-2)},
        {3, 0, GaussianRational(0, mpq_class(4, 3))},
        {3, 1, GaussianRational(-2)},
        {3, 2, GaussianRational(0, 2)},
        {3, 3, GaussianRational(-1)},
    };
    for (const auto& e : kTable)
        if (e.n == n && e.k == k) return e.c;
    // (-1)^{k(k-1)/2} (-2i)^{n-k} / (n-k)!
    GaussianRational c = power(GaussianRational(0, -2), n - k) * factorial_inverse(n - k);
    return (k * (k - 1) / 2) % 2 == 0 ? c : -c;
}

Nondegeneracy nondegeneracy_check(const PureSpinorAnsatz& a) {
    a.validate();
    if (a.dim() % 2 != 0) throw std::invalid_argument("nondegeneracy needs even ambient dimension");
    const int n = a.dim() / 2;
    const int k = a.type();
    if (k > n) throw ImpureSpinor("type exceeds half the dimension");
    Form acc = a.omega_decomposable();
    acc = wedge(acc, acc.conj());
    for (int m = 0; m < n - k; ++m) acc = wedge(a.omega, acc);
    Nondegeneracy out;
    out.value = top_coefficient(acc);
    out.nondegenerate = !out.value.is_zero();
    return out;
}

Nondegeneracy nondegeneracy_check(const Form& rho) {
    if (!annihilator(rho).is_pure) throw ImpureSpinor("nondegeneracy_check: form is not a pure spinor");
    Nondegeneracy out;
    out.value = mukai_pair(rho, rho.conj());
    out.nondegenerate = !out.value.is_zero();
    return out;
}

std::optional<IntegrabilitySolution> integrability_solve(const Form& rho, const NilAlgebra& g) {
    if (rho.is_zero()) throw std::invalid_argument("integrability_solve on the zero form");
    const Form drho = d(rho, g);
    const auto sys = action_system(rho, &drho);
    std::vector<GaussianRational> rhs;
    rhs.reserve(sys.rows.size());
    for (Blade b : sys.rows) rhs.push_back(drho.coefficient(b));
    auto sol = solve_linear(sys.matrix, std::optional(std::move(rhs)));
    if (!sol) return std::nullopt;
    IntegrabilitySolution out;
    out.particular = GeneralizedSection::from_coordinates(rho.dim(), sol->particular);
    for (const auto& v : sol->null_basis) out.directions.push_back(GeneralizedSection::from_coordinates(rho.dim(), v));
    return out;
}

bool involutivity_check(const Form& rho, const NilAlgebra& g) {
    const auto ann = annihilator(rho);
    if (!ann.is_pure) throw ImpureSpinor("involutivity_check: form is not a pure spinor");
    RowSpace<GaussianRational> span(static_cast<std::size_t>(2 * rho.dim()));
    for (const auto& s : ann.sections) span.insert(s.coordinates());
    for (std::size_t a = 0; a < ann.sections.size(); ++a)
        for (std::size_t b = a + 1; b < ann.sections.size(); ++b)
            if (!span.contains(courant_bracket(ann.sections[a], ann.sections[b], g).coordinates())) return false;
    return true;
}

nlohmann::json GcsReport::to_json() const {
    return {{"pure", pure},
            {"type", type},
            {"nondegenerate", nondegenerate},
            {"closed", closed},
            {"integrable", integrable},
            {"involutive", involutive},
            {"verdict", verdict()},
            {"failures", failures}};
}

std::string GcsReport::to_text() const {
    std::ostringstream os;
    auto yn = [](bool b) { return b ? "yes" : "no"; };
    os << "pure:          " << yn(pure) << "\n";
    os << "type:          " << (type < 0 ? std::string("-") : std::to_string(type)) << "\n";
    os << "nondegenerate: " << yn(nondegenerate) << "\n";
    os << "closed:        " << yn(closed) << "\n";
    os << "integrable:    " << yn(integrable) << "\n";
    os << "involutive:    " << yn(involutive) << "\n";
    os << "verdict:       " << verdict() << "\n";
    for (const auto& f : failures) os << "  - " << f << "\n";
    return os.str();
}

GcsReport check_gcs(const Form& rho, const NilAlgebra& g) {
    GcsReport r;
    if (rho.dim() != g.dim()) {
        r.failures.push_back("form dimension does not match the algebra");
        return r;
    }
    if (rho.is_zero()) {
        r.failures.push_back("zero form");
        return r;
    }
    if (rho.dim() % 2 != 0) {
        r.failures.push_back("odd ambient dimension");
        return r;
    }
    r.closed = d(rho, g).is_zero();
    r.integrable = integrability_solve(rho, g).has_value();
    r.pure = annihilator(rho).is_pure;
    if (r.pure) {
        r.type = *rho.lowest_degree();
        r.nondegenerate = !mukai_pair(rho, rho.conj()).is_zero();
        r.involutive = involutivity_check(rho, g);
    }
    if (!r.pure) r.failures.push_back("not pure: annihilator has dimension below " + std::to_string(rho.dim()));
    if (r.pure && !r.nondegenerate) r.failures.push_back("degenerate: Mukai pairing (rho, conj rho) vanishes");
    if (!r.integrable) r.failures.push_back("not integrable: d rho is not (X+xi).rho for any invariant X+xi");
    if (r.pure && r.involutive != r.integrable) r.failures.push_back("involutivity and integrability disagree");
    if (r.integrable && r.nondegenerate && !r.closed) r.failures.push_back("integrable but not closed");
    r.is_gcs = r.pure && r.nondegenerate && r.integrable;
    return r;
}

GcsReport check_gcs(const PureSpinorAnsatz& a, const NilAlgebra& g) {
    a.validate();
    const Form rho = ansatz_to_form(a);
    GcsReport r = check_gcs(rho, g);
    if (!r.pure) return r;
    const auto structured = nondegeneracy_check(a);
    const GaussianRational expected = pairing_constant(a.dim() / 2, a.type()) * structured.value;
    if (expected != mukai_pair(rho, rho.conj())) r.failures.push_back("structured and Mukai nondegeneracy disagree");
    if (r.type != a.type()) r.failures.push_back("type differs from the number of thetas");
    return r;
}

namespace {

std::vector<int> degrees_of(const std::vector<Form>& thetas, const Filtration& f) {
    std::vector<int> deg;
    for (const auto& t : thetas) deg.push_back(nilpotent_degree(t, f));
    return deg;
}

// A relation sum c_p theta_p in V_i among `subset`, with some c_p != 0, if one exists.
std::optional<std::vector<GaussianRational>> relation_mod(const std::vector<Form>& thetas, const std::vector<std::size_t>& subset,
                                                          const std::vector<Form>& v_i) {
    if (subset.empty()) return std::nullopt;
    const int n = thetas.front().dim();
    const auto blades = blades_of_grade(n, 1);
    Matrix<GaussianRational> m(blades.size(), subset.size() + v_i.size());
    for (std::size_t c = 0; c < subset.size(); ++c) {
        const auto x = coordinates(thetas[subset[c]], blades);
        for (std::size_t r = 0; r < blades.size(); ++r) m(r, c) = x[r];
    }
    for (std::size_t c = 0; c < v_i.size(); ++c) {
        const auto x = coordinates(v_i[c], blades);
        for (std::size_t r = 0; r < blades.size(); ++r) m(r, subset.size() + c) = x[r];
    }
    const auto ns = null_space(m);
    if (ns.empty()) return std::nullopt;
    return std::vector<GaussianRational>(ns.front().begin(), ns.front().begin() + static_cast<long>(subset.size()));
}

}  // namespace

bool is_normalized(const std::vector<Form>& thetas, const Filtration& f) {
    const auto deg = degrees_of(thetas, f);
    if (!std::is_sorted(deg.begin(), deg.end())) return false;
    for (int i = 1; i < f.nil_index; ++i) {
        std::vector<std::size_t> above;
        for (std::size_t p = 0; p < thetas.size(); ++p)
            if (deg[p] > i) above.push_back(p);
        if (relation_mod(thetas, above, f.spaces[static_cast<std::size_t>(i)])) return false;
    }
    return true;
}

std::vector<Form> normalize_theta(const std::vector<Form>& thetas, const NilAlgebra& g) {
    if (thetas.empty()) return thetas;
    const Form original = wedge_all(g.dim(), thetas);
    if (original.is_zero()) throw DependentThetas("normalize_theta: thetas are linearly dependent");
    const auto f = filtration(g);
    std::vector<Form> out = thetas;
    bool changed = true;
    while (changed) {
        changed = false;
        auto deg = degrees_of(out, f);
        // Stable sort by degree; an odd permutation is absorbed by negating the first entry.
        std::vector<std::size_t> order(out.size());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return deg[a] < deg[b]; });
        if (!std::is_sorted(deg.begin(), deg.end())) {
            int inversions = 0;
            for (std::size_t a = 0; a < order.size(); ++a)
                for (std::size_t b = a + 1; b < order.size(); ++b)
                    if (order[a] > order[b]) ++inversions;
            std::vector<Form> sorted;
            for (std::size_t p : order) sorted.push_back(out[p]);
            if (inversions % 2 != 0) sorted.front() = -sorted.front();
            out = std::move(sorted);
            deg = degrees_of(out, f);
        }
        for (int i = 1; i < f.nil_index && !changed; ++i) {
            std::vector<std::size_t> above;
            for (std::size_t p = 0; p < out.size(); ++p)
                if (deg[p] > i) above.push_back(p);
            const auto rel = relation_mod(out, above, f.spaces[static_cast<std::size_t>(i)]);
            if (!rel) continue;
            // theta_p <- theta_p + sum_{l != p} (c_l / c_p) theta_l, which lies in V_i.
            std::size_t pick = above.size();
            for (std::size_t q = 0; q < above.size(); ++q)
                if (!(*rel)[q].is_zero() && (pick == above.size() || deg[above[q]] >= deg[above[pick]])) pick = q;
            const GaussianRational cp = (*rel)[pick];
            Form replacement = out[above[pick]];
            for (std::size_t q = 0; q < above.size(); ++q)
                if (q != pick) replacement += ((*rel)[q] / cp) * out[above[q]];
            out[above[pick]] = replacement;
            changed = true;
        }
    }
    if (wedge_all(g.dim(), out) != original) throw std::logic_error("normalize_theta changed the wedge product");
    return out;
}

bool ideal_membership(const Form& alpha, const std::vector<Form>& thetas) {
    const Form w = wedge_all(alpha.dim(), thetas);
    if (w.is_zero()) throw DependentThetas("ideal_membership: thetas are linearly dependent");
    return wedge(alpha, w).is_zero();
}

GeneralizedSection JOperator::apply(const GeneralizedSection& s) const {
    return GeneralizedSection::from_coordinates(dim, matrix.apply(s.coordinates()));
}

bool JOperator::squares_to_minus_one() const {
    const std::size_t m = matrix.rows();
    for (std::size_t c = 0; c < m; ++c) {
        const auto once = matrix.apply(matrix.column(c));
        for (std::size_t r = 0; r < m; ++r)
            if (once[r] != GaussianRational(r == c ? -1 : 0)) return false;
    }
    return true;
}

bool JOperator::is_orthogonal() const {
    const std::size_t m = matrix.rows();
    std::vector<GeneralizedSection> unit, image;
    for (std::size_t c = 0; c < m; ++c) {
        std::vector<GaussianRational> u(m);
        u[c] = 1;
        unit.push_back(GeneralizedSection::from_coordinates(dim, u));
        image.push_back(GeneralizedSection::from_coordinates(dim, matrix.column(c)));
    }
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a; b < m; ++b)
            if (inner_product(image[a], image[b]) != inner_product(unit[a], unit[b])) return false;
    return true;
}

bool JOperator::is_real() const {
    for (std::size_t r = 0; r < matrix.rows(); ++r)
        for (std::size_t c = 0; c < matrix.cols(); ++c)
            if (!matrix(r, c).is_real()) return false;
    return true;
}

JOperator j_operator(const Form& rho) {
    const auto ann = annihilator(rho);
    if (!ann.is_pure) throw ImpureSpinor("j_operator: form is not a pure spinor");
    const int n = rho.dim();
    const std::size_t m = static_cast<std::size_t>(2 * n);
    // Columns l_1..l_N, conj(l_1)..conj(l_N); a real v = sum a_j l_j + sum b_j conj(l_j).
    Matrix<GaussianRational> basis(m, m);
    for (std::size_t j = 0; j < ann.sections.size(); ++j) {
        const auto l = ann.sections[j].coordinates();
        for (std::size_t r = 0; r < m; ++r) {
            basis(r, j) = l[r];
            basis(r, j + static_cast<std::size_t>(n)) = l[r].conj();
        }
    }
    if (rank(basis) != m) throw DegenerateSpinor("j_operator: L and its conjugate intersect");
    JOperator out{n, Matrix<GaussianRational>(m, m)};
    for (std::size_t c = 0; c < m; ++c) {
        std::vector<GaussianRational> unit(m);
        unit[c] = 1;
        const auto sol = solve_linear(basis, std::optional(unit));
        std::vector<GaussianRational> coeff = sol->particular;
        for (std::size_t j = 0; j < m; ++j) coeff[j] *= j < static_cast<std::size_t>(n) ? kI : -kI;
        const auto image = basis.apply(coeff);
        for (std::size_t r = 0; r < m; ++r) out.matrix(r, c) = image[r];
    }
    if (!out.is_real() || !out.squares_to_minus_one()) throw std::logic_error("j_operator: realification failed");
    return out;
}

}  // namespace nilgc
