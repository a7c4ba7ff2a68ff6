#include "nilgc/cohomology.hpp"

#include <random>
#include <sstream>

namespace nilgc {

bool BettiVector::satisfies_invariants() const {
    if (b.empty()) return false;
    const std::size_t n = b.size() - 1;
    if (b.front() != 1 || b.back() != 1) return false;
    int euler = 0;
    for (std::size_t k = 0; k <= n; ++k) {
        if (b[k] != b[n - k]) return false;
        euler += k % 2 == 0 ? b[k] : -b[k];
    }
    return n == 0 || euler == 0;
}

std::string BettiVector::to_string() const {
    std::string s = "(";
    for (std::size_t k = 0; k < b.size(); ++k) s += (k ? "," : "") + std::to_string(b[k]);
    return s + ")";
}

Matrix<GaussianRational> differential_matrix(const NilAlgebra& g, int k) {
    const auto src = blades_of_grade(g.dim(), k);
    const auto dst = blades_of_grade(g.dim(), k + 1);
    Matrix<GaussianRational> m(dst.size(), src.size());
    std::map<Blade, std::size_t> row_of;
    for (std::size_t r = 0; r < dst.size(); ++r) row_of.emplace(dst[r], r);
    for (std::size_t c = 0; c < src.size(); ++c) {
        const Form image = g.d_blade(src[c]);
        for (const auto& [b, x] : image.terms()) m(row_of.at(b), c) = x;
    }
    return m;
}

BettiVector betti(const NilAlgebra& g) {
    const int n = g.dim();
    std::vector<std::size_t> ranks(static_cast<std::size_t>(n) + 1, 0);  // rank of d_k
    for (int k = 0; k < n; ++k) ranks[static_cast<std::size_t>(k)] = rank(differential_matrix(g, k));
    BettiVector out;
    for (int k = 0; k <= n; ++k) {
        const auto dim_k = blades_of_grade(n, k).size();
        const std::size_t kernel = dim_k - ranks[static_cast<std::size_t>(k)];
        const std::size_t image = k == 0 ? 0 : ranks[static_cast<std::size_t>(k - 1)];
        out.b.push_back(static_cast<int>(kernel - image));
    }
    return out;
}

std::vector<Form> closed_basis(const NilAlgebra& g, int k) {
    const auto blades = blades_of_grade(g.dim(), k);
    std::vector<Form> out;
    if (k == g.dim()) {
        out.push_back(form_from_coordinates(g.dim(), blades, {GaussianRational(1)}));
        return out;
    }
    for (const auto& v : null_space(differential_matrix(g, k))) out.push_back(form_from_coordinates(g.dim(), blades, v));
    return out;
}

std::vector<Form> exact_basis(const NilAlgebra& g, int k) {
    std::vector<Form> out;
    if (k <= 0) return out;
    const auto blades = blades_of_grade(g.dim(), k);
    RowSpace<GaussianRational> span(blades.size());
    for (Blade b : blades_of_grade(g.dim(), k - 1)) {
        Form image = g.d_blade(b);
        if (!image.is_zero() && span.insert(coordinates(image, blades))) out.push_back(std::move(image));
    }
    return out;
}

Exactness is_exact(const Form& a, const NilAlgebra& g) {
    if (!d(a, g).is_zero()) throw NotClosed("is_exact: form is not closed");
    if (a.is_zero()) return {true, Form(g.dim())};
    const auto k = a.pure_degree();
    if (!k) throw std::invalid_argument("is_exact needs a homogeneous form");
    if (*k == 0) return {};
    const auto dst = blades_of_grade(g.dim(), *k);
    const auto src = blades_of_grade(g.dim(), *k - 1);
    auto sol = solve_linear(differential_matrix(g, *k - 1), std::optional(coordinates(a, dst)));
    if (!sol) return {};
    return {true, form_from_coordinates(g.dim(), src, sol->particular)};
}

bool spans_cohomology(const NilAlgebra& g, int k, const std::vector<Form>& generators) {
    const auto blades = blades_of_grade(g.dim(), k);
    for (const auto& f : generators)
        if (!d(f, g).is_zero()) return false;
    RowSpace<GaussianRational> span(blades.size());
    for (const auto& f : exact_basis(g, k)) span.insert(coordinates(f, blades));
    for (const auto& f : generators)
        if (!span.insert(coordinates(f, blades))) return false;  // dependent modulo exact forms
    return span.dimension() == closed_basis(g, k).size();
}

GaussianRational top_power(const Form& omega) {
    if (omega.dim() % 2 != 0) throw std::invalid_argument("top_power needs even dimension");
    Form power = Form::scalar(omega.dim(), 1);
    for (int i = 0; i < omega.dim() / 2; ++i) power = wedge(power, omega);
    return top_coefficient(power);
}

namespace {

// Evaluates p at values given per variable name t<k>, reusing the position map.
class TopEvaluator {
public:
    explicit TopEvaluator(const ParamPolynomial& p) : p_(p), slot_(p.variables().size()) {
        for (std::size_t v = 0; v < p.variables().size(); ++v) slot_[v] = std::stoul(p.variables()[v].substr(1)) - 1;
    }
    GaussianRational operator()(const std::vector<GaussianRational>& t) const {
        GaussianRational total;
        for (const auto& [exps, c] : p_.terms()) {
            GaussianRational term = c;
            for (std::size_t v = 0; v < exps.size() && !term.is_zero(); ++v)
                for (unsigned e = 0; e < exps[v]; ++e) term *= t[slot_[v]];
            total += term;
        }
        return total;
    }

private:
    const ParamPolynomial& p_;
    std::vector<std::size_t> slot_;
};

Form combine(const std::vector<Form>& basis, const std::vector<GaussianRational>& t, int dim) {
    Form out(dim);
    for (std::size_t i = 0; i < basis.size(); ++i) out += t[i] * basis[i];
    return out;
}

}  // namespace

SymplecticDecision symplectic_decision(const NilAlgebra& g, const SymplecticOptions& options) {
    const int dim = g.dim();
    if (dim % 2 != 0) throw std::invalid_argument("symplectic_decision needs even dimension");
    SymplecticDecision out;
    out.closed_basis = closed_basis(g, 2);
    const std::size_t m = out.closed_basis.size();

    PolyForm omega(dim);
    for (std::size_t i = 0; i < m; ++i) {
        const auto t = ParamPolynomial::variable("t" + std::to_string(i + 1));
        for (const auto& [b, c] : out.closed_basis[i].terms()) omega.add(b, t * ParamPolynomial(c));
    }
    PolyForm power = PolyForm::scalar(dim, 1);
    for (int i = 0; i < dim / 2; ++i) power = wedge(power, omega);
    out.top_power = top_coefficient(power);

    std::ostringstream cert;
    cert << m << " closed real 2-forms; top coefficient of omega^" << dim / 2 << " ";
    if (poly_is_zero(out.top_power)) {
        cert << "is identically zero";
        out.certificate = cert.str();
        return out;
    }
    cert << "has " << out.top_power.terms().size() << " terms";

    const TopEvaluator eval(out.top_power);
    static const long kValues[] = {1, -1, 2, -2};
    std::vector<GaussianRational> t(m);
    std::size_t budget = options.enumeration_cap;
    // Supports of growing size, index sets in lexicographic order, values by odometer.
    for (std::size_t s = 1; s <= m && budget > 0 && !out.witness; ++s) {
        std::vector<std::size_t> pick(s);
        for (std::size_t k = 0; k < s; ++k) pick[k] = k;
        while (budget > 0 && !out.witness) {
            std::vector<int> digit(s, 0);
            while (budget > 0) {
                std::fill(t.begin(), t.end(), GaussianRational(0));
                for (std::size_t k = 0; k < s; ++k) t[pick[k]] = kValues[digit[k]];
                --budget;
                if (!eval(t).is_zero()) {
                    out.witness = combine(out.closed_basis, t, dim);
                    break;
                }
                std::size_t k = 0;
                while (k < s && ++digit[k] == 4) digit[k++] = 0;
                if (k == s) break;
            }
            if (out.witness) break;
            std::size_t k = s;
            while (k > 0 && pick[k - 1] == m - s + k - 1) --k;
            if (k == 0) break;
            ++pick[k - 1];
            for (std::size_t j = k; j < s; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    if (!out.witness) {
        std::mt19937_64 rng(options.seed);
        std::uniform_int_distribution<long> num(-20, 20);
        std::uniform_int_distribution<long> den(1, 7);
        while (!out.witness) {
            for (auto& x : t) x = GaussianRational(mpq_class(num(rng), den(rng)));
            if (!eval(t).is_zero()) out.witness = combine(out.closed_basis, t, dim);
        }
        cert << "; witness from seeded random search";
    }
    out.exists = true;
    if (!d(*out.witness, g).is_zero() || top_power(*out.witness).is_zero())
        throw std::logic_error("symplectic witness failed its exact re-check");
    out.certificate = cert.str();
    return out;
}

}  // namespace nilgc
