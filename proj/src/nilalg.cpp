#include "nilgc/nilalg.hpp"

#include "nilgc/linsolve.hpp"

#include <algorithm>
#include <set>

namespace nilgc {

NilAlgebra::NilAlgebra(int dim, std::vector<Form> d_generators) : dim_(dim), d_gen_(std::move(d_generators)) {
    if (dim < 1 || dim > kMaxDimension) throw ValidationError("unsupported dimension " + std::to_string(dim));
    if (d_gen_.size() != static_cast<std::size_t>(dim))
        throw ValidationError("expected " + std::to_string(dim) + " differentials, got " + std::to_string(d_gen_.size()));
    for (int i = 1; i <= dim; ++i) {
        const Form& de = d_gen_[static_cast<std::size_t>(i - 1)];
        if (de.dim() != dim) throw ValidationError("d(e" + std::to_string(i) + ") has the wrong dimension");
        if (!de.is_real()) throw ValidationError("d(e" + std::to_string(i) + ") has non-real structure constants");
        for (const auto& [b, c] : de.terms()) {
            if (b.grade() != 2) throw ValidationError("d(e" + std::to_string(i) + ") is not a 2-form");
            if (b.max_index() >= i)
                throw ValidationError("Malcev condition fails: d(e" + std::to_string(i) + ") involves e" +
                                      std::to_string(b.max_index()));
        }
    }
    for (int i = 1; i <= dim; ++i) {
        if (!d(d_gen_[static_cast<std::size_t>(i - 1)], *this).is_zero())
            throw ValidationError("Jacobi identity fails: d(d(e" + std::to_string(i) + ")) != 0");
    }
}

NilAlgebra abelian(int dim) { return NilAlgebra(dim, std::vector<Form>(static_cast<std::size_t>(dim), Form(dim))); }

Form NilAlgebra::d_blade(Blade b) const {
    Form out(dim_);
    const auto idx = b.indices();
    std::uint32_t prefix = 0;
    for (std::size_t k = 0; k < idx.size(); ++k) {
        const std::uint32_t bit = std::uint32_t{1} << (idx[k] - 1);
        const std::uint32_t suffix = b.mask() & ~(prefix | bit);
        for (const auto& [t, c] : d_gen_[static_cast<std::size_t>(idx[k] - 1)].terms()) {
            const int s1 = wedge_sign(Blade(prefix), t);
            if (s1 == 0) continue;
            const int s2 = wedge_sign(Blade(prefix | t.mask()), Blade(suffix));
            if (s2 == 0) continue;
            const int sign = s1 * s2 * (k % 2 == 0 ? 1 : -1);
            out.add(Blade(prefix | t.mask() | suffix), sign > 0 ? c : -c);
        }
        prefix |= bit;
    }
    return out;
}

Form d(const Form& a, const NilAlgebra& g) {
    if (a.dim() != g.dim()) throw DimensionMismatch("d: form dimension does not match algebra");
    Form out(a.dim());
    for (const auto& [b, c] : a.terms()) out += c * g.d_blade(b);
    return out;
}

PolyForm d(const PolyForm& a, const NilAlgebra& g) {
    if (a.dim() != g.dim()) throw DimensionMismatch("d: form dimension does not match algebra");
    PolyForm out(a.dim());
    for (const auto& [b, c] : a.terms()) {
        const Form db = g.d_blade(b);
        for (const auto& [t, x] : db.terms()) out.add(t, c * ParamPolynomial(x));
    }
    return out;
}

Polyvector lie_bracket(const Polyvector& x, const Polyvector& y, const NilAlgebra& g) {
    if (x.dim() != g.dim() || y.dim() != g.dim()) throw DimensionMismatch("lie_bracket: dimension mismatch");
    if (x.pure_degree().value_or(1) != 1 || y.pure_degree().value_or(1) != 1)
        throw std::invalid_argument("lie_bracket needs degree-1 polyvectors");
    Polyvector out(g.dim());
    for (int k = 1; k <= g.dim(); ++k) {
        const Form& de = g.d_generator(k);
        if (de.is_zero()) continue;
        const Form value = interior(y, interior(x, de));
        out.add(Blade::single(k), -value.coefficient(Blade{}));
    }
    return out;
}

Form lie_derivative(const Polyvector& x, const Form& a, const NilAlgebra& g) {
    if (x.pure_degree().value_or(1) != 1) throw std::invalid_argument("lie_derivative needs a degree-1 polyvector");
    return interior(x, d(a, g)) + d(interior(x, a), g);
}

GeneralizedSection courant_bracket(const GeneralizedSection& s, const GeneralizedSection& t, const NilAlgebra& g) {
    if (s.dim() != g.dim() || t.dim() != g.dim()) throw DimensionMismatch("courant_bracket: dimension mismatch");
    Polyvector vec = lie_bracket(s.vec, t.vec, g);
    Form cov = lie_derivative(s.vec, t.cov, g) - lie_derivative(t.vec, s.cov, g);
    const Form pairing_term = d(interior(s.vec, t.cov) - interior(t.vec, s.cov), g);
    cov -= GaussianRational::fraction(1, 2) * pairing_term;
    return {std::move(vec), std::move(cov)};
}

// ---------------------------------------------------------------------------

std::vector<GaussianRational> coordinates(const Form& a, const std::vector<Blade>& blades) {
    std::vector<GaussianRational> x;
    x.reserve(blades.size());
    std::size_t found = 0;
    for (Blade b : blades) {
        x.push_back(a.coefficient(b));
        if (!x.back().is_zero()) ++found;
    }
    if (found != a.size()) throw std::invalid_argument("form has components outside the coordinate blades");
    return x;
}

Form form_from_coordinates(int dim, const std::vector<Blade>& blades, const std::vector<GaussianRational>& x) {
    Form out(dim);
    for (std::size_t k = 0; k < blades.size(); ++k) out.add(blades[k], x[k]);
    return out;
}

namespace {

std::vector<Blade> support_of(const std::vector<Form>& forms, const Form* extra = nullptr) {
    std::set<Blade> all;
    for (const auto& f : forms)
        for (const auto& [b, c] : f.terms()) all.insert(b);
    if (extra)
        for (const auto& [b, c] : extra->terms()) all.insert(b);
    return {all.begin(), all.end()};
}

}  // namespace

bool in_span(const std::vector<Form>& basis, const Form& a) {
    const auto blades = support_of(basis, &a);
    RowSpace<GaussianRational> space(blades.size());
    for (const auto& f : basis) space.insert(coordinates(f, blades));
    return space.contains(coordinates(a, blades));
}

std::size_t span_rank(const std::vector<Form>& forms) {
    const auto blades = support_of(forms);
    RowSpace<GaussianRational> space(blades.size());
    for (const auto& f : forms) space.insert(coordinates(f, blades));
    return space.dimension();
}

std::vector<Form> wedge_power_basis(const std::vector<Form>& v, int p) {
    std::vector<Form> out;
    const int m = static_cast<int>(v.size());
    if (p < 0 || p > m) return out;
    if (v.empty()) return out;
    const int dim = v.front().dim();
    if (p == 0) return {Form::scalar(dim, 1)};
    std::vector<int> pick(static_cast<std::size_t>(p));
    for (int k = 0; k < p; ++k) pick[static_cast<std::size_t>(k)] = k;
    while (true) {
        Form w = Form::scalar(dim, 1);
        for (int k : pick) w = wedge(w, v[static_cast<std::size_t>(k)]);
        out.push_back(std::move(w));
        int k = p - 1;
        while (k >= 0 && pick[static_cast<std::size_t>(k)] == m - p + k) --k;
        if (k < 0) break;
        ++pick[static_cast<std::size_t>(k)];
        for (int j = k + 1; j < p; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

std::vector<int> Filtration::dimensions() const {
    std::vector<int> out;
    for (std::size_t i = 1; i < spaces.size(); ++i) out.push_back(static_cast<int>(spaces[i].size()));
    return out;
}

Filtration filtration(const NilAlgebra& g) {
    const int n = g.dim();
    const auto two_blades = blades_of_grade(n, 2);
    const auto one_blades = blades_of_grade(n, 1);
    Filtration f;
    f.dim = n;
    f.spaces.emplace_back();
    while (static_cast<int>(f.spaces.back().size()) < n) {
        const auto lower = wedge_power_basis(f.spaces.back(), 2);
        // Unknowns: x_1..x_n (v = sum x_j e_j) and y_a (coefficients on wedge^2 V_{i-1}); d v = sum y_a w_a.
        Matrix<GaussianRational> m(two_blades.size(), static_cast<std::size_t>(n) + lower.size());
        for (int j = 1; j <= n; ++j) {
            const auto col = coordinates(g.d_generator(j), two_blades);
            for (std::size_t r = 0; r < two_blades.size(); ++r) m(r, static_cast<std::size_t>(j - 1)) = col[r];
        }
        for (std::size_t a = 0; a < lower.size(); ++a) {
            const auto col = coordinates(lower[a], two_blades);
            for (std::size_t r = 0; r < two_blades.size(); ++r) m(r, static_cast<std::size_t>(n) + a) = -col[r];
        }
        RowSpace<GaussianRational> space(static_cast<std::size_t>(n));
        std::vector<Form> basis;
        for (const auto& v : null_space(m)) {
            std::vector<GaussianRational> x(v.begin(), v.begin() + n);
            if (space.insert(x)) basis.push_back(form_from_coordinates(n, one_blades, x));
        }
        if (basis.size() <= f.spaces.back().size())
            throw ValidationError("filtration stalls at dimension " + std::to_string(basis.size()) + ": algebra is not nilpotent");
        // Keep V_{i-1}'s basis as a prefix so the list reads as a Malcev-adapted basis.
        std::vector<Form> ordered = f.spaces.back();
        for (const auto& b : basis)
            if (!in_span(ordered, b)) ordered.push_back(b);
        f.spaces.push_back(std::move(ordered));
    }
    f.nil_index = static_cast<int>(f.spaces.size()) - 1;
    return f;
}

int nilpotent_degree(const Form& a, const Filtration& f) {
    if (a.is_zero()) throw std::invalid_argument("nilpotent degree of the zero form is undefined");
    const auto p = a.pure_degree();
    if (!p) throw std::invalid_argument("nilpotent degree needs a homogeneous form");
    if (*p == 0) return 0;
    for (int i = 1; i <= f.nil_index; ++i) {
        const auto& v = f.spaces[static_cast<std::size_t>(i)];
        if (static_cast<int>(v.size()) < *p) continue;
        if (in_span(wedge_power_basis(v, *p), a)) return i;
    }
    throw std::logic_error("form not contained in the top filtration step");
}

}  // namespace nilgc
