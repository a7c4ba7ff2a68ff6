#include "nilgc/transforms.hpp"

#include "nilgc/cohomology.hpp"

namespace nilgc {

std::optional<GaussianRational> projective_factor(const Form& a, const Form& b) {
    if (a.is_zero() || b.is_zero() || a.size() != b.size()) return std::nullopt;
    const auto& [blade, ca] = *a.terms().begin();
    const GaussianRational lambda = b.coefficient(blade) / ca;
    if (lambda.is_zero() || lambda * a != b) return std::nullopt;
    return lambda;
}

bool projectively_equal(const Form& a, const Form& b) { return projective_factor(a, b).has_value(); }

Form b_transform(const Form& rho, const Form& B, const NilAlgebra& g) {
    if (!B.is_real() || (!B.is_zero() && B.pure_degree() != 2)) throw std::invalid_argument("b_transform: B must be a real 2-form");
    if (!d(B, g).is_zero()) throw NotClosed("b_transform: B is not closed");
    const Form out = wedge(wedge_exp(B), rho);
    // Post-checks: type, closedness and (when even-dimensional) the Mukai pairing are invariant.
    if (!rho.is_zero()) {
        if (out.lowest_degree() != rho.lowest_degree()) throw std::logic_error("b_transform changed the type");
        if (d(out, g).is_zero() != d(rho, g).is_zero()) throw std::logic_error("b_transform changed closedness");
        if (rho.dim() % 2 == 0 && mukai_pair(out, out.conj()) != mukai_pair(rho, rho.conj()))
            throw std::logic_error("b_transform changed the Mukai pairing");
    }
    return out;
}

Form beta_transform(const Form& rho, const Polyvector& beta) {
    for (const auto& [b, c] : beta.terms())
        if (b.grade() != 2) throw std::invalid_argument("beta_transform needs a bivector");
    Form out = rho;
    Form term = rho;
    for (long m = 1; !term.is_zero(); ++m) {
        term = GaussianRational::fraction(1, m) * interior(beta, term);
        out += term;
    }
    return out;
}

namespace {

Polyvector blade_vector(int dim, int index) { return Polyvector::generator(dim, index); }

Polyvector wedge_vectors(int dim, const std::vector<int>& idx, std::size_t skip) {
    Polyvector out = Polyvector::scalar(dim, 1);
    for (std::size_t k = 0; k < idx.size(); ++k)
        if (k != skip) out = wedge(out, blade_vector(dim, idx[k]));
    return out;
}

}  // namespace

Polyvector schouten(const Polyvector& p, const Polyvector& q, const NilAlgebra& g) {
    if (p.dim() != g.dim() || q.dim() != g.dim()) throw DimensionMismatch("schouten: dimension mismatch");
    const int n = g.dim();
    Polyvector out(n);
    for (const auto& [bp, cp] : p.terms()) {
        const auto xi = bp.indices();
        for (const auto& [bq, cq] : q.terms()) {
            const auto yj = bq.indices();
            for (std::size_t i = 0; i < xi.size(); ++i) {
                const Polyvector rest_p = wedge_vectors(n, xi, i);
                for (std::size_t j = 0; j < yj.size(); ++j) {
                    const Polyvector br = lie_bracket(blade_vector(n, xi[i]), blade_vector(n, yj[j]), g);
                    if (br.is_zero()) continue;
                    Polyvector term = wedge(wedge(br, rest_p), wedge_vectors(n, yj, j));
                    // 1-based (-1)^{i+j} equals 0-based (-1)^{i+j}.
                    const GaussianRational c = cp * cq;
                    out += ((i + j) % 2 == 0 ? c : -c) * term;
                }
            }
        }
    }
    return out;
}

DualFrame dual_frame(const std::vector<Form>& thetas) {
    if (thetas.empty()) throw std::invalid_argument("dual_frame: empty frame");
    const int dim = thetas.front().dim();
    const std::size_t k = thetas.size();
    if (2 * k != static_cast<std::size_t>(dim)) throw std::invalid_argument("dual_frame needs n thetas in dimension 2n");
    const Form omega = wedge_all(dim, thetas);
    if (wedge(omega, omega.conj()).is_zero()) throw DegenerateSpinor("dual_frame: Omega ^ conj(Omega) vanishes");
    const auto one = blades_of_grade(dim, 1);
    Matrix<GaussianRational> m(2 * k, static_cast<std::size_t>(dim));
    for (std::size_t j = 0; j < k; ++j) {
        const auto t = coordinates(thetas[j], one);
        for (std::size_t c = 0; c < one.size(); ++c) {
            m(j, c) = t[c];
            m(k + j, c) = t[c].conj();
        }
    }
    DualFrame out{thetas, {}};
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<GaussianRational> rhs(2 * k);
        rhs[i] = 1;
        const auto sol = solve_linear(m, std::optional(rhs));
        if (!sol || !sol->null_basis.empty()) throw DegenerateSpinor("dual_frame: singular frame");
        Polyvector x(dim);
        for (std::size_t c = 0; c < one.size(); ++c) x.add(one[c], sol->particular[c]);
        out.xs.push_back(std::move(x));
    }
    return out;
}

LowerTypeResult complex_to_lower_type(const std::vector<Form>& thetas, const NilAlgebra& g) {
    const int dim = g.dim();
    if (dim % 2 != 0 || thetas.size() * 2 != static_cast<std::size_t>(dim))
        throw std::invalid_argument("complex_to_lower_type needs n thetas in dimension 2n");
    if (dim < 4) throw std::invalid_argument("complex_to_lower_type needs n >= 2");
    const Form big_omega = wedge_all(dim, thetas);
    if (big_omega.is_zero()) throw DependentThetas("complex_to_lower_type: thetas are dependent");
    if (!d(big_omega, g).is_zero()) throw std::invalid_argument("complex_to_lower_type: Omega is not closed");
    if (mukai_pair(big_omega, big_omega.conj()).is_zero())
        throw DegenerateSpinor("complex_to_lower_type: Omega is degenerate");

    LowerTypeResult out;
    out.thetas = normalize_theta(thetas, g);
    out.frame = dual_frame(out.thetas);
    const std::size_t n = out.thetas.size();
    out.beta = wedge(out.frame.xs[n - 2], out.frame.xs[n - 1]);
    out.beta_bracket = schouten(out.beta, out.beta, g);
    if (!out.beta_bracket.is_zero()) throw std::logic_error("complex_to_lower_type: [beta, beta] != 0");
    out.rho = beta_transform(wedge_all(dim, out.thetas), out.beta);

    const Form c = wedge(out.thetas[n - 2], out.thetas[n - 1]);
    out.ansatz.B = real_part(c);
    out.ansatz.omega = imag_part(c);
    out.ansatz.thetas.assign(out.thetas.begin(), out.thetas.end() - 2);
    out.matches_expected = projectively_equal(ansatz_to_form(out.ansatz), out.rho);
    out.report = check_gcs(out.ansatz, g);
    return out;
}

}  // namespace nilgc
