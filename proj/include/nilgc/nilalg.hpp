#pragma once

// Nilpotent Lie algebras given by the differentials of a Malcev basis of g*.
//
// Sign convention: d alpha(X, Y) = -alpha([X, Y]); so de_k = sum c e_ij gives
// [d_i, d_j] = -sum c d_k.

#include "nilgc/exterior.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace nilgc {

class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NilAlgebra {
public:
    /// d_generators[k] = d(e_{k+1}); validated on construction.
    NilAlgebra(int dim, std::vector<Form> d_generators);

    int dim() const { return dim_; }
    /// d(e_index), 1-based.
    const Form& d_generator(int index) const { return d_gen_.at(static_cast<std::size_t>(index - 1)); }
    const std::vector<Form>& d_generators() const { return d_gen_; }

    /// d of a single basis blade (Leibniz expansion).
    Form d_blade(Blade b) const;

    friend bool operator==(const NilAlgebra&, const NilAlgebra&) = default;

private:
    int dim_;
    std::vector<Form> d_gen_;
};

/// Abelian algebra of the given dimension.
NilAlgebra abelian(int dim);

/// Chevalley-Eilenberg differential.
Form d(const Form& a, const NilAlgebra& g);
PolyForm d(const PolyForm& a, const NilAlgebra& g);

Polyvector lie_bracket(const Polyvector& x, const Polyvector& y, const NilAlgebra& g);
/// Cartan formula i_X d + d i_X.
Form lie_derivative(const Polyvector& x, const Form& a, const NilAlgebra& g);
/// [X+xi, Y+eta] = [X,Y] + L_X eta - L_Y xi - 1/2 d(i_X eta - i_Y xi).
GeneralizedSection courant_bracket(const GeneralizedSection& s, const GeneralizedSection& t, const NilAlgebra& g);

/// V_0 = 0 < V_1 < ... < V_s = g*, V_i = {v : dv in wedge^2 V_{i-1}}.
struct Filtration {
    int dim = 0;
    std::vector<std::vector<Form>> spaces;  // spaces[i] is a basis of V_i; spaces[0] is empty
    int nil_index = 0;

    std::vector<int> dimensions() const;  // dim V_1 .. dim V_s
};

Filtration filtration(const NilAlgebra& g);

/// Smallest i with a in wedge^p V_i for homogeneous nonzero a of degree p.
int nilpotent_degree(const Form& a, const Filtration& f);

// ---------------------------------------------------------------------------
// Subspace helpers shared by the higher modules.

std::vector<GaussianRational> coordinates(const Form& a, const std::vector<Blade>& blades);
Form form_from_coordinates(int dim, const std::vector<Blade>& blades, const std::vector<GaussianRational>& x);

/// Whether `a` lies in the span of `basis` (all forms in one dimension).
bool in_span(const std::vector<Form>& basis, const Form& a);
/// Dimension of the span.
std::size_t span_rank(const std::vector<Form>& forms);
/// Basis of wedge^p of the span of 1-forms `v`.
std::vector<Form> wedge_power_basis(const std::vector<Form>& v, int p);

}  // namespace nilgc
