#pragma once

// Invariant generalized complex structures through their pure spinors.
//
// rho = exp(B + i omega) ^ theta_1 ^ ... ^ theta_k; nondegeneracy is tested as
// omega^{n-k} ^ Omega ^ conj(Omega) != 0 (ambient dimension 2n), and through the
// Mukai pairing for raw forms.

#include "nilgc/linsolve.hpp"
#include "nilgc/nilalg.hpp"

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace nilgc {

class DependentThetas : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class ImpureSpinor : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class DegenerateSpinor : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct PureSpinorAnsatz {
    Form B;                   // real 2-form
    Form omega;               // real 2-form
    std::vector<Form> thetas; // complex 1-forms

    int dim() const { return B.dim(); }
    int type() const { return static_cast<int>(thetas.size()); }
    Form exponent() const { return B + GaussianRational::i() * omega; }
    /// theta_1 ^ ... ^ theta_k.
    Form omega_decomposable() const { return wedge_all(dim(), thetas); }

    /// Checks reality/degrees of B and omega and independence of the thetas.
    void validate() const;
};

/// Compact spinor text to an ansatz. A bare two-form w means exp(i w).
PureSpinorAnsatz parse_ansatz(std::string_view text, int dim);

Form ansatz_to_form(const PureSpinorAnsatz& a);

struct AnnihilatorBasis {
    std::vector<GeneralizedSection> sections;
    bool is_pure = false;
};

AnnihilatorBasis annihilator(const Form& rho);

/// Lowest degree of a pure spinor.
int type_of(const Form& rho);

struct Nondegeneracy {
    bool nondegenerate = false;
    GaussianRational value;  // structured: top coefficient of omega^{n-k}^Omega^conj(Omega); raw: Mukai pairing
};

Nondegeneracy nondegeneracy_check(const PureSpinorAnsatz& a);
Nondegeneracy nondegeneracy_check(const Form& rho);

/// mukai_pair(rho, conj rho) = c_{n,k} * (structured value). Frozen for n <= 3, closed form beyond.
GaussianRational pairing_constant(int n, int k);

struct IntegrabilitySolution {
    GeneralizedSection particular;               // d rho = particular . rho
    std::vector<GeneralizedSection> directions;  // annihilator of rho
};

std::optional<IntegrabilitySolution> integrability_solve(const Form& rho, const NilAlgebra& g);

/// Courant involutivity of the annihilator; throws ImpureSpinor.
bool involutivity_check(const Form& rho, const NilAlgebra& g);

struct GcsReport {
    bool pure = false;
    int type = -1;  // -1 when not pure
    bool nondegenerate = false;
    bool closed = false;
    bool integrable = false;
    bool involutive = false;
    bool is_gcs = false;
    std::vector<std::string> failures;

    std::string verdict() const { return is_gcs ? "GCS" : "NOT_GCS"; }
    nlohmann::json to_json() const;
    std::string to_text() const;
};

GcsReport check_gcs(const Form& rho, const NilAlgebra& g);
GcsReport check_gcs(const PureSpinorAnsatz& a, const NilAlgebra& g);

/// Reorders by nilpotent degree and reduces dependencies modulo V_i, preserving the wedge.
std::vector<Form> normalize_theta(const std::vector<Form>& thetas, const NilAlgebra& g);
/// For each i: thetas with nilpotent degree > i are independent modulo V_i, and degrees weakly increase.
bool is_normalized(const std::vector<Form>& thetas, const Filtration& f);

/// alpha ^ theta_1 ^ ... ^ theta_m == 0; throws DependentThetas.
bool ideal_membership(const Form& alpha, const std::vector<Form>& thetas);

/// Real operator on T + T* in the basis (d_1..d_N, e_1..e_N), +i on the annihilator L.
struct JOperator {
    int dim = 0;  // N, so the matrix is 2N x 2N
    Matrix<GaussianRational> matrix;

    GeneralizedSection apply(const GeneralizedSection& s) const;
    bool squares_to_minus_one() const;
    bool is_orthogonal() const;
    bool is_real() const;
};

JOperator j_operator(const Form& rho);

}  // namespace nilgc
