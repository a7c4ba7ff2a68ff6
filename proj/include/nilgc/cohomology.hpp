#pragma once

// Chevalley-Eilenberg cohomology over Q and the exact symplectic decision.

#include "nilgc/linsolve.hpp"
#include "nilgc/nilalg.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace nilgc {

class NotClosed : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct BettiVector {
    std::vector<int> b;  // b_0 .. b_n

    int operator[](std::size_t k) const { return b.at(k); }
    /// b_0 = b_n = 1, Poincare duality, zero Euler characteristic.
    bool satisfies_invariants() const;
    std::string to_string() const;  // "(1,5,11,14,11,5,1)"
};

/// Matrix of d : wedge^k -> wedge^{k+1} in the blades_of_grade bases.
Matrix<GaussianRational> differential_matrix(const NilAlgebra& g, int k);

BettiVector betti(const NilAlgebra& g);
/// Basis of ker d on k-forms (real when the algebra is real).
std::vector<Form> closed_basis(const NilAlgebra& g, int k);
/// Basis of d(wedge^{k-1}).
std::vector<Form> exact_basis(const NilAlgebra& g, int k);

struct Exactness {
    bool exact = false;
    std::optional<Form> primitive;  // d(primitive) = a when exact
};

/// Throws NotClosed if da != 0. The zero form is exact with primitive 0.
Exactness is_exact(const Form& a, const NilAlgebra& g);

/// Whether the classes of `generators` span H^k exactly (generators closed, independent in
/// cohomology, and together with the exact forms spanning all closed k-forms).
bool spans_cohomology(const NilAlgebra& g, int k, const std::vector<Form>& generators);

struct SymplecticDecision {
    bool exists = false;
    std::optional<Form> witness;      // closed real 2-form with nonzero top power when exists
    std::vector<Form> closed_basis;   // omega_1..omega_m
    ParamPolynomial top_power;        // coefficient of e_{1..2n} in (sum t_i omega_i)^n
    std::string certificate;          // human-readable summary
};

struct SymplecticOptions {
    std::uint64_t seed = 0;
    std::size_t enumeration_cap = 200000;  // small-vector evaluations before random fallback
};

/// Exact decision; throws std::invalid_argument in odd dimension.
SymplecticDecision symplectic_decision(const NilAlgebra& g, const SymplecticOptions& options = {});

/// omega^n top coefficient for a concrete 2-form (n = dim/2).
GaussianRational top_power(const Form& omega);

}  // namespace nilgc
