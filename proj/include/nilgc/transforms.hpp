#pragma once

// B-field and beta-field actions, Schouten bracket, holomorphic dual frames,
// and the beta-deformation of a complex structure to type n-2.

#include "nilgc/gcs.hpp"

#include <optional>
#include <vector>

namespace nilgc {

/// b with b = lambda * a for some nonzero lambda; nullopt otherwise (or if either is zero).
std::optional<GaussianRational> projective_factor(const Form& a, const Form& b);
bool projectively_equal(const Form& a, const Form& b);

/// e^B ^ rho for a closed real 2-form B; throws NotClosed (from cohomology.hpp) if dB != 0.
Form b_transform(const Form& rho, const Form& B, const NilAlgebra& g);

/// (1 + i_beta + i_beta^2 / 2 + ...) rho.
Form beta_transform(const Form& rho, const Polyvector& beta);

/// Graded extension of the Lie bracket: on decomposables
/// [X1..Xp, Y1..Yq] = sum (-1)^{i+j} [Xi,Yj] ^ X1..^Xi..Xp ^ Y1..^Yj..Yq.
Polyvector schouten(const Polyvector& p, const Polyvector& q, const NilAlgebra& g);

struct DualFrame {
    std::vector<Form> thetas;
    std::vector<Polyvector> xs;  // theta_j(x_i) = delta_ij, conj(theta_j)(x_i) = 0
};

/// Throws DegenerateSpinor when Omega ^ conj(Omega) = 0.
DualFrame dual_frame(const std::vector<Form>& thetas);

struct LowerTypeResult {
    std::vector<Form> thetas;      // normalized frame
    DualFrame frame;
    Polyvector beta;               // x_{n-1} ^ x_n
    Polyvector beta_bracket;       // [beta, beta]
    Form rho;                      // e^beta Omega
    PureSpinorAnsatz ansatz;       // exp(theta_{n-1} ^ theta_n) theta_1 ... theta_{n-2}
    bool matches_expected = false; // rho projectively equals the ansatz form
    GcsReport report;
};

/// Input must define a complex structure: Omega = theta_1 ^ ... ^ theta_n closed and nondegenerate.
LowerTypeResult complex_to_lower_type(const std::vector<Form>& thetas, const NilAlgebra& g);

}  // namespace nilgc
