#pragma once

// Readers and writers for the compact tuple/form notation and the JSON formats.
//
// Algebra:  (0,0,12,13,14+35)        de_k listed in order, `ij` = e_i^e_j
// Spinor:   (1+i2)(4+i5)exp i(36)     one-forms, then an optional exponential
//           (1+i2)exp(-45+36+i(36+45))
//           (1+2+i3)(5+i4)exp(3+i1)6  `(linsum)digit` = (one-form)^e_digit
// Two-form: 16 + 2 × 34 - 25          bare sum of pairs
//
// Indices are single digits, so the compact forms cover n <= 9. `×` and `*` are
// interchangeable.

#include "nilgc/exterior.hpp"
#include "nilgc/nilalg.hpp"

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace nilgc {

NilAlgebra parse_algebra(std::string_view text);
/// Inverse of parse_algebra for algebras with integer structure constants and n <= 9.
std::string to_compact(const NilAlgebra& g);

/// Parsed spinor text: rho = exp(exponent) ^ thetas[0] ^ ... , or a bare 2-form.
struct CompactSpinor {
    Form exponent;             // complex 2-form B + i omega
    std::vector<Form> thetas;  // complex 1-forms
    bool bare_two_form = false;
    Form two_form;             // set when bare_two_form
};

CompactSpinor parse_compact_spinor(std::string_view text, int dim);

/// Spinor text to its form; a bare two-form is returned as that 2-form.
Form parse_form(std::string_view text, int dim);

/// Real or complex 2-form text such as `35-46` or `2×35+i(36-45)`.
Form parse_two_form(std::string_view text, int dim);

/// Bivector text on d's: `[scalar*](linsum)(linsum)` or a digit-pair sum, e.g. `-1/4*(3-i4)(5-i6)`.
Polyvector parse_bivector(std::string_view text, int dim);

NilAlgebra algebra_from_json(const nlohmann::json& j);
nlohmann::json algebra_to_json(const NilAlgebra& g);
Form form_from_json(const nlohmann::json& j, int dim);
nlohmann::json form_to_json(const Form& a);

}  // namespace nilgc
