#pragma once

#include "nilgc/exterior.hpp"

#include <random>
#include <vector>

namespace testsupport {

using nilgc::Blade;
using nilgc::Form;
using nilgc::GaussianRational;
using nilgc::Polyvector;

inline GaussianRational random_gaussian(std::mt19937_64& rng, int range = 3, bool allow_imag = true) {
    std::uniform_int_distribution<int> num(-range, range);
    std::uniform_int_distribution<int> den(1, 3);
    const long re = num(rng);
    const long im = allow_imag ? num(rng) : 0;
    return GaussianRational::fraction(re, den(rng), im, den(rng));
}

inline Form random_form(std::mt19937_64& rng, int dim, int max_terms = 6, bool allow_imag = true) {
    std::uniform_int_distribution<std::uint32_t> mask(0, (std::uint32_t{1} << dim) - 1);
    Form f(dim);
    std::uniform_int_distribution<int> count(0, max_terms);
    for (int k = count(rng); k > 0; --k) f.add(Blade(mask(rng)), random_gaussian(rng, 3, allow_imag));
    return f;
}

inline Form random_homogeneous(std::mt19937_64& rng, int dim, int degree, int max_terms = 6, bool allow_imag = true) {
    const auto blades = nilgc::blades_of_grade(dim, degree);
    std::uniform_int_distribution<std::size_t> pick(0, blades.size() - 1);
    std::uniform_int_distribution<int> count(1, max_terms);
    Form f(dim);
    for (int k = count(rng); k > 0; --k) f.add(blades[pick(rng)], random_gaussian(rng, 3, allow_imag));
    return f;
}

inline Polyvector random_vector(std::mt19937_64& rng, int dim, bool allow_imag = true) {
    Polyvector v(dim);
    for (int k = 1; k <= dim; ++k) v.add(Blade::single(k), random_gaussian(rng, 2, allow_imag));
    return v;
}

/// Naive expansion oracle for the wedge of two single blades given as index lists:
/// concatenates and bubble-sorts, counting swaps.
inline std::pair<int, std::vector<int>> naive_wedge(std::vector<int> a, const std::vector<int>& b) {
    a.insert(a.end(), b.begin(), b.end());
    int sign = 1;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j + 1 < a.size() - i; ++j)
            if (a[j] > a[j + 1]) {
                std::swap(a[j], a[j + 1]);
                sign = -sign;
            }
    for (std::size_t j = 0; j + 1 < a.size(); ++j)
        if (a[j] == a[j + 1]) return {0, a};
    return {sign, a};
}

}  // namespace testsupport
