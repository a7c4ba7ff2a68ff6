#pragma once

// Exact coefficient rings: Gaussian rationals Q(i) and polynomials over Q(i)
// in named real parameters.

#include <gmpxx.h>

#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace nilgc {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// a + b i with a, b arbitrary-precision rationals, always in lowest terms.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(long value) : re_(value) {}  // NOLINT: implicit from integer literals
    GaussianRational(mpq_class re, mpq_class im = 0);
    static GaussianRational fraction(long num, long den, long im_num = 0, long im_den = 1);
    static GaussianRational i() { return GaussianRational(0, 1); }

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }
    bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

    GaussianRational conj() const { return {re_, -im_}; }
    /// |z|^2, always real.
    mpq_class norm() const { return re_ * re_ + im_ * im_; }
    GaussianRational inverse() const;

    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o) { return *this *= o.inverse(); }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    GaussianRational operator-() const { return {-re_, -im_}; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    /// Text form: `a`, `a/b`, `i`, `-i`, `3i`, `1/2+3/4i`.
    std::string to_string() const;
    static GaussianRational parse(std::string_view text);

private:
    mpq_class re_{0};
    mpq_class im_{0};
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

inline bool is_zero(const GaussianRational& z) { return z.is_zero(); }
inline bool is_unit(const GaussianRational& z) { return !z.is_zero(); }
inline GaussianRational inverse(const GaussianRational& z) { return z.inverse(); }
inline GaussianRational conj(const GaussianRational& z) { return z.conj(); }

/// Polynomial over Q(i) in named parameters. Parameters are treated as real
/// quantities, so conj() conjugates coefficients only.
class ParamPolynomial {
public:
    using Exponents = std::vector<unsigned>;

    ParamPolynomial() = default;
    ParamPolynomial(long value) : ParamPolynomial(GaussianRational(value)) {}  // NOLINT
    ParamPolynomial(const GaussianRational& constant);                         // NOLINT
    static ParamPolynomial variable(const std::string& name);

    const std::vector<std::string>& variables() const { return vars_; }
    const std::map<Exponents, GaussianRational>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Constant term (zero when absent).
    GaussianRational constant_term() const;
    unsigned total_degree() const;

    ParamPolynomial conj() const;
    GaussianRational evaluate(const std::map<std::string, GaussianRational>& at) const;

    ParamPolynomial& operator+=(const ParamPolynomial& o);
    ParamPolynomial& operator-=(const ParamPolynomial& o);
    ParamPolynomial& operator*=(const ParamPolynomial& o);
    ParamPolynomial& operator*=(const GaussianRational& c);

    friend ParamPolynomial operator+(ParamPolynomial a, const ParamPolynomial& b) { return a += b; }
    friend ParamPolynomial operator-(ParamPolynomial a, const ParamPolynomial& b) { return a -= b; }
    friend ParamPolynomial operator*(ParamPolynomial a, const ParamPolynomial& b) { return a *= b; }
    ParamPolynomial operator-() const;

    friend bool operator==(const ParamPolynomial& a, const ParamPolynomial& b) { return (a - b).is_zero(); }

    std::string to_string() const;
    /// Sum of terms `c`, `c*x`, `x^2*y`, `3/2i*z2*k34` ...; identifiers start with a letter other than a bare `i`.
    static ParamPolynomial parse(std::string_view text);

private:
    void align_to(const std::vector<std::string>& vars);
    void add_scaled(const ParamPolynomial& o, int sign);

    std::vector<std::string> vars_;  // sorted
    std::map<Exponents, GaussianRational> terms_;
};

std::ostream& operator<<(std::ostream& os, const ParamPolynomial& p);

inline bool is_zero(const ParamPolynomial& p) { return p.is_zero(); }
/// Only nonzero constants are certifiably invertible everywhere in parameter space.
inline bool is_unit(const ParamPolynomial& p) { return p.is_constant() && !p.is_zero(); }
ParamPolynomial inverse(const ParamPolynomial& p);
inline ParamPolynomial conj(const ParamPolynomial& p) { return p.conj(); }

/// Identically-zero test, exact.
inline bool poly_is_zero(const ParamPolynomial& p) { return p.is_zero(); }

}  // namespace nilgc
