#pragma once

// Exterior and Clifford algebra on a fixed n-dimensional basis e_1..e_n of
// invariant 1-forms, with dual vectors d_1..d_n.
//
// Conventions:
//   * blades are stored sorted; building one from an index list moves the
//     sorting-permutation sign into the coefficient;
//   * i_{X^Y} = i_Y o i_X, extended to i_{X1^...^Xp} = i_Xp o ... o i_X1;
//   * e_ij(d_i, d_j) = 1 (no 1/2);
//   * the Mukai pairing applies the reversal sigma to its first argument.

#include "nilgc/scalars.hpp"

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nilgc {

class DimensionMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline constexpr int kMaxDimension = 30;

/// Strictly increasing index set in 1..n, stored as a bitmask (bit k-1 <-> index k).
class Blade {
public:
    constexpr Blade() = default;
    constexpr explicit Blade(std::uint32_t mask) : mask_(mask) {}

    /// Sorts `indices`; returns the permutation parity (+1/-1), or 0 on a repeated index.
    static std::pair<int, Blade> from_indices(const std::vector<int>& indices);
    static constexpr Blade single(int index) { return Blade(std::uint32_t{1} << (index - 1)); }

    constexpr std::uint32_t mask() const { return mask_; }
    constexpr int grade() const { return std::popcount(mask_); }
    constexpr bool contains(int index) const { return (mask_ >> (index - 1)) & 1u; }
    constexpr bool empty() const { return mask_ == 0; }
    std::vector<int> indices() const;
    /// Largest index present, 0 for the empty blade.
    constexpr int max_index() const { return mask_ == 0 ? 0 : 32 - std::countl_zero(mask_); }

    friend constexpr bool operator==(Blade a, Blade b) { return a.mask_ == b.mask_; }
    /// Grade first, then lexicographic on the sorted index lists.
    friend constexpr bool operator<(Blade a, Blade b) {
        if (a.grade() != b.grade()) return a.grade() < b.grade();
        const std::uint32_t diff = a.mask_ ^ b.mask_;
        if (diff == 0) return false;
        const std::uint32_t lowest = diff & (~diff + 1);
        return (a.mask_ & lowest) != 0;
    }

    std::string to_string() const;

private:
    std::uint32_t mask_ = 0;
};

/// Sign of blade(a) ^ blade(b) relative to blade(a|b); 0 if they share an index.
int wedge_sign(Blade a, Blade b);

struct FormTag {};
struct VectorTag {};

/// Sparse element of the exterior algebra over a coefficient ring R.
/// Tag distinguishes forms (blades of e's) from polyvectors (blades of d's).
template <class R, class Tag>
class Multivector {
public:
    using Ring = R;
    using Terms = std::map<Blade, R>;

    Multivector() = default;
    explicit Multivector(int dim) : dim_(dim) {
        if (dim < 0 || dim > kMaxDimension) throw std::invalid_argument("unsupported dimension " + std::to_string(dim));
    }

    static Multivector scalar(int dim, const R& c) {
        Multivector m(dim);
        m.add(Blade{}, c);
        return m;
    }
    /// Blade from an index list, sign carried into the coefficient.
    static Multivector basis(int dim, const std::vector<int>& indices, const R& c = R(1)) {
        Multivector m(dim);
        for (int k : indices)
            if (k < 1 || k > dim) throw std::out_of_range("index " + std::to_string(k) + " outside 1.." + std::to_string(dim));
        auto [sign, blade] = Blade::from_indices(indices);
        if (sign != 0) m.add(blade, sign > 0 ? c : -c);
        return m;
    }
    static Multivector generator(int dim, int index, const R& c = R(1)) { return basis(dim, {index}, c); }

    int dim() const { return dim_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    R coefficient(Blade b) const {
        auto it = terms_.find(b);
        return it == terms_.end() ? R{} : it->second;
    }

    void add(Blade b, const R& c) {
        if (nilgc::is_zero(c)) return;
        if (b.max_index() > dim_) throw std::out_of_range("blade " + b.to_string() + " outside dimension");
        auto [it, inserted] = terms_.try_emplace(b, c);
        if (inserted) return;
        it->second += c;
        if (nilgc::is_zero(it->second)) terms_.erase(it);
    }

    Multivector grade(int k) const {
        Multivector out(dim_);
        for (const auto& [b, c] : terms_)
            if (b.grade() == k) out.terms_.emplace(b, c);
        return out;
    }
    std::optional<int> lowest_degree() const {
        std::optional<int> best;
        for (const auto& [b, c] : terms_)
            if (!best || b.grade() < *best) best = b.grade();
        return best;
    }
    std::optional<int> highest_degree() const {
        std::optional<int> best;
        for (const auto& [b, c] : terms_)
            if (!best || b.grade() > *best) best = b.grade();
        return best;
    }
    /// Degree when homogeneous and nonzero.
    std::optional<int> pure_degree() const {
        auto lo = lowest_degree();
        return lo && lo == highest_degree() ? lo : std::nullopt;
    }

    Multivector conj() const {
        Multivector out(dim_);
        for (const auto& [b, c] : terms_) out.terms_.emplace(b, nilgc::conj(c));
        return out;
    }

    bool is_real() const
        requires std::is_same_v<R, GaussianRational>
    {
        for (const auto& [b, c] : terms_)
            if (!c.is_real()) return false;
        return true;
    }

    Multivector& operator+=(const Multivector& o) {
        check_same(o);
        for (const auto& [b, c] : o.terms_) add(b, c);
        return *this;
    }
    Multivector& operator-=(const Multivector& o) {
        check_same(o);
        for (const auto& [b, c] : o.terms_) add(b, -c);
        return *this;
    }
    Multivector& operator*=(const R& s) {
        if (nilgc::is_zero(s)) {
            terms_.clear();
            return *this;
        }
        for (auto& [b, c] : terms_) c = c * s;
        return *this;
    }
    friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
    friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
    friend Multivector operator*(const R& s, Multivector a) { return a *= s; }
    friend Multivector operator*(Multivector a, const R& s) { return a *= s; }
    Multivector operator-() const {
        Multivector out = *this;
        for (auto& [b, c] : out.terms_) c = -c;
        return out;
    }

    friend bool operator==(const Multivector& a, const Multivector& b) {
        return a.dim_ == b.dim_ && a.terms_ == b.terms_;
    }

    void check_same(const Multivector& o) const {
        if (o.dim_ != dim_)
            throw DimensionMismatch("dimension mismatch: " + std::to_string(dim_) + " vs " + std::to_string(o.dim_));
    }

private:
    int dim_ = 0;
    Terms terms_;
};

template <class R>
using BasicForm = Multivector<R, FormTag>;
template <class R>
using BasicPolyvector = Multivector<R, VectorTag>;

using Form = BasicForm<GaussianRational>;
using Polyvector = BasicPolyvector<GaussianRational>;
using PolyForm = BasicForm<ParamPolynomial>;

/// X + xi in (T + T*) (x) C, both parts of degree at most 1.
struct GeneralizedSection {
    Polyvector vec;
    Form cov;

    GeneralizedSection() = default;
    GeneralizedSection(Polyvector v, Form c);
    static GeneralizedSection zero(int dim) { return {Polyvector(dim), Form(dim)}; }

    int dim() const { return vec.dim(); }
    bool is_zero() const { return vec.is_zero() && cov.is_zero(); }

    GeneralizedSection operator+(const GeneralizedSection& o) const { return {vec + o.vec, cov + o.cov}; }
    GeneralizedSection operator-(const GeneralizedSection& o) const { return {vec - o.vec, cov - o.cov}; }
    friend GeneralizedSection operator*(const GaussianRational& s, const GeneralizedSection& x) {
        return {s * x.vec, s * x.cov};
    }
    GeneralizedSection conj() const { return {vec.conj(), cov.conj()}; }
    friend bool operator==(const GeneralizedSection&, const GeneralizedSection&) = default;

    /// Coordinates (X^1..X^n, xi_1..xi_n).
    std::vector<GaussianRational> coordinates() const;
    static GeneralizedSection from_coordinates(int dim, const std::vector<GaussianRational>& coords);
};

// ---------------------------------------------------------------------------
// Core operations

template <class R, class Tag>
Multivector<R, Tag> wedge(const Multivector<R, Tag>& a, const Multivector<R, Tag>& b) {
    a.check_same(b);
    Multivector<R, Tag> out(a.dim());
    for (const auto& [ba, ca] : a.terms()) {
        for (const auto& [bb, cb] : b.terms()) {
            const int sign = wedge_sign(ba, bb);
            if (sign == 0) continue;
            R c = ca * cb;
            out.add(Blade(ba.mask() | bb.mask()), sign > 0 ? c : -c);
        }
    }
    return out;
}

/// Wedge of a list; the empty product is 1.
template <class R, class Tag>
Multivector<R, Tag> wedge_all(int dim, const std::vector<Multivector<R, Tag>>& factors) {
    auto out = Multivector<R, Tag>::scalar(dim, R(1));
    for (const auto& f : factors) out = wedge(out, f);
    return out;
}

/// Finite wedge exponential sum_m a^m / m! for an even form a.
template <class R, class Tag>
Multivector<R, Tag> wedge_exp(const Multivector<R, Tag>& a) {
    for (const auto& [b, c] : a.terms())
        if (b.grade() % 2 != 0 || b.grade() == 0) throw std::invalid_argument("wedge_exp needs an even form without constant part");
    auto out = Multivector<R, Tag>::scalar(a.dim(), R(1));
    auto power = out;
    for (long m = 1; m <= a.dim(); ++m) {
        power = wedge(power, a);
        if (power.is_zero()) break;
        power *= R(GaussianRational::fraction(1, m));
        out += power;
    }
    return out;
}

/// Contraction of a single d_j into a blade: returns (sign, remaining blade); sign 0 if j absent.
std::pair<int, Blade> contract_index(int j, Blade b);

/// Interior product i_v a; degree-1 v is an antiderivation, higher blades contract in index order.
template <class R>
BasicForm<R> interior(const BasicPolyvector<R>& v, const BasicForm<R>& a) {
    if (v.dim() != a.dim()) throw DimensionMismatch("interior: dimension mismatch");
    BasicForm<R> out(a.dim());
    for (const auto& [bv, cv] : v.terms()) {
        const auto idx = bv.indices();
        for (const auto& [ba, ca] : a.terms()) {
            if ((bv.mask() & ba.mask()) != bv.mask()) continue;
            int sign = 1;
            Blade rest = ba;
            for (int j : idx) {
                auto [s, r] = contract_index(j, rest);
                sign *= s;
                rest = r;
            }
            R c = cv * ca;
            out.add(rest, sign > 0 ? c : -c);
        }
    }
    return out;
}

/// Evaluation of a form on a polyvector of the same degree (e_ij(d_i, d_j) = 1).
GaussianRational evaluate(const Form& a, const Polyvector& v);

Form clifford_act(const GeneralizedSection& s, const Form& a);
GaussianRational inner_product(const GeneralizedSection& s, const GeneralizedSection& t);

/// Reversal sigma: grade-k part times (-1)^{k(k-1)/2}.
template <class R, class Tag>
Multivector<R, Tag> reversal(const Multivector<R, Tag>& a) {
    Multivector<R, Tag> out(a.dim());
    for (const auto& [b, c] : a.terms()) {
        const int k = b.grade();
        out.add(b, (k * (k - 1) / 2) % 2 == 0 ? c : -c);
    }
    return out;
}

/// Coefficient of e_{1..2n} in sigma(a) ^ b.
template <class R>
R mukai_pair(const BasicForm<R>& a, const BasicForm<R>& b) {
    if (a.dim() % 2 != 0) throw std::invalid_argument("Mukai pairing needs an even ambient dimension");
    a.check_same(b);
    const Blade top((a.dim() == 32) ? ~std::uint32_t{0} : ((std::uint32_t{1} << a.dim()) - 1));
    R total{};
    for (const auto& [ba, ca] : a.terms()) {
        const std::uint32_t need = top.mask() ^ ba.mask();
        const R cb = b.coefficient(Blade(need));
        if (nilgc::is_zero(cb) || (ba.mask() & need) != 0) continue;
        const int k = ba.grade();
        int sign = wedge_sign(ba, Blade(need));
        if ((k * (k - 1) / 2) % 2 != 0) sign = -sign;
        R term = ca * cb;
        total += sign > 0 ? term : -term;
    }
    return total;
}

/// Coefficient of the top blade e_{1..n}.
template <class R, class Tag>
R top_coefficient(const Multivector<R, Tag>& a) {
    const Blade top((std::uint32_t{1} << a.dim()) - 1);
    return a.coefficient(top);
}

/// Real and imaginary parts (coefficientwise).
Form real_part(const Form& a);
Form imag_part(const Form& a);

/// Lift of a Gaussian-rational form into the polynomial ring.
template <class Tag>
Multivector<ParamPolynomial, Tag> lift(const Multivector<GaussianRational, Tag>& a) {
    Multivector<ParamPolynomial, Tag> out(a.dim());
    for (const auto& [b, c] : a.terms()) out.add(b, ParamPolynomial(c));
    return out;
}

/// Text rendering: `e1+ie2`, `-2i e12`, `1/2 d1^d2` style.
std::string to_string(const Form& a);
std::string to_string(const Polyvector& v);
std::string to_string(const PolyForm& a);
std::string to_string(const GeneralizedSection& s);

/// Coefficient vector over all blades of grade k, in Blade order.
std::vector<Blade> blades_of_grade(int dim, int k);

}  // namespace nilgc
