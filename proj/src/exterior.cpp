#include "nilgc/exterior.hpp"

#include <algorithm>
#include <sstream>

namespace nilgc {

std::pair<int, Blade> Blade::from_indices(const std::vector<int>& indices) {
    std::uint32_t mask = 0;
    int inversions = 0;
    for (std::size_t a = 0; a < indices.size(); ++a) {
        const int k = indices[a];
        if (k < 1 || k > kMaxDimension) throw std::out_of_range("blade index " + std::to_string(k));
        if (mask & (std::uint32_t{1} << (k - 1))) return {0, Blade{}};
        mask |= std::uint32_t{1} << (k - 1);
        for (std::size_t b = a + 1; b < indices.size(); ++b)
            if (indices[b] < k) ++inversions;
    }
    return {inversions % 2 == 0 ? 1 : -1, Blade(mask)};
}

std::vector<int> Blade::indices() const {
    std::vector<int> out;
    for (std::uint32_t m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
    return out;
}

std::string Blade::to_string() const {
    std::string s;
    for (int k : indices()) s += std::to_string(k);
    return s;
}

int wedge_sign(Blade a, Blade b) {
    if (a.mask() & b.mask()) return 0;
    int swaps = 0;
    for (std::uint32_t m = b.mask(); m != 0; m &= m - 1) {
        const int j = std::countr_zero(m);
        swaps += std::popcount(a.mask() >> (j + 1));
    }
    return swaps % 2 == 0 ? 1 : -1;
}

std::pair<int, Blade> contract_index(int j, Blade b) {
    if (!b.contains(j)) return {0, b};
    const std::uint32_t bit = std::uint32_t{1} << (j - 1);
    const int before = std::popcount(b.mask() & (bit - 1));
    return {before % 2 == 0 ? 1 : -1, Blade(b.mask() ^ bit)};
}

GaussianRational evaluate(const Form& a, const Polyvector& v) {
    a.check_same(Form(v.dim()));
    GaussianRational total;
    for (const auto& [bv, cv] : v.terms()) total += cv * a.coefficient(bv);
    // e_{i1..ip}(d_{i1},...,d_{ip}) = 1 matches i_{d_ip} ... i_{d_i1} e_{i1..ip} = 1, so the
    // coefficient pairing is exactly the contraction in our order.
    return total;
}

GeneralizedSection::GeneralizedSection(Polyvector v, Form c) : vec(std::move(v)), cov(std::move(c)) {
    if (vec.dim() != cov.dim()) throw DimensionMismatch("section parts have different dimensions");
    for (const auto& [b, x] : vec.terms())
        if (b.grade() != 1) throw std::invalid_argument("section vector part must have degree 1");
    for (const auto& [b, x] : cov.terms())
        if (b.grade() != 1) throw std::invalid_argument("section covector part must have degree 1");
}

std::vector<GaussianRational> GeneralizedSection::coordinates() const {
    const int n = dim();
    std::vector<GaussianRational> out(2 * n);
    for (int k = 1; k <= n; ++k) {
        out[k - 1] = vec.coefficient(Blade::single(k));
        out[n + k - 1] = cov.coefficient(Blade::single(k));
    }
    return out;
}

GeneralizedSection GeneralizedSection::from_coordinates(int dim, const std::vector<GaussianRational>& coords) {
    if (coords.size() != static_cast<std::size_t>(2 * dim)) throw std::invalid_argument("section coordinate length");
    Polyvector v(dim);
    Form c(dim);
    for (int k = 1; k <= dim; ++k) {
        v.add(Blade::single(k), coords[k - 1]);
        c.add(Blade::single(k), coords[dim + k - 1]);
    }
    return {std::move(v), std::move(c)};
}

Form clifford_act(const GeneralizedSection& s, const Form& a) {
    if (s.dim() != a.dim()) throw DimensionMismatch("clifford_act: dimension mismatch");
    return interior(s.vec, a) + wedge(s.cov, a);
}

GaussianRational inner_product(const GeneralizedSection& s, const GeneralizedSection& t) {
    if (s.dim() != t.dim()) throw DimensionMismatch("inner_product: dimension mismatch");
    GaussianRational sum;
    for (int k = 1; k <= s.dim(); ++k) {
        const Blade b = Blade::single(k);
        sum += s.cov.coefficient(b) * t.vec.coefficient(b);
        sum += t.cov.coefficient(b) * s.vec.coefficient(b);
    }
    return sum * GaussianRational::fraction(1, 2);
}

Form real_part(const Form& a) {
    Form out(a.dim());
    for (const auto& [b, c] : a.terms()) out.add(b, GaussianRational(c.re()));
    return out;
}

Form imag_part(const Form& a) {
    Form out(a.dim());
    for (const auto& [b, c] : a.terms()) out.add(b, GaussianRational(c.im()));
    return out;
}

namespace {

template <class R>
std::string render(const std::map<Blade, R>& terms, const char* unit, const char* sep, auto&& coeff_text) {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [b, c] : terms) {
        std::string ct = coeff_text(c);
        std::string name;
        if (!b.empty()) {
            name = unit;
            auto idx = b.indices();
            for (std::size_t k = 0; k < idx.size(); ++k) {
                if (k > 0 && sep[0] != '\0') name += std::string(sep) + unit;
                name += std::to_string(idx[k]);
            }
        }
        bool negative = !ct.empty() && ct[0] == '-' && ct.find_first_of("+-", 1) == std::string::npos;
        if (negative) ct = ct.substr(1);
        bool compound = ct.find_first_of("+-", 1) != std::string::npos;
        if (compound) ct = "(" + ct + ")";
        if (!name.empty() && ct == "1") ct.clear();
        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        os << ct;
        if (!ct.empty() && !name.empty()) os << (ct.back() == 'i' || ct.back() == ')' ? "" : "*");
        os << name;
        first = false;
    }
    return os.str();
}

}  // namespace

std::string to_string(const Form& a) {
    return render(a.terms(), "e", "", [](const GaussianRational& c) { return c.to_string(); });
}

std::string to_string(const Polyvector& v) {
    return render(v.terms(), "d", "^", [](const GaussianRational& c) { return c.to_string(); });
}

std::string to_string(const PolyForm& a) {
    return render(a.terms(), "e", "", [](const ParamPolynomial& c) {
        std::string s = c.to_string();
        return c.terms().size() > 1 ? "(" + s + ")" : s;
    });
}

std::string to_string(const GeneralizedSection& s) {
    return to_string(s.vec) + " + (" + to_string(s.cov) + ")";
}

std::vector<Blade> blades_of_grade(int dim, int k) {
    std::vector<Blade> out;
    if (k < 0 || k > dim) return out;
    // Gosper's hack over dim-bit masks, then sort in Blade order.
    if (k == 0) return {Blade{}};
    std::uint32_t m = (std::uint32_t{1} << k) - 1;
    const std::uint32_t limit = std::uint32_t{1} << dim;
    while (m < limit) {
        out.emplace_back(m);
        const std::uint32_t c = m & (~m + 1);
        const std::uint32_t r = m + c;
        m = (((r ^ m) >> 2) / c) | r;
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace nilgc
