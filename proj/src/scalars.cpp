#include "nilgc/scalars.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace nilgc {

GaussianRational::GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
}

GaussianRational GaussianRational::fraction(long num, long den, long im_num, long im_den) {
    if (den == 0 || im_den == 0) throw std::domain_error("zero denominator");
    return {mpq_class(num, den), mpq_class(im_num, im_den)};
}

GaussianRational GaussianRational::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero Gaussian rational");
    mpq_class n = norm();
    return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    if (o.is_real()) {
        if (sgn(o.re_) == 0) {
            re_ = 0;
            im_ = 0;
            return *this;
        }
        re_ *= o.re_;
        im_ *= o.re_;
        return *this;
    }
    if (is_real()) {
        im_ = re_ * o.im_;
        re_ *= o.re_;
        return *this;
    }
    mpq_class re = re_ * o.re_ - im_ * o.im_;
    mpq_class im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

std::string GaussianRational::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    if (sgn(re_) != 0) out = re_.get_str();
    if (sgn(im_) != 0) {
        mpq_class mag = abs(im_);
        if (sgn(im_) < 0)
            out += "-";
        else if (!out.empty())
            out += "+";
        if (mag != 1) out += mag.get_str();
        out += "i";
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.to_string(); }

namespace {

std::string strip_spaces(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    return s;
}

// Reads `digits[/digits]` at pos; returns false if no digit present.
bool read_rational(const std::string& s, size_t& pos, mpq_class& out) {
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) return false;
    std::string text = s.substr(start, pos - start);
    if (pos < s.size() && s[pos] == '/') {
        size_t den_start = ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == den_start) throw ParseError("missing denominator in scalar '" + s + "'");
        std::string den = s.substr(den_start, pos - den_start);
        if (mpz_class(den) == 0) throw ParseError("zero denominator in scalar '" + s + "'");
        text += "/" + den;
    }
    out = mpq_class(text);
    out.canonicalize();
    return true;
}

}  // namespace

GaussianRational GaussianRational::parse(std::string_view text) {
    const std::string s = strip_spaces(text);
    if (s.empty()) throw ParseError("empty scalar");
    mpq_class re = 0, im = 0;
    bool have_re = false, have_im = false;
    size_t pos = 0;
    while (pos < s.size()) {
        int sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            sign = s[pos] == '-' ? -1 : 1;
            ++pos;
        } else if (pos != 0) {
            throw ParseError("expected sign in scalar '" + s + "'");
        }
        mpq_class value = 1;
        bool has_number = read_rational(s, pos, value);
        bool imaginary = pos < s.size() && s[pos] == 'i';
        if (imaginary) ++pos;
        if (!has_number && !imaginary) throw ParseError("malformed scalar '" + s + "'");
        if (imaginary) {
            if (have_im) throw ParseError("repeated imaginary part in '" + s + "'");
            have_im = true;
            im = sign * value;
        } else {
            if (have_re) throw ParseError("repeated real part in '" + s + "'");
            have_re = true;
            re = sign * value;
        }
    }
    return {re, im};
}

// ---------------------------------------------------------------------------

ParamPolynomial::ParamPolynomial(const GaussianRational& constant) {
    if (!constant.is_zero()) terms_.emplace(Exponents{}, constant);
}

ParamPolynomial ParamPolynomial::variable(const std::string& name) {
    if (name.empty()) throw std::invalid_argument("empty parameter name");
    ParamPolynomial p;
    p.vars_ = {name};
    p.terms_.emplace(Exponents{1}, GaussianRational(1));
    return p;
}

bool ParamPolynomial::is_constant() const {
    for (const auto& [exps, c] : terms_)
        if (std::any_of(exps.begin(), exps.end(), [](unsigned e) { return e != 0; })) return false;
    return true;
}

GaussianRational ParamPolynomial::constant_term() const {
    for (const auto& [exps, c] : terms_)
        if (std::all_of(exps.begin(), exps.end(), [](unsigned e) { return e == 0; })) return c;
    return {};
}

unsigned ParamPolynomial::total_degree() const {
    unsigned best = 0;
    for (const auto& [exps, c] : terms_) {
        unsigned deg = 0;
        for (unsigned e : exps) deg += e;
        best = std::max(best, deg);
    }
    return best;
}

ParamPolynomial ParamPolynomial::conj() const {
    ParamPolynomial out = *this;
    for (auto& [exps, c] : out.terms_) c = c.conj();
    return out;
}

GaussianRational ParamPolynomial::evaluate(const std::map<std::string, GaussianRational>& at) const {
    std::vector<GaussianRational> values;
    values.reserve(vars_.size());
    for (const auto& v : vars_) {
        auto it = at.find(v);
        if (it == at.end()) throw std::invalid_argument("no value for parameter '" + v + "'");
        values.push_back(it->second);
    }
    GaussianRational total;
    for (const auto& [exps, c] : terms_) {
        GaussianRational term = c;
        for (size_t k = 0; k < exps.size(); ++k)
            for (unsigned e = 0; e < exps[k]; ++e) term *= values[k];
        total += term;
    }
    return total;
}

void ParamPolynomial::align_to(const std::vector<std::string>& vars) {
    if (vars == vars_) return;
    std::vector<size_t> where(vars_.size());
    for (size_t k = 0; k < vars_.size(); ++k)
        where[k] = static_cast<size_t>(std::lower_bound(vars.begin(), vars.end(), vars_[k]) - vars.begin());
    std::map<Exponents, GaussianRational> remapped;
    for (auto& [exps, c] : terms_) {
        Exponents e(vars.size(), 0);
        for (size_t k = 0; k < exps.size(); ++k) e[where[k]] = exps[k];
        remapped.emplace(std::move(e), std::move(c));
    }
    terms_ = std::move(remapped);
    vars_ = vars;
}

void ParamPolynomial::add_scaled(const ParamPolynomial& o, int sign) {
    if (o.is_zero()) return;
    ParamPolynomial other = o;
    if (other.vars_ != vars_) {
        std::vector<std::string> merged;
        std::set_union(vars_.begin(), vars_.end(), other.vars_.begin(), other.vars_.end(),
                       std::back_inserter(merged));
        align_to(merged);
        other.align_to(merged);
    }
    for (auto& [exps, c] : other.terms_) {
        auto it = terms_.find(exps);
        if (it == terms_.end()) {
            terms_.emplace(exps, sign > 0 ? c : -c);
            continue;
        }
        if (sign > 0)
            it->second += c;
        else
            it->second -= c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

ParamPolynomial& ParamPolynomial::operator+=(const ParamPolynomial& o) {
    add_scaled(o, 1);
    return *this;
}

ParamPolynomial& ParamPolynomial::operator-=(const ParamPolynomial& o) {
    add_scaled(o, -1);
    return *this;
}

ParamPolynomial& ParamPolynomial::operator*=(const GaussianRational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [exps, coeff] : terms_) coeff *= c;
    return *this;
}

ParamPolynomial& ParamPolynomial::operator*=(const ParamPolynomial& o) {
    if (is_zero() || o.is_zero()) {
        terms_.clear();
        return *this;
    }
    ParamPolynomial other = o;
    if (other.vars_ != vars_) {
        std::vector<std::string> merged;
        std::set_union(vars_.begin(), vars_.end(), other.vars_.begin(), other.vars_.end(),
                       std::back_inserter(merged));
        align_to(merged);
        other.align_to(merged);
    }
    std::map<Exponents, GaussianRational> product;
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : other.terms_) {
            Exponents e(ea.size());
            for (size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
            auto [it, inserted] = product.try_emplace(std::move(e));
            it->second += ca * cb;
        }
    }
    std::erase_if(product, [](const auto& kv) { return kv.second.is_zero(); });
    terms_ = std::move(product);
    return *this;
}

ParamPolynomial ParamPolynomial::operator-() const {
    ParamPolynomial out = *this;
    for (auto& [exps, c] : out.terms_) c = -c;
    return out;
}

std::string ParamPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Higher total degree first reads more naturally.
    std::vector<std::pair<Exponents, GaussianRational>> ordered(terms_.begin(), terms_.end());
    std::stable_sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
        unsigned da = 0, db = 0;
        for (unsigned e : a.first) da += e;
        for (unsigned e : b.first) db += e;
        return da > db;
    });
    for (const auto& [exps, c] : ordered) {
        std::string monomial;
        for (size_t k = 0; k < exps.size(); ++k) {
            if (exps[k] == 0) continue;
            if (!monomial.empty()) monomial += "*";
            monomial += vars_[k];
            if (exps[k] > 1) monomial += "^" + std::to_string(exps[k]);
        }
        std::string coeff;
        bool negative = false;
        if (c.is_real()) {
            negative = sgn(c.re()) < 0;
            mpq_class mag = abs(c.re());
            if (!(mag == 1 && !monomial.empty())) coeff = mag.get_str();
        } else if (sgn(c.re()) == 0) {
            negative = sgn(c.im()) < 0;
            mpq_class mag = abs(c.im());
            coeff = (mag == 1 ? std::string() : mag.get_str()) + "i";
        } else {
            coeff = "(" + c.to_string() + ")";
        }
        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        os << coeff;
        if (!coeff.empty() && !monomial.empty()) os << "*";
        os << monomial;
        first = false;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const ParamPolynomial& p) { return os << p.to_string(); }

ParamPolynomial inverse(const ParamPolynomial& p) {
    if (!is_unit(p)) throw std::domain_error("polynomial is not a certified unit: " + p.to_string());
    return ParamPolynomial(p.constant_term().inverse());
}

ParamPolynomial ParamPolynomial::parse(std::string_view text) {
    const std::string s = strip_spaces(text);
    if (s.empty()) throw ParseError("empty polynomial");
    auto is_ident_char = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };
    ParamPolynomial total;
    size_t pos = 0;
    while (pos < s.size()) {
        int sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            sign = s[pos] == '-' ? -1 : 1;
            ++pos;
        } else if (pos != 0) {
            throw ParseError("expected '+' or '-' in polynomial '" + s + "'");
        }
        ParamPolynomial term(sign);
        bool need_factor = true;
        while (need_factor) {
            if (pos >= s.size()) throw ParseError("dangling operator in polynomial '" + s + "'");
            mpq_class value = 1;
            if (read_rational(s, pos, value)) {
                bool imaginary = pos < s.size() && s[pos] == 'i' && (pos + 1 >= s.size() || !is_ident_char(s[pos + 1]));
                if (imaginary) ++pos;
                term *= imaginary ? GaussianRational(0, value) : GaussianRational(value);
            } else if (s[pos] == 'i' && (pos + 1 >= s.size() || !is_ident_char(s[pos + 1]))) {
                ++pos;
                term *= GaussianRational::i();
            } else if (std::isalpha(static_cast<unsigned char>(s[pos]))) {
                size_t start = pos;
                while (pos < s.size() && is_ident_char(s[pos])) ++pos;
                ParamPolynomial factor = variable(s.substr(start, pos - start));
                unsigned power = 1;
                if (pos < s.size() && s[pos] == '^') {
                    size_t exp_start = ++pos;
                    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
                    if (pos == exp_start) throw ParseError("missing exponent in polynomial '" + s + "'");
                    power = static_cast<unsigned>(std::stoul(s.substr(exp_start, pos - exp_start)));
                }
                for (unsigned k = 0; k < power; ++k) term *= factor;
            } else {
                throw ParseError("unexpected character '" + std::string(1, s[pos]) + "' in polynomial '" + s + "'");
            }
            need_factor = pos < s.size() && s[pos] == '*';
            if (need_factor) ++pos;
        }
        total += term;
    }
    return total;
}

}  // namespace nilgc
