#include "nilgc/notation.hpp"

#include <cctype>
#include <optional>

namespace nilgc {

namespace {

class Cursor {
public:
    Cursor(std::string_view text, const char* what) : s_(text), what_(what) {}

    std::size_t pos() const { return pos_; }
    void reset(std::size_t p) { pos_ = p; }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool at_end() {
        skip();
        return pos_ >= s_.size();
    }
    char peek() {
        skip();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    bool accept(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }
    bool accept(std::string_view word) {
        skip();
        if (s_.substr(pos_, word.size()) != word) return false;
        pos_ += word.size();
        return true;
    }
    bool accept_times() { return accept('*') || accept("\xC3\x97"); }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }
    /// +1 / -1 if a sign is present.
    std::optional<int> sign() {
        if (accept('+')) return 1;
        if (accept('-')) return -1;
        return std::nullopt;
    }
    std::string digits() {
        skip();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        return std::string(s_.substr(start, pos_ - start));
    }
    bool next_is_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(std::string(what_) + " '" + std::string(s_) + "': " + msg + " at offset " + std::to_string(pos_));
    }

private:
    std::string_view s_;
    const char* what_;
    std::size_t pos_ = 0;
};

int index_of(Cursor& c, char digit, int dim) {
    const int k = digit - '0';
    if (k < 1 || k > dim) c.fail("index " + std::string(1, digit) + " outside 1.." + std::to_string(dim));
    return k;
}

// [int ×] [i] <width digits>; returns coefficient * blade.
Form indexed_term(Cursor& c, int dim, int width, bool allow_i) {
    GaussianRational coeff = 1;
    std::string run = c.digits();
    if (!run.empty() && c.accept_times()) {
        coeff = GaussianRational(std::stol(run));
        run.clear();
    }
    if (run.empty()) {
        if (allow_i && c.accept('i')) coeff *= GaussianRational::i();
        run = c.digits();
    }
    if (static_cast<int>(run.size()) != width)
        c.fail(width == 1 ? "expected a single index digit" : "expected an index pair");
    std::vector<int> idx;
    for (char ch : run) idx.push_back(index_of(c, ch, dim));
    auto [sign, blade] = Blade::from_indices(idx);
    if (sign == 0) c.fail("repeated index in '" + run + "'");
    Form f(dim);
    f.add(blade, sign > 0 ? coeff : -coeff);
    return f;
}

template <class Term>
Form signed_sum(Cursor& c, int dim, Term&& term) {
    Form total(dim);
    int s = c.sign().value_or(1);
    while (true) {
        Form t = term();
        total += s > 0 ? t : -t;
        auto next = c.sign();
        if (!next) break;
        s = *next;
    }
    return total;
}

Form linsum(Cursor& c, int dim) {
    return signed_sum(c, dim, [&] { return indexed_term(c, dim, 1, true); });
}

Form twoform(Cursor& c, int dim) {
    return signed_sum(c, dim, [&] { return indexed_term(c, dim, 2, true); });
}

Form oneform(Cursor& c, int dim) {
    c.expect('(');
    Form f = linsum(c, dim);
    c.expect(')');
    return f;
}

// (linsum) digit  ->  (one-form) ^ e_digit
Form product_term(Cursor& c, int dim) {
    Form left = oneform(c, dim);
    const std::string run = c.digits();
    if (run.size() != 1) c.fail("expected a single digit after the one-form group");
    return wedge(left, Form::generator(dim, index_of(c, run[0], dim)));
}

Form mixedsum(Cursor& c, int dim) {
    return signed_sum(c, dim, [&]() -> Form {
        const std::size_t save = c.pos();
        if (c.accept('i') && c.peek() == '(') {
            c.expect('(');
            Form inner = twoform(c, dim);
            c.expect(')');
            return GaussianRational::i() * inner;
        }
        c.reset(save);
        if (c.peek() == '(') return product_term(c, dim);
        return indexed_term(c, dim, 2, true);
    });
}

Form exparg(Cursor& c, int dim) {
    if (c.accept('i')) {
        c.expect('(');
        Form inner = twoform(c, dim);
        c.expect(')');
        return GaussianRational::i() * inner;
    }
    if (c.peek() != '(') c.fail("expected '(' or 'i(' after exp");
    const std::size_t save = c.pos();
    try {
        return product_term(c, dim);
    } catch (const ParseError&) {
        c.reset(save);
    }
    c.expect('(');
    Form inner = mixedsum(c, dim);
    c.expect(')');
    return inner;
}

Form entry(Cursor& c, int dim) {
    const std::size_t save = c.pos();
    if (c.digits() == "0" && (c.peek() == ',' || c.peek() == ')')) return Form(dim);
    c.reset(save);
    return signed_sum(c, dim, [&] { return indexed_term(c, dim, 2, false); });
}

}  // namespace

NilAlgebra parse_algebra(std::string_view text) {
    // First pass counts entries so that indices can be range-checked against n.
    int dim = 1;
    int depth = 0;
    for (char ch : text) {
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        if (ch == ',' && depth == 1) ++dim;
    }
    if (dim > 9) throw ParseError("compact notation supports at most 9 generators; use the JSON format");
    Cursor c(text, "algebra");
    c.expect('(');
    std::vector<Form> ds;
    do {
        ds.push_back(entry(c, dim));
    } while (c.accept(','));
    c.expect(')');
    if (!c.at_end()) c.fail("trailing characters");
    const int n = static_cast<int>(ds.size());
    return NilAlgebra(n, std::move(ds));
}

std::string to_compact(const NilAlgebra& g) {
    if (g.dim() > 9) throw std::invalid_argument("compact notation needs n <= 9");
    std::string out = "(";
    for (int k = 1; k <= g.dim(); ++k) {
        if (k > 1) out += ",";
        const Form& de = g.d_generator(k);
        if (de.is_zero()) {
            out += "0";
            continue;
        }
        bool first = true;
        for (const auto& [b, c] : de.terms()) {
            if (!c.is_real() || c.re().get_den() != 1)
                throw std::invalid_argument("compact notation needs integer structure constants");
            mpz_class v = c.re().get_num();
            if (v < 0)
                out += "-";
            else if (!first)
                out += "+";
            mpz_class mag = abs(v);
            if (mag != 1) out += mag.get_str() + "*";
            out += b.to_string();
            first = false;
        }
    }
    return out + ")";
}

CompactSpinor parse_compact_spinor(std::string_view text, int dim) {
    if (dim > 9) throw ParseError("compact notation supports at most 9 generators");
    Cursor c(text, "form");
    CompactSpinor out;
    out.exponent = Form(dim);
    const char first = c.peek();
    if (first == '(' || first == 'e') {
        while (c.peek() == '(') out.thetas.push_back(oneform(c, dim));
        if (c.accept("exp")) out.exponent = exparg(c, dim);
        if (out.thetas.empty() && out.exponent.is_zero() && c.pos() == 0) c.fail("empty spinor");
    } else {
        out.bare_two_form = true;
        out.two_form = twoform(c, dim);
    }
    if (!c.at_end()) c.fail("trailing characters");
    return out;
}

Form parse_form(std::string_view text, int dim) {
    CompactSpinor s = parse_compact_spinor(text, dim);
    if (s.bare_two_form) return s.two_form;
    return wedge(wedge_exp(s.exponent), wedge_all(dim, s.thetas));
}

Form parse_two_form(std::string_view text, int dim) {
    Cursor c(text, "two-form");
    Form f = mixedsum(c, dim);
    if (!c.at_end()) c.fail("trailing characters");
    return f;
}

Polyvector parse_bivector(std::string_view text, int dim) {
    GaussianRational scale = 1;
    std::string_view body = text;
    const auto paren = text.find('(');
    const auto star = text.find('*');
    if (paren != std::string_view::npos && star != std::string_view::npos && star < paren &&
        text.find_first_not_of(" \t", star + 1) == paren) {
        scale = GaussianRational::parse(text.substr(0, star));
        body = text.substr(paren);
    }
    Cursor c(body, "bivector");
    Form as_form(dim);
    if (c.peek() == '(') {
        Form x = oneform(c, dim);
        Form y = oneform(c, dim);
        as_form = wedge(x, y);
    } else {
        as_form = twoform(c, dim);
    }
    if (!c.at_end()) c.fail("trailing characters");
    Polyvector out(dim);
    for (const auto& [b, v] : as_form.terms()) out.add(b, scale * v);
    return out;
}

namespace {

Form terms_from_json(const nlohmann::json& list, int dim) {
    if (!list.is_array()) throw ParseError("form JSON must be a list of {c, blade}");
    Form f(dim);
    for (const auto& t : list) {
        if (!t.contains("c") || !t.contains("blade")) throw ParseError("form term needs 'c' and 'blade'");
        const auto c = GaussianRational::parse(t.at("c").get<std::string>());
        const auto idx = t.at("blade").get<std::vector<int>>();
        f += Form::basis(dim, idx, c);
    }
    return f;
}

}  // namespace

NilAlgebra algebra_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("dim")) throw ParseError("algebra JSON needs 'dim'");
    const int dim = j.at("dim").get<int>();
    if (dim < 1 || dim > kMaxDimension) throw ParseError("algebra JSON: bad dimension");
    std::vector<Form> ds(static_cast<std::size_t>(dim), Form(dim));
    if (j.contains("d")) {
        for (const auto& [key, list] : j.at("d").items()) {
            const int k = std::stoi(key);
            if (k < 1 || k > dim) throw ParseError("algebra JSON: generator index " + key + " out of range");
            ds[static_cast<std::size_t>(k - 1)] = terms_from_json(list, dim);
        }
    }
    return NilAlgebra(dim, std::move(ds));
}

nlohmann::json algebra_to_json(const NilAlgebra& g) {
    nlohmann::json d = nlohmann::json::object();
    for (int k = 1; k <= g.dim(); ++k) {
        const Form& de = g.d_generator(k);
        if (!de.is_zero()) d[std::to_string(k)] = form_to_json(de);
    }
    return {{"dim", g.dim()}, {"d", d}};
}

Form form_from_json(const nlohmann::json& j, int dim) { return terms_from_json(j, dim); }

nlohmann::json form_to_json(const Form& a) {
    nlohmann::json list = nlohmann::json::array();
    for (const auto& [b, c] : a.terms()) list.push_back({{"c", c.to_string()}, {"blade", b.indices()}});
    return list;
}

}  // namespace nilgc
