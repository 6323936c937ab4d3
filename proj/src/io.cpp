#include "qtor/io.hpp"

#include <cctype>
#include <sstream>

namespace qtor {

namespace {

bool is_simple(const CycScalar& s) {
    // representable as a single signed product, e.g. "-3/2*e^2"
    int nonzero = 0;
    for (const auto& c : s.coeffs())
        if (c != 0) ++nonzero;
    return nonzero <= 1;
}

std::string render_scalar_term(std::size_t k, const Rational& c, bool lead_sign) {
    // |c| * e^k with conventional suppression of unit coefficients
    Rational a = c < 0 ? Rational(-c) : c;
    std::string sign = c < 0 ? (lead_sign ? "-" : " - ") : (lead_sign ? "" : " + ");
    std::string body;
    if (k == 0) {
        body = a.get_str();
    } else {
        std::string e = (k == 1) ? "e" : "e^" + std::to_string(k);
        body = (a == 1) ? e : a.get_str() + "*" + e;
    }
    return sign + body;
}

} // namespace

std::string render_scalar(const CycScalar& s) {
    if (s.is_zero()) return "0";
    std::string out;
    bool first = true;
    const auto& c = s.coeffs();
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k] == 0) continue;
        out += render_scalar_term(k, c[k], first);
        first = false;
    }
    return out;
}

namespace {

struct Lexer {
    std::string s;
    std::size_t pos = 0;

    explicit Lexer(std::string text) : s(std::move(text)) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) throw parse_error(std::string("expected '") + c + "' at position " + std::to_string(pos));
    }
    std::int64_t integer() {
        skip_ws();
        std::size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
            throw parse_error("expected integer at position " + std::to_string(start));
        return std::stoll(s.substr(start, pos - start));
    }
    Rational rational() {
        std::int64_t num = integer();
        if (accept('/')) {
            std::int64_t den = integer();
            if (den == 0) throw parse_error("zero denominator");
            Rational r(num);
            r /= Rational(den);
            return r;
        }
        return {num};
    }
    /// Parses an identifier like `e` or `x12` or a named variable.
    std::string ident() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        return s.substr(start, pos - start);
    }
};

CycScalar parse_scalar_sum(Lexer& lex, long ell, bool stop_at_paren);

/// One scalar product: factors joined by optional '*', each a rational, `e`
/// power, or parenthesized scalar sum.
CycScalar parse_scalar_term(Lexer& lex, long ell) {
    CycScalar acc(1);
    bool any = false;
    while (true) {
        char c = lex.peek();
        if (c == '(') {
            lex.expect('(');
            acc *= parse_scalar_sum(lex, ell, true);
            lex.expect(')');
        } else if (c == 'e') {
            ++lex.pos;
            std::int64_t k = 1;
            if (lex.accept('^')) k = lex.integer();
            acc *= CycScalar::eps_pow(ell, k);
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            acc *= CycScalar(lex.rational());
        } else {
            break;
        }
        any = true;
        lex.accept('*');
    }
    if (!any) throw parse_error("expected scalar at position " + std::to_string(lex.pos));
    return acc;
}

CycScalar parse_scalar_sum(Lexer& lex, long ell, bool stop_at_paren) {
    CycScalar total(0);
    bool first = true;
    while (true) {
        if (lex.eof()) break;
        char c = lex.peek();
        if (stop_at_paren && c == ')') break;
        int sign = 1;
        if (c == '+' || c == '-') {
            ++lex.pos;
            sign = (c == '-') ? -1 : 1;
        } else if (!first) {
            break;
        }
        CycScalar t = parse_scalar_term(lex, ell);
        total += (sign < 0) ? -t : t;
        first = false;
    }
    if (first) throw parse_error("empty scalar");
    return total;
}

} // namespace

CycScalar parse_scalar(const std::string& text, long ell) {
    Lexer lex(text);
    CycScalar v = parse_scalar_sum(lex, ell, false);
    if (!lex.eof()) throw parse_error("trailing input at position " + std::to_string(lex.pos));
    return v;
}

namespace {

std::string render_monomial(const ExpVec& a, const std::vector<std::string>* names) {
    std::string out;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        if (!out.empty()) out += ' ';
        out += names ? (*names)[i] : "x" + std::to_string(i + 1);
        if (a[i] != 1) out += "^" + std::to_string(a[i]);
    }
    return out;
}

/// Renders one term, reporting whether a leading '-' was factored out.
std::pair<bool, std::string> render_term(const ExpVec& a, const CycScalar& c,
                                         const std::vector<std::string>* names) {
    std::string mono = render_monomial(a, names);
    if (is_simple(c)) {
        std::string cs = render_scalar(c);
        bool neg = !cs.empty() && cs[0] == '-';
        if (neg) cs = cs.substr(1);
        if (mono.empty()) return {neg, cs};
        if (cs == "1") return {neg, mono};
        return {neg, cs + " * " + mono};
    }
    std::string cs = "(" + render_scalar(c) + ")";
    if (mono.empty()) return {false, cs};
    return {false, cs + " * " + mono};
}

template <class TermRange>
std::string render_terms(const TermRange& terms, const std::vector<std::string>* names) {
    std::string out;
    bool first = true;
    for (const auto& [a, c] : terms) {
        auto [neg, body] = render_term(a, c, names);
        if (first) {
            out += neg ? "-" + body : body;
            first = false;
        } else {
            out += neg ? " - " + body : " + " + body;
        }
    }
    return out.empty() ? "0" : out;
}

} // namespace

std::string render_element(const TorusSpec& e) {
    return render_terms(e.terms(), nullptr);
}

std::string render_poly(const CPoly& p, const std::vector<std::string>& vars) {
    // descending degrevlex for polynomial display
    std::vector<std::pair<ExpVec, CycScalar>> terms(p.terms().rbegin(), p.terms().rend());
    return render_terms(terms, &vars);
}

namespace {

/// Parses one product term of an element; `names` maps identifiers to
/// variable slots (x1..xN when null).
void parse_term_into(Lexer& lex, long ell, std::size_t nvars,
                     const std::vector<std::string>* names, int sign, ExpVec& exps,
                     CycScalar& coeff) {
    exps.assign(nvars, 0);
    coeff = CycScalar(sign);
    bool any = false;
    while (true) {
        char c = lex.peek();
        if (c == '(') {
            lex.expect('(');
            coeff *= parse_scalar_sum(lex, ell, true);
            lex.expect(')');
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            coeff *= CycScalar(lex.rational());
        } else if (c == 'e' && (lex.pos + 1 >= lex.s.size() ||
                                !std::isdigit(static_cast<unsigned char>(lex.s[lex.pos + 1])))) {
            ++lex.pos;
            std::int64_t k = 1;
            if (lex.accept('^')) k = lex.integer();
            coeff *= CycScalar::eps_pow(ell, k);
        } else if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string id = lex.ident();
            std::size_t slot = nvars;
            if (names) {
                for (std::size_t i = 0; i < names->size(); ++i)
                    if ((*names)[i] == id) { slot = i; break; }
                if (slot == nvars) throw parse_error("unknown variable '" + id + "'");
            } else {
                if (id.size() < 2 || id[0] != 'x')
                    throw parse_error("unknown generator '" + id + "'");
                std::size_t idx = 0;
                try {
                    idx = std::stoul(id.substr(1));
                } catch (...) {
                    throw parse_error("unknown generator '" + id + "'");
                }
                if (idx < 1 || idx > nvars)
                    throw parse_error("generator index out of range: '" + id + "'");
                slot = idx - 1;
            }
            std::int64_t k = 1;
            if (lex.accept('^')) k = lex.integer();
            exps[slot] += k;
        } else {
            break;
        }
        any = true;
        lex.accept('*');
    }
    if (!any) throw parse_error("expected term at position " + std::to_string(lex.pos));
}

} // namespace

TorusSpec parse_element(const std::string& text, const AlgebraSpec& spec) {
    Lexer lex(text);
    TorusSpec out;
    bool first = true;
    const auto nvars = static_cast<std::size_t>(spec.rank());
    while (!lex.eof()) {
        char c = lex.peek();
        int sign = 1;
        if (c == '+' || c == '-') {
            ++lex.pos;
            sign = (c == '-') ? -1 : 1;
        } else if (!first) {
            throw parse_error("expected '+' or '-' at position " + std::to_string(lex.pos));
        }
        ExpVec exps;
        CycScalar coeff;
        parse_term_into(lex, spec.order(), nvars, nullptr, sign, exps, coeff);
        if (!spec.exponent_allowed(exps))
            throw parse_error("negative exponent on a non-inverted generator in '" + text + "'");
        out.add_term(std::move(exps), std::move(coeff));
        first = false;
    }
    if (first) throw parse_error("empty element");
    return out;
}

CPoly parse_poly(const std::string& text, const std::vector<std::string>& vars, long ell) {
    Lexer lex(text);
    CPoly out;
    bool first = true;
    while (!lex.eof()) {
        char c = lex.peek();
        int sign = 1;
        if (c == '+' || c == '-') {
            ++lex.pos;
            sign = (c == '-') ? -1 : 1;
        } else if (!first) {
            throw parse_error("expected '+' or '-' at position " + std::to_string(lex.pos));
        }
        ExpVec exps;
        CycScalar coeff;
        parse_term_into(lex, ell, vars.size(), &vars, sign, exps, coeff);
        out.add_term(std::move(exps), std::move(coeff));
        first = false;
    }
    if (first) throw parse_error("empty polynomial");
    return out;
}

Json scalar_to_json(const CycScalar& s) {
    Json coef = Json::array();
    for (const auto& c : s.coeffs()) coef.push_back(to_string(c));
    return coef;
}

Json element_to_json(const TorusSpec& e) {
    Json terms = Json::array();
    for (const auto& [a, c] : e.terms()) {
        Json t;
        t["exponents"] = a;
        t["coef"] = scalar_to_json(c);
        terms.push_back(std::move(t));
    }
    return terms;
}

TorusSpec element_from_json(const Json& j, const AlgebraSpec& spec) {
    if (!j.is_array()) throw parse_error("element JSON must be an array of terms");
    TorusSpec out;
    for (const auto& t : j) {
        ExpVec a = t.at("exponents").get<ExpVec>();
        if (static_cast<long>(a.size()) != spec.rank())
            throw parse_error("element JSON: exponent rank mismatch");
        std::vector<Rational> coeffs;
        for (const auto& s : t.at("coef")) coeffs.push_back(parse_rational(s.get<std::string>()));
        out.add_term(std::move(a), CycScalar::from_coeffs(spec.order(), std::move(coeffs)));
    }
    if (!respects_mask(out, spec)) throw parse_error("element JSON: invertibility mask violated");
    return out;
}

std::vector<std::string> central_variable_names(std::size_t count) {
    if (count <= 3) {
        static const char* abc[] = {"u", "v", "w"};
        return {abc, abc + count};
    }
    std::vector<std::string> names;
    names.reserve(count);
    for (std::size_t i = 1; i <= count; ++i) names.push_back("u" + std::to_string(i));
    return names;
}

} // namespace qtor
