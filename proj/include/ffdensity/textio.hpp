#pragma once

// Canonical text forms and parsers for every object the CLI and config
// files exchange: field elements, polynomials, rational functions, places,
// divisors, holomorphy ring specs, matrices, coefficient lists and tuple
// rules. Formatters emit exactly what the parsers accept, and round-trip
// tests pin that down.
//
// Expression grammar (whitespace-insensitive):
//   expr   := term  { ('+'|'-') term }
//   term   := unary { ('*'|'/') unary }
//   unary  := '-' unary | factor
//   factor := atom [ '^' integer ]
//   atom   := '(' expr ')' | 'x' | 't' | 'y'<k> | integer
// 'x' is the function field generator, 't' the extension field generator
// (only over non-prime fields), and y0, y1, ... the tuple variables of a
// rule. Integer literals embed through the prime subfield.

#include "density.hpp"
#include "eisenstein.hpp"
#include "holomorphy.hpp"
#include "places.hpp"
#include "zeta.hpp"

#include <cctype>
#include <cstdint>
#include <optional>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ffdensity {

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

/// Splits on a delimiter at bracket depth zero.
inline std::vector<std::string_view> split_top_level(std::string_view s, char delim) {
    std::vector<std::string_view> parts;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (c == '(' || c == '[') ++depth;
        else if (c == ')' || c == ']') --depth;
        else if (c == delim && depth == 0) {
            parts.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    parts.push_back(s.substr(start));
    return parts;
}

/// True if s contains any of `ops` at bracket depth zero past position 0.
inline bool has_top_level_op(std::string_view s, std::string_view ops) {
    int depth = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (c == '(' || c == '[') ++depth;
        else if (c == ')' || c == ']') --depth;
        else if (depth == 0 && i > 0 && ops.find(c) != std::string_view::npos) return true;
    }
    return false;
}

class ExprParser {
public:
    ExprParser(Field field, std::string_view text, const std::vector<RationalFunction>* vars,
               bool t_is_variable)
        : field_(std::move(field)), text_(text), vars_(vars), t_is_variable_(t_is_variable) {}

    RationalFunction parse() {
        RationalFunction v = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("parse error at position " + std::to_string(pos_) + " in '" +
                                    std::string(text_) + "': " + what);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    std::uint64_t integer() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected an integer");
        std::uint64_t v = 0;
        for (std::size_t i = start; i < pos_; ++i) {
            if (v > (~std::uint64_t{0} - 9) / 10) fail("integer literal too large");
            v = v * 10 + static_cast<std::uint64_t>(text_[i] - '0');
        }
        return v;
    }

    RationalFunction expr() {
        RationalFunction v = term();
        for (;;) {
            if (eat('+')) v = v + term();
            else if (eat('-')) v = v - term();
            else return v;
        }
    }

    RationalFunction term() {
        RationalFunction v = unary();
        for (;;) {
            if (eat('*')) v = v * unary();
            else if (eat('/')) {
                RationalFunction d = unary();
                if (d.is_zero()) fail("division by zero");
                v = v / d;
            } else return v;
        }
    }

    RationalFunction unary() {
        if (eat('-')) return -unary();
        return factor();
    }

    RationalFunction factor() {
        RationalFunction v = atom();
        if (eat('^')) {
            std::uint64_t e = integer();
            RationalFunction r = RationalFunction::one(field_);
            RationalFunction b = v;
            while (e) {
                if (e & 1) r = r * b;
                b = b * b;
                e >>= 1;
            }
            return r;
        }
        return v;
    }

    RationalFunction atom() {
        skip_ws();
        if (eat('(')) {
            RationalFunction v = expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        char c = peek();
        if (c == 'x') {
            ++pos_;
            return RationalFunction(Poly::x(field_));
        }
        if (c == 't') {
            ++pos_;
            if (t_is_variable_) return RationalFunction(Poly::x(field_));
            if (field_->extension_degree() == 1)
                fail("'t' is only defined over extension fields");
            return RationalFunction(Poly::constant(field_, field_->p()));
        }
        if (c == 'y') {
            ++pos_;
            std::uint64_t k = integer();
            if (!vars_) fail("tuple variables are not available here");
            if (k >= vars_->size()) fail("tuple variable index out of range");
            return (*vars_)[static_cast<std::size_t>(k)];
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::uint64_t v = integer();
            return RationalFunction(
                Poly::constant(field_, field_->from_integer(static_cast<std::int64_t>(
                                           v % field_->p()))));
        }
        fail("expected '(', 'x', 't', a tuple variable or an integer");
    }

    Field field_;
    std::string_view text_;
    std::size_t pos_ = 0;
    const std::vector<RationalFunction>* vars_;
    bool t_is_variable_;
};

}  // namespace detail

// --- formatting ---

/// "0", "1", "2", ... over prime fields; polynomials in t like "t^2+2*t+1"
/// over extensions.
inline std::string format_field_element(const FieldElement& a) {
    const FieldSpec& F = *a.field();
    if (F.extension_degree() == 1) return std::to_string(a.index());
    std::string out;
    for (std::uint32_t i = F.extension_degree(); i-- > 0;) {
        std::uint32_t c = F.coord(a.index(), i);
        if (c == 0) continue;
        if (!out.empty()) out += "+";
        if (i == 0) {
            out += std::to_string(c);
        } else {
            if (c != 1) out += std::to_string(c) + "*";
            out += i == 1 ? "t" : "t^" + std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

/// Descending powers of x, omitting unit coefficients; multi-term
/// extension field coefficients are parenthesized: "(t+1)*x^2+t*x+2".
inline std::string format_poly(const Poly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (std::size_t i = f.coeffs().size(); i-- > 0;) {
        std::uint32_t c = f.coeff_idx(i);
        if (c == 0) continue;
        if (!out.empty()) out += "+";
        std::string cs = format_field_element(FieldElement(f.field(), c));
        if (i == 0) {
            out += cs;
            continue;
        }
        if (cs != "1") {
            bool wrap = cs.find('+') != std::string::npos;
            out += (wrap ? "(" + cs + ")" : cs) + "*";
        }
        out += i == 1 ? "x" : "x^" + std::to_string(i);
    }
    return out;
}

/// "num/den" with sides parenthesized only when precedence demands it;
/// polynomial values print without the "/1".
inline std::string format_rational_function(const RationalFunction& u) {
    std::string num = format_poly(u.numerator());
    if (u.is_polynomial()) return num;
    std::string den = format_poly(u.denominator());
    if (detail::has_top_level_op(num, "+-")) num = "(" + num + ")";
    if (detail::has_top_level_op(den, "+-*/")) den = "(" + den + ")";
    return num + "/" + den;
}

/// "inf" or the parenthesized prime polynomial, e.g. "(x^2+x+1)".
inline std::string format_place(const Place& P) {
    if (P.is_infinite()) return "inf";
    return "(" + format_poly(P.prime()) + ")";
}

/// Multiplicity-place terms joined by '+', e.g. "2*(x)+3*inf"; "0" if zero.
inline std::string format_divisor(const Divisor& D) {
    if (D.terms().empty()) return "0";
    std::string out;
    for (const auto& [place, mult] : D.terms()) {
        if (!out.empty()) out += "+";
        if (mult != 1) out += std::to_string(mult) + "*";
        out += format_place(place);
    }
    return out;
}

namespace detail {

/// Modulus of an extension field as a polynomial in t over the prime field.
inline std::string format_modulus(const FieldSpec& F) {
    std::string out;
    const auto& m = F.modulus();
    for (std::size_t i = m.size(); i-- > 0;) {
        if (m[i] == 0) continue;
        if (!out.empty()) out += "+";
        if (i == 0) {
            out += std::to_string(m[i]);
            continue;
        }
        if (m[i] != 1) out += std::to_string(m[i]) + "*";
        out += i == 1 ? "t" : "t^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

}  // namespace detail

/// "q=4; modulus=t^2+t+1; excluded=inf,(x)"; modulus omitted over primes.
inline std::string format_holomorphy_spec(const HolomorphySpec& spec) {
    const FieldSpec& F = *spec.field();
    std::string out = "q=" + std::to_string(F.q());
    if (F.extension_degree() > 1) out += "; modulus=" + detail::format_modulus(F);
    out += "; excluded=";
    bool first = true;
    for (const Place& P : spec.excluded_places()) {
        if (!first) out += ",";
        out += format_place(P);
        first = false;
    }
    return out;
}

/// "[[a, b, c], [d, e, f]]".
inline std::string format_matrix(const PolyMatrix& M) {
    std::string out = "[";
    for (std::size_t r = 0; r < M.rows(); ++r) {
        if (r) out += ", ";
        out += "[";
        for (std::size_t c = 0; c < M.cols(); ++c) {
            if (c) out += ", ";
            out += format_rational_function(M.at(r, c));
        }
        out += "]";
    }
    return out + "]";
}

/// "[a0, a1, ..., an]", coefficients ascending.
inline std::string format_poly_over_field(const PolyOverField& f) {
    std::string out = "[";
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        if (i) out += ", ";
        out += format_rational_function(f.coeff(i));
    }
    return out + "]";
}

// --- parsing ---

inline RationalFunction parse_rational_function(const Field& field, std::string_view text) {
    return detail::ExprParser(field, text, nullptr, false).parse();
}

inline Poly parse_poly(const Field& field, std::string_view text) {
    RationalFunction u = parse_rational_function(field, text);
    if (!u.is_polynomial())
        throw std::invalid_argument("expected a polynomial, got '" + std::string(text) + "'");
    return u.numerator();
}

inline FieldElement parse_field_element(const Field& field, std::string_view text) {
    RationalFunction u = parse_rational_function(field, text);
    if (!u.is_polynomial() || u.numerator().degree() > 0)
        throw std::invalid_argument("expected a field element, got '" + std::string(text) + "'");
    return FieldElement(field, u.numerator().coeff_idx(0));
}

inline Place parse_place(const Field& field, std::string_view text) {
    std::string_view s = detail::trim(text);
    if (s == "inf") return Place::infinity(field);
    return Place::finite(parse_poly(field, s));
}

inline Divisor parse_divisor(const HolomorphySpec& spec, std::string_view text) {
    std::string_view s = detail::trim(text);
    if (s == "0") return Divisor::zero(spec);
    std::vector<std::pair<Place, std::int64_t>> terms;
    for (std::string_view part : detail::split_top_level(s, '+')) {
        part = detail::trim(part);
        if (part.empty()) throw std::invalid_argument("empty divisor term");
        std::int64_t mult = 1;
        auto star = part.find('*');
        // a leading integer multiplicity is followed by '*' before any '('
        if (star != std::string_view::npos &&
            part.find('(') > star && part.substr(0, star).find("inf") == std::string_view::npos) {
            std::string head(detail::trim(part.substr(0, star)));
            try {
                std::size_t used = 0;
                mult = std::stoll(head, &used);
                if (used != head.size()) throw std::invalid_argument(head);
            } catch (const std::exception&) {
                throw std::invalid_argument("bad divisor multiplicity '" + head + "'");
            }
            part = detail::trim(part.substr(star + 1));
        }
        terms.emplace_back(parse_place(spec.field(), part), mult);
    }
    return Divisor(spec, std::move(terms));
}

namespace detail {

inline std::map<std::string, std::string, std::less<>> parse_keyvals(std::string_view text,
                                                                     char sep) {
    std::map<std::string, std::string, std::less<>> out;
    for (std::string_view part : split_top_level(text, sep)) {
        part = trim(part);
        if (part.empty()) continue;
        auto eq = part.find('=');
        if (eq == std::string_view::npos)
            throw std::invalid_argument("expected key=value, got '" + std::string(part) + "'");
        std::string key(trim(part.substr(0, eq)));
        std::string value(trim(part.substr(eq + 1)));
        if (!out.emplace(std::move(key), std::move(value)).second)
            throw std::invalid_argument("duplicate key '" + std::string(trim(part.substr(0, eq))) +
                                        "'");
    }
    return out;
}

inline std::uint64_t parse_uint(const std::string& value, const std::string& what) {
    try {
        std::size_t used = 0;
        unsigned long long v = std::stoull(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("bad " + what + " '" + value + "'");
    }
}

/// Builds the field for a given order, with the modulus text required
/// exactly when the order is a proper prime power.
inline Field make_field(std::uint64_t q, const std::optional<std::string>& modulus_text) {
    if (q < 2 || q > 65536) throw std::invalid_argument("field order must be in [2, 2^16]");
    std::uint32_t p = 0;
    for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    if (p == 0) p = static_cast<std::uint32_t>(q);  // q itself is prime
    std::uint32_t e = 0;
    std::uint64_t acc = 1;
    while (acc < q) {
        acc *= p;
        ++e;
    }
    if (acc != q) throw std::invalid_argument("field order must be a prime power");
    if (e == 1) {
        if (modulus_text)
            throw std::invalid_argument("modulus is only meaningful for extension fields");
        return FieldSpec::make_prime(p);
    }
    if (!modulus_text)
        throw std::invalid_argument("extension fields need an explicit modulus (in t)");
    Field fp = FieldSpec::make_prime(p);
    RationalFunction m = ExprParser(fp, *modulus_text, nullptr, true).parse();
    if (!m.is_polynomial()) throw std::invalid_argument("modulus must be a polynomial in t");
    return FieldSpec::make_extension(p, e, m.numerator().coeffs());
}

}  // namespace detail

/// "q=...; [modulus=...;] excluded=place,place,..."
inline HolomorphySpec parse_holomorphy_spec(std::string_view text) {
    auto kv = detail::parse_keyvals(text, ';');
    for (const auto& [key, value] : kv)
        if (key != "q" && key != "modulus" && key != "excluded")
            throw std::invalid_argument("unknown holomorphy spec key '" + key + "'");
    auto q_it = kv.find("q");
    if (q_it == kv.end()) throw std::invalid_argument("holomorphy spec needs q=");
    std::optional<std::string> modulus;
    if (auto it = kv.find("modulus"); it != kv.end()) modulus = it->second;
    Field field = detail::make_field(detail::parse_uint(q_it->second, "field order"), modulus);
    auto ex_it = kv.find("excluded");
    if (ex_it == kv.end()) throw std::invalid_argument("holomorphy spec needs excluded=");
    std::vector<Place> excluded;
    for (std::string_view part : detail::split_top_level(ex_it->second, ','))
        excluded.push_back(parse_place(field, part));
    return HolomorphySpec(std::move(field), std::move(excluded));
}

/// "[[...], [...]]" with rational function entries; shape from the nesting.
inline std::vector<std::vector<RationalFunction>> parse_matrix_rows(const Field& field,
                                                                    std::string_view text) {
    std::string_view s = detail::trim(text);
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        throw std::invalid_argument("matrix must be bracketed");
    s = detail::trim(s.substr(1, s.size() - 2));
    std::vector<std::vector<RationalFunction>> rows;
    for (std::string_view row_text : detail::split_top_level(s, ',')) {
        row_text = detail::trim(row_text);
        if (row_text.empty()) continue;
        if (row_text.front() != '[' || row_text.back() != ']')
            throw std::invalid_argument("matrix rows must be bracketed");
        std::vector<RationalFunction> row;
        for (std::string_view entry :
             detail::split_top_level(detail::trim(row_text.substr(1, row_text.size() - 2)), ','))
            row.push_back(parse_rational_function(field, entry));
        rows.push_back(std::move(row));
        if (rows.back().size() != rows.front().size())
            throw std::invalid_argument("matrix rows must have equal length");
    }
    if (rows.empty()) throw std::invalid_argument("matrix must have at least one row");
    return rows;
}

/// "[a0, a1, ..., an]" -> ascending coefficient list.
inline std::vector<RationalFunction> parse_coefficient_list(const Field& field,
                                                            std::string_view text) {
    std::string_view s = detail::trim(text);
    if (s.size() >= 2 && s.front() == '[' && s.back() == ']') s = s.substr(1, s.size() - 2);
    std::vector<RationalFunction> out;
    for (std::string_view part : detail::split_top_level(s, ','))
        out.push_back(parse_rational_function(field, part));
    return out;
}

inline PolyOverField parse_poly_over_field(const Field& field, std::string_view text) {
    return PolyOverField(parse_coefficient_list(field, text));
}

/// "1,0,2" or "[1,0,2]" -> integer coefficients, ascending.
inline LPolynomial parse_lpolynomial(std::string_view text) {
    std::string_view s = detail::trim(text);
    if (s.size() >= 2 && s.front() == '[' && s.back() == ']') s = s.substr(1, s.size() - 2);
    std::vector<BigInt> coeffs;
    for (std::string_view part : detail::split_top_level(s, ',')) {
        part = detail::trim(part);
        try {
            coeffs.emplace_back(std::string(part));
        } catch (const std::runtime_error&) {
            throw std::invalid_argument("bad L-polynomial coefficient '" + std::string(part) + "'");
        }
    }
    return LPolynomial(std::move(coeffs));
}

/// Compiles an expression in variables y0..y{arity-1} into a TupleRule.
inline TupleRule parse_tuple_rule(const Field& field, std::string_view text, std::size_t arity) {
    std::string source(detail::trim(text));
    // compile once against dummies to surface syntax errors eagerly
    std::vector<RationalFunction> dummies(arity, RationalFunction::zero(field));
    detail::ExprParser(field, source, &dummies, false).parse();
    auto eval = [field, source](const std::vector<RationalFunction>& tuple) {
        return detail::ExprParser(field, source, &tuple, false).parse();
    };
    return TupleRule{source, std::move(eval)};
}

/// Experiment config: one key=value per line, '#' starts a comment.
/// Field and ring:   q, modulus (extensions only), excluded
/// Event:            event=unimodular (rows, cols)
///                   event=ramified (n, scan_degree)
///                   event=coprimality (f, g, arity, window_min, window_max?)
/// Chain:            chain_max=J (uniform chain j=0..J) or chain=D0|D1|...
/// Execution:        mode=exhaustive|sampled, samples, seed, workers, enum_cap
/// Reference:        reference=auto|none|<fraction>
inline DensityExperiment parse_experiment_config(std::string_view text) {
    std::map<std::string, std::string, std::less<>> kv;
    for (std::string_view line : detail::split_top_level(text, '\n')) {
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = detail::trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw std::invalid_argument("expected key=value line, got '" + std::string(line) + "'");
        std::string key(detail::trim(line.substr(0, eq)));
        std::string value(detail::trim(line.substr(eq + 1)));
        if (!kv.emplace(key, value).second)
            throw std::invalid_argument("duplicate config key '" + key + "'");
    }
    static const char* known[] = {"q",      "modulus",  "excluded",   "event",      "rows",
                                  "cols",   "n",        "scan_degree", "f",          "g",
                                  "arity",  "window_min", "window_max", "chain_max", "chain",
                                  "mode",   "samples",  "seed",       "workers",    "enum_cap",
                                  "reference"};
    for (const auto& [key, value] : kv) {
        bool ok = false;
        for (const char* k : known) ok = ok || key == k;
        if (!ok) throw std::invalid_argument("unknown config key '" + key + "'");
    }
    auto need = [&](const char* key) -> const std::string& {
        auto it = kv.find(key);
        if (it == kv.end())
            throw std::invalid_argument(std::string("config needs ") + key + "=");
        return it->second;
    };
    auto get = [&](const char* key) -> std::optional<std::string> {
        auto it = kv.find(key);
        if (it == kv.end()) return std::nullopt;
        return it->second;
    };

    std::optional<std::string> modulus = get("modulus");
    Field field = detail::make_field(detail::parse_uint(need("q"), "field order"), modulus);
    std::vector<Place> excluded;
    for (std::string_view part : detail::split_top_level(need("excluded"), ','))
        excluded.push_back(parse_place(field, part));
    HolomorphySpec spec(field, std::move(excluded));

    const std::string& event_kind = need("event");
    EventDescriptor event = UnimodularEvent{1, 2};
    if (event_kind == "unimodular") {
        event = UnimodularEvent{detail::parse_uint(need("rows"), "rows"),
                                detail::parse_uint(need("cols"), "cols")};
    } else if (event_kind == "ramified") {
        event = RamifiedEvent{
            static_cast<std::uint32_t>(detail::parse_uint(need("n"), "degree n")),
            static_cast<std::uint32_t>(detail::parse_uint(need("scan_degree"), "scan degree"))};
    } else if (event_kind == "coprimality") {
        std::size_t arity = detail::parse_uint(need("arity"), "arity");
        std::optional<std::uint32_t> window_max;
        if (auto w = get("window_max"))
            window_max = static_cast<std::uint32_t>(detail::parse_uint(*w, "window_max"));
        event = CoprimalityWindowEvent{
            parse_tuple_rule(field, need("f"), arity), parse_tuple_rule(field, need("g"), arity),
            arity,
            static_cast<std::uint32_t>(detail::parse_uint(need("window_min"), "window_min")),
            window_max};
    } else {
        throw std::invalid_argument("unknown event '" + event_kind + "'");
    }

    std::vector<Divisor> chain;
    if (auto chain_text = get("chain")) {
        for (std::string_view part : detail::split_top_level(*chain_text, '|'))
            chain.push_back(parse_divisor(spec, part));
    } else {
        chain = uniform_chain(
            spec, static_cast<std::int64_t>(detail::parse_uint(need("chain_max"), "chain_max")));
    }

    DensityExperiment experiment{std::move(spec),
                                 std::move(event),
                                 std::move(chain),
                                 SamplingMode::Exhaustive,
                                 default_enum_cap(),
                                 100000,
                                 42,
                                 1,
                                 std::nullopt};
    if (auto mode = get("mode")) {
        if (*mode == "exhaustive") experiment.mode = SamplingMode::Exhaustive;
        else if (*mode == "sampled") experiment.mode = SamplingMode::Sampled;
        else throw std::invalid_argument("mode must be exhaustive or sampled");
    }
    if (auto v = get("samples")) experiment.samples = detail::parse_uint(*v, "samples");
    if (auto v = get("seed")) experiment.seed = detail::parse_uint(*v, "seed");
    if (auto v = get("workers"))
        experiment.workers = static_cast<unsigned>(detail::parse_uint(*v, "workers"));
    if (auto v = get("enum_cap")) experiment.enum_cap = detail::parse_uint(*v, "enum_cap");

    std::string reference = get("reference").value_or("auto");
    if (reference == "auto") experiment.reference = auto_reference(experiment.spec, experiment.event);
    else if (reference == "none") experiment.reference = std::nullopt;
    else experiment.reference = parse_fraction(reference);

    return experiment;
}

}  // namespace ffdensity
