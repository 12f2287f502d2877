#include "orbitkit/arthur.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <tuple>

namespace orbitkit {

std::string to_string(const Rational& r) {
    std::ostringstream os;
    os << r.numerator();
    if (r.denominator() != 1)
        os << '/' << r.denominator();
    return os.str();
}

Rational parse_rational(const std::string& text, std::size_t& pos) {
    bool negative = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        negative = text[pos] == '-';
        ++pos;
    }
    std::size_t start = pos;
    long num = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        num = num * 10 + (text[pos] - '0');
        if (num > 1000000)
            throw SyntaxError("number too large", start);
        ++pos;
    }
    if (pos == start)
        throw SyntaxError("expected a rational number", pos);
    long den = 1;
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        std::size_t dstart = pos;
        den = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            den = den * 10 + (text[pos] - '0');
            if (den > 1000000)
                throw SyntaxError("number too large", dstart);
            ++pos;
        }
        if (pos == dstart || den == 0)
            throw SyntaxError("expected a nonzero denominator", dstart);
    }
    Rational r(static_cast<int>(num), static_cast<int>(den));
    return negative ? -r : r;
}

namespace {

// Canonical order: (dim rho, rho id, a, b, twist descending); paired and
// s-value only break remaining ties so printing is deterministic.
bool canonical_less(const Summand& lhs, const Summand& rhs) {
    auto key = [](const Summand& s) {
        return std::make_tuple(s.rho.dim, s.rho.id, s.deligne, s.arthur, -s.twist,
                               !s.paired, s.rho.s_value.value_or(0));
    };
    return key(lhs) < key(rhs);
}

void validate_summand(const Summand& s, ParamContext context) {
    if (s.rho.dim < 1 || s.deligne < 1 || s.arthur < 1)
        throw Error("summand dimensions must be positive");
    if (context == ParamContext::LParameter && s.arthur != 1)
        throw ContextMismatch("L-parameter summands must have Arthur factor S_1");
    if (!s.paired && s.twist != Rational(0))
        throw Error("a summand with nonzero twist must be paired with its dual");
    if (s.rho.s_value && *s.rho.s_value < 1)
        throw Error("s-values must be positive");
}

} // namespace

Parameter::Parameter(ParamContext context, std::vector<Summand> summands)
    : context_(context), summands_(std::move(summands)) {
    for (Summand& s : summands_) {
        if (s.paired && s.twist < Rational(0))
            s.twist = -s.twist; // store the positive-twist representative
        validate_summand(s, context_);
        ambient_dim_ += s.gl_dim();
    }
    std::sort(summands_.begin(), summands_.end(), canonical_less);
}

namespace {

void skip_ws(const std::string& s, std::size_t& i) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
        ++i;
}

int parse_uint(const std::string& s, std::size_t& i, const char* what) {
    skip_ws(s, i);
    std::size_t start = i;
    long value = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        value = value * 10 + (s[i] - '0');
        if (value > 1000000)
            throw SyntaxError("number too large", start);
        ++i;
    }
    if (i == start)
        throw SyntaxError(std::string("expected ") + what, i);
    return static_cast<int>(value);
}

void expect(const std::string& s, std::size_t& i, char c) {
    skip_ws(s, i);
    if (i >= s.size() || s[i] != c)
        throw SyntaxError(std::string("expected '") + c + "'", i);
    ++i;
}

struct ParsedTerm {
    Summand summand;
    bool has_arthur_factor;
};

ParsedTerm parse_term(const std::string& s, std::size_t& i) {
    Summand term;
    skip_ws(s, i);
    std::size_t term_start = i;
    if (i < s.size() && s[i] == '2') {
        std::size_t save = i;
        ++i;
        skip_ws(s, i);
        if (i < s.size() && s[i] == '*') {
            ++i;
            term.paired = true;
        } else {
            i = save;
        }
    }
    skip_ws(s, i);
    if (s.compare(i, 3, "rho") != 0)
        throw SyntaxError("expected 'rho'", i);
    i += 3;
    expect(s, i, '(');
    term.rho.id = "rho";
    term.rho.dim = parse_uint(s, i, "irrep dimension");
    skip_ws(s, i);
    if (i < s.size() && s[i] == ',') {
        ++i;
        skip_ws(s, i);
        if (i >= s.size() || s[i] != 's')
            throw SyntaxError("expected 's='", i);
        ++i;
        expect(s, i, '=');
        term.rho.s_value = parse_uint(s, i, "s-value");
    }
    expect(s, i, ')');
    skip_ws(s, i);
    if (i < s.size() && s[i] == '@') {
        ++i;
        skip_ws(s, i);
        term.twist = parse_rational(s, i);
    }
    skip_ws(s, i);
    if (i >= s.size() || s[i] != 'S')
        throw SyntaxError("expected 'S'", i);
    ++i;
    term.deligne = parse_uint(s, i, "Deligne SL2 dimension");
    bool has_arthur = false;
    skip_ws(s, i);
    if (i < s.size() && s[i] == 'S') {
        ++i;
        term.arthur = parse_uint(s, i, "Arthur SL2 dimension");
        has_arthur = true;
    }
    if (!term.paired && term.twist != Rational(0))
        throw SyntaxError("a nonzero twist requires the paired '2*' form", term_start);
    return {term, has_arthur};
}

} // namespace

Parameter parse_parameter(const std::string& text) {
    std::size_t i = 0;
    skip_ws(text, i);
    if (i == text.size())
        return Parameter(ParamContext::LParameter, {});

    std::vector<ParsedTerm> terms;
    for (;;) {
        terms.push_back(parse_term(text, i));
        skip_ws(text, i);
        if (i < text.size() && text[i] == '+') {
            ++i;
            continue;
        }
        break;
    }
    if (i != text.size())
        throw SyntaxError("trailing input after parameter", i);

    bool arthur = terms.front().has_arthur_factor;
    std::vector<Summand> summands;
    for (const ParsedTerm& t : terms) {
        if (t.has_arthur_factor != arthur)
            throw SyntaxError("cannot mix terms with and without an Arthur SL2 factor", 0);
        summands.push_back(t.summand);
    }
    return Parameter(arthur ? ParamContext::Arthur : ParamContext::LParameter,
                     std::move(summands));
}

Parameter parse_parameter(const std::string& text, int expected_dim) {
    Parameter p = parse_parameter(text);
    if (p.ambient_dim() != expected_dim)
        throw DimensionMismatch("parameter has ambient dimension " +
                                std::to_string(p.ambient_dim()) + ", expected " +
                                std::to_string(expected_dim));
    return p;
}

std::string to_string(const Parameter& param) {
    std::ostringstream os;
    bool first = true;
    for (const Summand& s : param.summands()) {
        if (!first)
            os << " + ";
        first = false;
        if (s.paired)
            os << "2*";
        os << "rho(" << s.rho.dim;
        if (s.rho.s_value)
            os << ",s=" << *s.rho.s_value;
        os << ')';
        if (s.twist != Rational(0))
            os << '@' << to_string(s.twist);
        os << " S" << s.deligne;
        if (param.context() == ParamContext::Arthur)
            os << " S" << s.arthur;
    }
    return os.str();
}

namespace {

void require_context(const Parameter& p, ParamContext want, const char* where) {
    if (p.context() != want)
        throw ContextMismatch(std::string(where) + ": wrong parameter context");
}

} // namespace

Partition p_of_phi(const Parameter& phi) {
    require_context(phi, ParamContext::LParameter, "p_of_phi");
    Partition out;
    for (const Summand& s : phi.summands())
        out = out | rectangle(s.deligne, (s.paired ? 2 : 1) * s.rho.dim);
    return out;
}

Partition p_of_psi(const Parameter& psi) {
    require_context(psi, ParamContext::Arthur, "p_of_psi");
    Partition out;
    for (const Summand& s : psi.summands())
        out = out | rectangle(s.arthur, (s.paired ? 2 : 1) * s.deligne * s.rho.dim);
    return out;
}

Parameter hat(const Parameter& psi) {
    require_context(psi, ParamContext::Arthur, "hat");
    std::vector<Summand> swapped = psi.summands();
    for (Summand& s : swapped)
        std::swap(s.deligne, s.arthur);
    return Parameter(ParamContext::Arthur, std::move(swapped));
}

Parameter phi_of_psi(const Parameter& psi) {
    require_context(psi, ParamContext::Arthur, "phi_of_psi");
    std::vector<Summand> expanded;
    for (const Summand& s : psi.summands()) {
        int b = s.arthur;
        for (int j = 1; j <= b; ++j) {
            Rational shift = Rational(b + 1, 2) - Rational(j);
            Summand term;
            term.rho = s.rho;
            term.deligne = s.deligne;
            term.arthur = 1;
            if (s.paired) {
                term.paired = true;
                term.twist = s.twist + shift; // normalized to |.| on construction
            } else if (shift > Rational(0)) {
                // the term and its mirror at -shift form one paired summand
                term.paired = true;
                term.twist = shift;
            } else if (shift < Rational(0)) {
                continue; // accounted for by the mirrored term above
            } else {
                term.paired = false;
                term.twist = Rational(0);
            }
            expanded.push_back(term);
        }
    }
    return Parameter(ParamContext::LParameter, std::move(expanded));
}

Partition p_A_of_phi(const Parameter& phi, int d_A) {
    require_context(phi, ParamContext::LParameter, "p_A_of_phi");
    if (d_A < 1)
        throw Error("d_A must be positive");
    Partition out;
    for (const Summand& s : phi.summands()) {
        if (!s.rho.s_value)
            throw MissingDivisionData("summand rho(" + std::to_string(s.rho.dim) +
                                      ") S" + std::to_string(s.deligne) +
                                      " carries no s-value");
        int sv = *s.rho.s_value;
        if (d_A % sv != 0)
            throw DivisibilityError("s-value " + std::to_string(sv) +
                                    " does not divide d_A=" + std::to_string(d_A));
        if (s.deligne % sv != 0)
            throw DivisibilityError("Deligne dimension " + std::to_string(s.deligne) +
                                    " is not a multiple of s-value " + std::to_string(sv));
        if ((s.rho.dim * sv) % d_A != 0)
            throw DivisibilityError("d_A=" + std::to_string(d_A) +
                                    " does not divide dim(rho)*s = " +
                                    std::to_string(s.rho.dim * sv));
        int a_prime = s.deligne / sv;
        int mult = (s.paired ? 2 : 1) * (s.rho.dim * sv / d_A);
        out = out | rectangle(a_prime * d_A, mult);
    }
    return out;
}

Partition gl_wavefront(const std::vector<StandardFactor>& standard_module, int d_A) {
    if (d_A < 1)
        throw Error("d_A must be positive");
    Partition out;
    for (const StandardFactor& f : standard_module) {
        if (f.m < 1 || f.n < 1)
            throw Error("standard-module factors need positive m and n");
        out = out + rectangle(f.m, f.n * d_A);
    }
    return out;
}

} // namespace orbitkit
