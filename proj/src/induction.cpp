#include "orbitkit/induction.hpp"

#include <cctype>
#include <sstream>

namespace orbitkit {

bool is_very_even(const Partition& p) {
    for (int v : p.parts())
        if (v % 2 != 0)
            return false;
    return true;
}

NilpotentOrbit::NilpotentOrbit(ClassicalType type, Partition part,
                               std::optional<VeryEvenLabel> lab)
    : group_type(type), partition(std::move(part)), label(lab) {
    if (!is_type(partition, group_type))
        throw TypeMismatch("orbit partition " + to_string(partition) +
                           " is not of type " + type_letter(group_type));
    if (label && (group_type != ClassicalType::D || !is_very_even(partition)))
        throw Error("orbit label I/II is only meaningful for very even type-D partitions");
}

Partition induce_gl(const Partition& p1, const Partition& p2) {
    return p1 + p2;
}

Partition induce_classical(const Partition& gl_part, const Partition& tail_part,
                           ClassicalType x) {
    if (x == ClassicalType::A)
        throw TypeMismatch("induce_classical: type must be B, C or D");
    if (!tail_part.empty() && !is_type(tail_part, x))
        throw TypeMismatch("tail " + to_string(tail_part) + " is not of type " +
                           type_letter(x));
    return collapse(gl_part + gl_part + tail_part, x);
}

Partition induce_levi(const LeviDatum& levi, ClassicalType x) {
    for (const GlBlock& block : levi.gl_blocks) {
        if (block.orbit.sum() != block.size)
            throw SizeMismatch("GL block of size " + std::to_string(block.size) +
                               " carries partition " + to_string(block.orbit) +
                               " of size " + std::to_string(block.orbit.sum()));
    }
    Partition gl;
    for (const GlBlock& block : levi.gl_blocks)
        gl = induce_gl(gl, block.orbit);

    if (x == ClassicalType::A) {
        if (levi.tail)
            throw TypeMismatch("type-A Levi datum cannot carry a classical tail");
        return gl;
    }
    if (levi.tail && levi.tail->group_type != x)
        throw TypeMismatch("tail orbit has type " + std::string(1, type_letter(levi.tail->group_type)) +
                           ", ambient type is " + type_letter(x));
    Partition tail = levi.tail ? levi.tail->partition : Partition();
    return induce_classical(gl, tail, x);
}

std::set<Partition> induced_wavefront(const std::set<Partition>& tau_wavefront,
                                      const std::set<Partition>& sigma_wavefront,
                                      ClassicalType x) {
    if (tau_wavefront.empty() || sigma_wavefront.empty())
        throw Error("induced_wavefront: both wavefront sets must be nonempty");
    std::set<Partition> image;
    for (const Partition& t : tau_wavefront)
        for (const Partition& s : sigma_wavefront)
            image.insert(induce_classical(t, s, x));
    return image;
}

namespace {

std::string take_bracketed(const std::string& s, std::size_t& i) {
    // expects '[' at i after possible spaces; returns the "[...]" span
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
        ++i;
    if (i >= s.size() || s[i] != '[')
        throw SyntaxError("expected '['", i);
    std::size_t start = i;
    while (i < s.size() && s[i] != ']')
        ++i;
    if (i >= s.size())
        throw SyntaxError("unterminated '['", start);
    ++i;
    return s.substr(start, i - start);
}

void expect(const std::string& s, std::size_t& i, char c) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
        ++i;
    if (i >= s.size() || s[i] != c)
        throw SyntaxError(std::string("expected '") + c + "'", i);
    ++i;
}

} // namespace

LeviDatum parse_levi(const std::string& text, ClassicalType& type_out) {
    LeviDatum levi;
    std::optional<Partition> tail_part;
    std::size_t i = 0;
    for (;;) {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
            ++i;
        bool is_gl = text.compare(i, 2, "GL") == 0;
        if (!is_gl && (i >= text.size() || text[i] != 'G'))
            throw SyntaxError("expected GL(...) or G(...)", i);
        if (tail_part)
            throw SyntaxError("the classical tail must come last", i);
        i += is_gl ? 2 : 1;
        expect(text, i, '(');
        Partition p = parse_partition(take_bracketed(text, i));
        expect(text, i, ')');
        if (is_gl)
            levi.gl_blocks.push_back({p.sum(), p});
        else
            tail_part = p;
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
            ++i;
        if (i < text.size() && text[i] == '*') {
            ++i;
            continue;
        }
        break;
    }
    expect(text, i, ':');
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
        ++i;
    if (i >= text.size())
        throw SyntaxError("expected type letter", i);
    type_out = type_from_letter(text[i]);
    ++i;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
        ++i;
    if (i != text.size())
        throw SyntaxError("trailing input after Levi datum", i);

    if (tail_part)
        levi.tail = NilpotentOrbit(type_out, *tail_part);
    return levi;
}

std::string to_string(const LeviDatum& levi, ClassicalType type) {
    std::ostringstream os;
    bool first = true;
    for (const GlBlock& block : levi.gl_blocks) {
        if (!first)
            os << '*';
        first = false;
        os << "GL(" << to_string(block.orbit) << ')';
    }
    if (levi.tail) {
        if (!first)
            os << '*';
        first = false;
        os << "G(" << to_string(levi.tail->partition) << ')';
    }
    os << ':' << type_letter(type);
    return os.str();
}

} // namespace orbitkit
