#include "orbitkit/partition.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <ostream>
#include <sstream>

namespace orbitkit {

char type_letter(ClassicalType x) {
    switch (x) {
    case ClassicalType::A: return 'A';
    case ClassicalType::B: return 'B';
    case ClassicalType::C: return 'C';
    case ClassicalType::D: return 'D';
    }
    return '?';
}

ClassicalType type_from_letter(char c) {
    switch (c) {
    case 'A': case 'a': return ClassicalType::A;
    case 'B': case 'b': return ClassicalType::B;
    case 'C': case 'c': return ClassicalType::C;
    case 'D': case 'd': return ClassicalType::D;
    default: throw SyntaxError(std::string("expected type letter A/B/C/D, got '") + c + "'", 0);
    }
}

Partition::Partition(std::vector<int> raw) : parts_(std::move(raw)) {
    for (int v : parts_) {
        if (v < 0)
            throw Error("partition parts must be nonnegative, got " + std::to_string(v));
    }
    std::erase(parts_, 0);
    std::sort(parts_.begin(), parts_.end(), std::greater<int>());
    sum_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::multiplicity(int value) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), value));
}

std::vector<std::pair<int, int>> Partition::multiplicities() const {
    std::vector<std::pair<int, int>> out;
    for (std::size_t i = 0; i < parts_.size();) {
        std::size_t j = i;
        while (j < parts_.size() && parts_[j] == parts_[i])
            ++j;
        out.emplace_back(parts_[i], static_cast<int>(j - i));
        i = j;
    }
    return out;
}

Partition slice(const Partition& p, Slice s) {
    std::vector<int> kept;
    for (int v : p.parts()) {
        bool keep = false;
        switch (s.cmp) {
        case Cmp::gt: keep = v > s.threshold; break;
        case Cmp::ge: keep = v >= s.threshold; break;
        case Cmp::eq: keep = v == s.threshold; break;
        case Cmp::lt: keep = v < s.threshold; break;
        case Cmp::le: keep = v <= s.threshold; break;
        }
        if (keep)
            kept.push_back(v);
    }
    return Partition(std::move(kept));
}

Partition slice(const Partition& p, Cmp cmp, int threshold) {
    return slice(p, Slice{cmp, threshold});
}

bool dominates(const Partition& p, const Partition& q) {
    if (p.sum() != q.sum())
        throw SizeMismatch("dominance needs equal sizes: |p|=" + std::to_string(p.sum()) +
                           ", |q|=" + std::to_string(q.sum()));
    int n = std::max(p.length(), q.length());
    int sp = 0, sq = 0;
    for (int i = 0; i < n; ++i) {
        sp += p.part(i);
        sq += q.part(i);
        if (sp < sq)
            return false;
    }
    return true;
}

Dominance compare_dominance(const Partition& p, const Partition& q) {
    bool ge = dominates(p, q);
    bool le = dominates(q, p);
    if (ge && le)
        return Dominance::equal;
    if (ge)
        return Dominance::greater;
    if (le)
        return Dominance::less;
    return Dominance::incomparable;
}

bool strictly_dominates(const Partition& p, const Partition& q) {
    return p != q && dominates(p, q);
}

Partition transpose(const Partition& p) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(p.largest()));
    for (int i = 1; i <= p.largest(); ++i) {
        int count = 0;
        for (int v : p.parts()) {
            if (v >= i)
                ++count;
            else
                break;
        }
        out.push_back(count);
    }
    return Partition(std::move(out));
}

Partition operator|(const Partition& p, const Partition& q) {
    std::vector<int> merged;
    merged.reserve(p.parts().size() + q.parts().size());
    std::merge(p.parts().begin(), p.parts().end(), q.parts().begin(), q.parts().end(),
               std::back_inserter(merged), std::greater<int>());
    return Partition(std::move(merged));
}

Partition operator+(const Partition& p, const Partition& q) {
    int n = std::max(p.length(), q.length());
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        out.push_back(p.part(i) + q.part(i));
    return Partition(std::move(out));
}

Partition plus_one(const Partition& p) {
    std::vector<int> out = p.parts();
    if (out.empty())
        out.push_back(1);
    else
        ++out.front();
    return Partition(std::move(out));
}

Partition minus_one(const Partition& p) {
    if (p.empty())
        throw EmptyPartition("minus_one on the empty partition");
    std::vector<int> out = p.parts();
    --out.back();
    return Partition(std::move(out));
}

Partition rectangle(int value, int count) {
    if (value <= 0 || count <= 0)
        return Partition();
    return Partition(std::vector<int>(static_cast<std::size_t>(count), value));
}

bool is_type(const Partition& p, ClassicalType x) {
    if (x == ClassicalType::A)
        return true;
    // epsilon = +1 for B and D (even parts constrained),
    // epsilon = -1 for C (odd parts constrained).
    bool even_total = p.sum() % 2 == 0;
    if (x == ClassicalType::B ? even_total : !even_total)
        return false;
    int bad_parity = (x == ClassicalType::C) ? 1 : 0;
    for (auto [value, count] : p.multiplicities()) {
        if (value % 2 == bad_parity && count % 2 != 0)
            return false;
    }
    return true;
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

} // namespace

Partition parse_partition(const std::string& text) {
    std::size_t i = 0;
    skip_ws(text, i);
    if (i >= text.size() || text[i] != '[')
        throw SyntaxError("expected '['", i);
    ++i;
    std::vector<int> parts;
    skip_ws(text, i);
    if (i < text.size() && text[i] == ']') {
        ++i;
    } else {
        for (;;) {
            int value = parse_uint(text, i, "part value");
            int count = 1;
            skip_ws(text, i);
            if (i < text.size() && text[i] == '^') {
                ++i;
                count = parse_uint(text, i, "exponent");
                skip_ws(text, i);
            }
            for (int k = 0; k < count; ++k)
                parts.push_back(value);
            if (i >= text.size())
                throw SyntaxError("expected ',' or ']'", i);
            if (text[i] == ',') {
                ++i;
                continue;
            }
            if (text[i] == ']') {
                ++i;
                break;
            }
            throw SyntaxError("expected ',' or ']'", i);
        }
    }
    skip_ws(text, i);
    if (i != text.size())
        throw SyntaxError("trailing input after partition", i);
    return Partition(std::move(parts));
}

std::string to_string(const Partition& p) {
    std::ostringstream os;
    os << '[';
    bool first = true;
    for (auto [value, count] : p.multiplicities()) {
        if (!first)
            os << ',';
        first = false;
        if (count >= 4) {
            os << value << '^' << count;
        } else {
            for (int k = 0; k < count; ++k) {
                if (k > 0)
                    os << ',';
                os << value;
            }
        }
    }
    os << ']';
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Partition& p) {
    return os << to_string(p);
}

} // namespace orbitkit
