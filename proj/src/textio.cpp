#include "maxclass/textio.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace maxclass {

namespace {

std::string strip_spaces(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    return out;
}

unsigned parse_number(const std::string& s, std::size_t& pos) {
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
        throw std::invalid_argument("parse_elem: expected a number in '" + s + "'");
    unsigned v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        v = v * 10 + unsigned(s[pos] - '0');
        if (v > 1u << 20) throw std::invalid_argument("parse_elem: number too large");
        ++pos;
    }
    return v;
}

AlgElem parse_hex_form(const std::string& s, const CyclicContext& ctx) {
    const auto at = s.find('@');
    if (at == std::string::npos || s.compare(at, 3, "@n=") != 0)
        throw std::invalid_argument("parse_elem: hex form must be 0x...@n=N");
    std::size_t pos = at + 3;
    const unsigned n = parse_number(s, pos);
    if (pos != s.size()) throw std::invalid_argument("parse_elem: trailing characters");
    if (int(n) != ctx.n())
        throw std::invalid_argument("parse_elem: element tagged n=" + std::to_string(n) +
                                    " but context has n=" + std::to_string(ctx.n()));
    std::uint64_t bits = 0;
    if (at == 2) throw std::invalid_argument("parse_elem: empty hex literal");
    for (std::size_t i = 2; i < at; ++i) {
        const char c = s[i];
        unsigned digit;
        if (c >= '0' && c <= '9') digit = unsigned(c - '0');
        else if (c >= 'a' && c <= 'f') digit = unsigned(c - 'a' + 10);
        else if (c >= 'A' && c <= 'F') digit = unsigned(c - 'A' + 10);
        else throw std::invalid_argument("parse_elem: bad hex digit");
        if (bits >> 60) throw std::invalid_argument("parse_elem: hex literal too wide");
        bits = (bits << 4) | digit;
    }
    if (bits & ~ctx.mask())
        throw std::invalid_argument("parse_elem: bitmask exceeds the algebra dimension");
    return make_elem(ctx, bits);
}

}  // namespace

std::string format_elem(const AlgElem& x) {
    if (x.bits == 0) return "0";
    std::string out;
    for (unsigned i = 0; i < x.ctx->dim(); ++i) {
        if (!((x.bits >> i) & 1u)) continue;
        if (!out.empty()) out += '+';
        if (i == 0) out += '1';
        else if (i == 1) out += 'a';
        else out += "a^" + std::to_string(i);
    }
    return out;
}

std::string format_elem_hex(const AlgElem& x) {
    const unsigned digits = std::max(2u, x.ctx->dim() / 4);
    char buf[32];
    std::snprintf(buf, sizeof buf, "0x%0*llX@n=%d", int(digits),
                  static_cast<unsigned long long>(x.bits), x.ctx->n());
    return buf;
}

AlgElem parse_elem(const std::string& text, const CyclicContext& ctx) {
    const std::string s = strip_spaces(text);
    if (s.empty()) throw std::invalid_argument("parse_elem: empty input");
    if (s.rfind("0x", 0) == 0 || s.rfind("0X", 0) == 0) return parse_hex_form(s, ctx);
    if (s == "0") return zero_elem(ctx);

    std::uint64_t bits = 0;
    std::size_t pos = 0;
    while (true) {
        if (pos >= s.size()) throw std::invalid_argument("parse_elem: dangling '+'");
        if (s[pos] == '1') {
            bits ^= 1u;
            ++pos;
        } else if (s[pos] == 'a') {
            ++pos;
            unsigned e = 1;
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                e = parse_number(s, pos);
            }
            if (e >= ctx.dim())
                throw std::invalid_argument("parse_elem: exponent " + std::to_string(e) +
                                            " out of range for n=" + std::to_string(ctx.n()));
            bits ^= std::uint64_t(1) << e;
        } else {
            throw std::invalid_argument("parse_elem: unexpected character '" +
                                        std::string(1, s[pos]) + "'");
        }
        if (pos == s.size()) break;
        if (s[pos] != '+') throw std::invalid_argument("parse_elem: expected '+'");
        ++pos;
    }
    return make_elem(ctx, bits);
}

std::string format_mc(const MCElem& u) {
    return format_elem(u.x1) + " + (" + format_elem(u.x2) + ")b";
}

}  // namespace maxclass
