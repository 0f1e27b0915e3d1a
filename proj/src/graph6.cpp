#include "cayspec/graph6.hpp"

#include <string>

#include "cayspec/errors.hpp"

namespace cayspec {

namespace {

constexpr const char* kHeader = ">>graph6<<";

bool printable(unsigned char c) { return c >= 63 && c <= 126; }

} // namespace

TGraph parse_graph6(const std::string& text) {
    std::size_t pos = 0;
    std::string_view s(text);
    if (s.substr(0, 10) == kHeader) pos = 10;
    // strip one trailing newline, common in .g6 files
    std::size_t end = s.size();
    while (end > pos && (s[end - 1] == '\n' || s[end - 1] == '\r')) --end;
    if (pos >= end) throw ParseError("graph6: empty input", pos);

    for (std::size_t k = pos; k < end; ++k)
        if (!printable(static_cast<unsigned char>(s[k])))
            throw ParseError("graph6: byte outside [63,126]", k);

    long long n;
    if (s[pos] != '~') {
        n = s[pos] - 63;
        ++pos;
    } else {
        if (pos + 1 < end && s[pos + 1] == '~')
            throw ParseError("graph6: vertex counts beyond 258047 unsupported", pos);
        if (pos + 4 > end) throw ParseError("graph6: truncated vertex count", pos);
        n = 0;
        for (int k = 1; k <= 3; ++k) n = (n << 6) | (s[pos + k] - 63);
        if (n < 63) throw ParseError("graph6: non-canonical long vertex count", pos);
        pos += 4;
    }
    if (n < 1) throw ParseError("graph6: vertex count must be >= 1", pos);

    long long nbits = n * (n - 1) / 2;
    long long nbytes = (nbits + 5) / 6;
    if (static_cast<long long>(end - pos) != nbytes)
        throw ParseError("graph6: body has " + std::to_string(end - pos) + " bytes, expected " +
                             std::to_string(nbytes),
                         pos);

    TGraph g(static_cast<int>(n));
    long long bit = 0;
    // column order: (0,1), (0,2), (1,2), (0,3), ...
    for (int j = 1; j < n && bit < nbits; ++j)
        for (int i = 0; i < j; ++i, ++bit) {
            int byte = s[pos + bit / 6] - 63;
            if ((byte >> (5 - bit % 6)) & 1) g.add_edge(i + 1, j + 1);
        }
    // padding bits must be zero
    for (long long b = nbits; b < nbytes * 6; ++b) {
        int byte = s[pos + b / 6] - 63;
        if ((byte >> (5 - b % 6)) & 1)
            throw ParseError("graph6: nonzero padding bit", pos + static_cast<std::size_t>(b / 6));
    }
    return g;
}

std::string emit_graph6(const TGraph& g) {
    long long n = g.n();
    if (n < 1) throw std::invalid_argument("graph6: graph must have >= 1 vertex");
    std::string out;
    if (n <= 62) {
        out += static_cast<char>(n + 63);
    } else if (n <= 258047) {
        out += '~';
        for (int k = 2; k >= 0; --k) out += static_cast<char>(((n >> (6 * k)) & 63) + 63);
    } else {
        throw CapacityError("graph6: vertex count beyond 258047");
    }
    long long nbits = n * (n - 1) / 2;
    long long nbytes = (nbits + 5) / 6;
    std::string body(static_cast<std::size_t>(nbytes), 0);
    long long bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit)
            if (g.has_edge(i + 1, j + 1)) body[bit / 6] |= static_cast<char>(1 << (5 - bit % 6));
    for (auto& c : body) c = static_cast<char>(c + 63);
    return out + body;
}

} // namespace cayspec
