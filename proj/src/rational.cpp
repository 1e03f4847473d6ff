#include "maxlin/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace maxlin {

Rational parse_rational(const std::string& text) {
    const auto bad = [&]() -> std::invalid_argument {
        return std::invalid_argument("malformed rational '" + text + "'");
    };
    std::size_t pos = 0;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    std::size_t digits = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        ++pos;
        ++digits;
    }
    if (digits == 0) throw bad();
    BigInt num(text.substr(0, pos));
    if (pos == text.size()) return Rational(num);
    if (text[pos] != '/') throw bad();
    const std::size_t den_start = ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos != text.size() || pos == den_start) throw bad();
    BigInt den(text.substr(den_start));
    if (den == 0) throw bad();
    return Rational(num, den);
}

} // namespace maxlin
