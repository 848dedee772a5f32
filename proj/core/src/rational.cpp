#include "virg/rational.hpp"

#include "virg/error.hpp"

#include <string>

namespace virg {

Rational make_rational(std::int64_t num, std::int64_t den) {
    if (den == 0) {
        throw ArithmeticError("rational with zero denominator");
    }
    Rational q(Integer(static_cast<long>(num)), Integer(static_cast<long>(den)));
    q.canonicalize();
    return q;
}

Rational parse_rational(std::string_view text) {
    auto valid_integer = [](std::string_view s) {
        if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
            s.remove_prefix(1);
        }
        if (s.empty()) {
            return false;
        }
        for (char ch : s) {
            if (ch < '0' || ch > '9') {
                return false;
            }
        }
        return true;
    };
    const auto slash = text.find('/');
    std::string_view num_text = text.substr(0, slash);
    std::string_view den_text = slash == std::string_view::npos ? "1" : text.substr(slash + 1);
    if (!valid_integer(num_text) || !valid_integer(den_text) || den_text.front() == '-' ||
        den_text.front() == '+') {
        throw ParseError("not a rational number: '" + std::string(text) + "'");
    }
    if (num_text.front() == '+') {
        num_text.remove_prefix(1);
    }
    Integer num{std::string(num_text)};
    Integer den{std::string(den_text)};
    if (den == 0) {
        throw ArithmeticError("rational with zero denominator: '" + std::string(text) + "'");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) {
    return q.get_str();
}

} // namespace virg
