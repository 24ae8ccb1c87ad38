#include "projendo/rational.hpp"

#include "projendo/error.hpp"

#include <cctype>

namespace projendo {

Rational inverse(const Rational& x) {
    require(!is_zero(x), "division-by-zero", "inverse of zero rational");
    Rational r;
    mpq_inv(r.get_mpq_t(), x.get_mpq_t());
    return r;
}

std::string to_string(const Rational& x) { return x.get_str(10); }

Rational parse_rational(std::string_view text) {
    std::string s(text);
    std::size_t slash = 0;
    bool ok = !s.empty();
    for (std::size_t i = 0; i < s.size() && ok; ++i) {
        const char c = s[i];
        if (c == '-' || c == '+') {
            ok = (i == 0 || s[i - 1] == '/') && i + 1 < s.size();
        } else if (c == '/') {
            ok = ++slash == 1 && i > 0 && i + 1 < s.size();
        } else {
            ok = std::isdigit(static_cast<unsigned char>(c)) != 0;
        }
    }
    if (!ok) fail("parse-error", "malformed rational '" + s + "'");
    if (s[0] == '+') s.erase(0, 1);
    const auto pos = s.find('/');
    if (pos != std::string::npos && s[pos + 1] == '+') s.erase(pos + 1, 1);
    Integer num, den(1);
    if (pos == std::string::npos) {
        num.set_str(s, 10);
    } else {
        num.set_str(s.substr(0, pos), 10);
        den.set_str(s.substr(pos + 1), 10);
    }
    if (den == 0) fail("parse-error", "zero denominator in '" + s + "'");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

} // namespace projendo
