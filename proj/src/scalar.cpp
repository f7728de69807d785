#include "minkpair/scalar.hpp"

#include <cctype>

namespace minkpair {

namespace {

bool is_integer_token(const std::string& s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (s[0] == '+' || s[0] == '-')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Rational Rational::parse(const std::string& text) {
    // GMP's string constructor takes no leading '+', so validate the original
    // token first and shed the sign only from what GMP sees.
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
        if (!is_integer_token(text, true))
            throw ParseError("bad rational literal '" + text + "' (want \"p\" or \"p/q\")");
        return Rational(mpq_class(text[0] == '+' ? text.substr(1) : text, 10));
    }
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (!is_integer_token(num, true) || !is_integer_token(den, false))
        throw ParseError("bad rational literal '" + text +
                         "' (want integer p and positive integer q in \"p/q\")");
    mpq_class v((num[0] == '+' ? num.substr(1) : num) + "/" + den, 10);
    if (v.get_den() == 0) throw ParseError("zero denominator in rational literal '" + text + "'");
    return Rational(std::move(v));
}

double atanh_checked(double t) {
    if (!std::isfinite(t)) throw DomainError("atanh_checked: non-finite argument");
    if (t <= -1.0 || t >= 1.0)
        throw DomainError("atanh_checked: |t| >= 1, equation tanh(x) = t has no solution");
    return std::atanh(t);
}

}  // namespace minkpair
