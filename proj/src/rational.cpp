#include "ellwall/rational.hpp"

#include "ellwall/errors.hpp"

#include <cctype>

namespace ellwall {

namespace {

bool valid_integer(std::string_view s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string s(text);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    std::size_t lead = 0;
    while (lead < s.size() && std::isspace(static_cast<unsigned char>(s[lead]))) ++lead;
    s = s.substr(lead);

    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_integer(num, true) || !valid_integer(den, false))
        throw InputError("not a rational literal (expected p or p/q): '" + std::string(text) + "'");
    if (num[0] == '+') num.erase(0, 1);
    Integer d(den, 10);
    if (d == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
    Rational r{Integer(num, 10), d};
    r.canonicalize();
    return r;
}

std::string format_rational(const Rational& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

int sign(const Rational& x) { return sgn(x); }

double to_double(const Rational& x) { return x.get_d(); }

std::optional<Rational> exact_sqrt(const Rational& x) {
    if (x < 0) return std::nullopt;
    Integer n = x.get_num(), d = x.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
        return std::nullopt;
    Integer rn = sqrt(n), rd = sqrt(d);
    Rational r{rn, rd};
    r.canonicalize();
    return r;
}

}  // namespace ellwall
