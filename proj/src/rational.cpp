#include "floerlab/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace floerlab {

namespace {

bool is_integer_text(std::string_view s)
{
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

std::string strip_plus(std::string_view s)
{
    if (!s.empty() && s[0] == '+') s.remove_prefix(1);
    return std::string(s);
}

}  // namespace

Rational parse_rational(std::string_view text)
{
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);

    const auto slash = text.find('/');
    if (slash != std::string_view::npos) {
        auto num = text.substr(0, slash);
        auto den = text.substr(slash + 1);
        if (!is_integer_text(num) || !is_integer_text(den) || den[0] == '-' )
            throw std::invalid_argument("malformed rational: " + std::string(text));
        mpz_class n(strip_plus(num)), d(strip_plus(den));
        if (d == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
        Rational r(n, d);
        r.canonicalize();
        return r;
    }

    const auto dot = text.find('.');
    if (dot != std::string_view::npos) {
        auto whole = text.substr(0, dot);
        auto frac = text.substr(dot + 1);
        bool negative = !whole.empty() && whole[0] == '-';
        if (whole.empty() || whole == "-" || whole == "+") whole = "0";
        if (!is_integer_text(whole) || frac.empty() || !is_integer_text(frac) || frac[0] == '-' || frac[0] == '+')
            throw std::invalid_argument("malformed rational: " + std::string(text));
        mpz_class scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        mpz_class w(strip_plus(whole));
        if (w < 0) w = -w;
        mpz_class f{std::string(frac)};
        Rational r(mpz_class(w * scale + f), scale);
        r.canonicalize();
        return negative ? Rational(-r) : r;
    }

    if (!is_integer_text(text)) throw std::invalid_argument("malformed rational: " + std::string(text));
    return Rational(mpz_class(strip_plus(text)));
}

std::string to_string(const Rational& value)
{
    Rational v = value;
    v.canonicalize();
    if (v.get_den() == 1) return v.get_num().get_str();
    return v.get_num().get_str() + "/" + v.get_den().get_str();
}

Rational make_rational(long numerator, long denominator)
{
    if (denominator == 0) throw std::invalid_argument("zero denominator");
    Rational r(numerator, denominator);
    r.canonicalize();
    return r;
}

long floor_to_long(const Rational& value)
{
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
    if (!q.fits_slong_p()) throw std::overflow_error("floor does not fit in long");
    return q.get_si();
}

}  // namespace floerlab
