#include "critline/rational.hpp"

#include <cctype>

namespace critline {

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

/* GMP's string constructor auto-detects the base from a leading zero, so
 * "025" would parse as octal; strip the zeros first.
 */
Int int_from_digits(std::string s)
{
    size_t first = s.find_first_not_of('0');
    if (first == std::string::npos)
        return Int(0);
    return Int(s.substr(first));
}

} // namespace

Rat parse_rat(std::string_view s)
{
    std::string_view rest = s;
    bool negative = false;
    if (!rest.empty() && (rest.front() == '+' || rest.front() == '-')) {
        negative = rest.front() == '-';
        rest.remove_prefix(1);
    }
    if (rest.empty())
        throw std::invalid_argument("empty rational literal: '" + std::string(s) + "'");

    Rat value;
    if (auto slash = rest.find('/'); slash != std::string_view::npos) {
        std::string_view num = rest.substr(0, slash);
        std::string_view den = rest.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            throw std::invalid_argument("malformed rational literal: '" + std::string(s) + "'");
        Int d = int_from_digits(std::string(den));
        if (d == 0)
            throw std::invalid_argument("zero denominator: '" + std::string(s) + "'");
        value = make_rat(int_from_digits(std::string(num)), d);
    } else if (auto dot = rest.find('.'); dot != std::string_view::npos) {
        std::string_view whole = rest.substr(0, dot);
        std::string_view frac = rest.substr(dot + 1);
        if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
            (!frac.empty() && !all_digits(frac)))
            throw std::invalid_argument("malformed decimal literal: '" + std::string(s) + "'");
        Int scale = 1;
        for (size_t i = 0; i < frac.size(); ++i)
            scale *= 10;
        Int digits = int_from_digits(std::string(whole) + std::string(frac));
        value = make_rat(digits, scale);
    } else {
        if (!all_digits(rest))
            throw std::invalid_argument("malformed integer literal: '" + std::string(s) + "'");
        value = Rat(int_from_digits(std::string(rest)));
    }
    return negative ? Rat(-value) : value;
}

Int floor_int(Rat const& x)
{
    Int q = numerator(x) / denominator(x);
    // C++ integer division truncates toward zero; fix up negatives
    if (q * denominator(x) != numerator(x) && x < 0)
        --q;
    return q;
}

std::string decimal_string(Rat const& x, int digits)
{
    if (digits < 0)
        throw std::invalid_argument("negative digit count");
    Int scale = 1;
    for (int i = 0; i < digits; ++i)
        scale *= 10;
    // round half away from zero
    Rat scaled = x * scale;
    Int twice_num = 2 * numerator(scaled);
    Int twice_den = 2 * denominator(scaled);
    Int rounded;
    if (scaled >= 0)
        rounded = (twice_num + denominator(scaled)) / twice_den;
    else
        rounded = -((-twice_num + denominator(scaled)) / twice_den);

    bool neg = rounded < 0;
    std::string body = Int(abs(rounded)).str();
    if (digits == 0)
        return (neg ? "-" : "") + body;
    if (body.size() <= static_cast<size_t>(digits))
        body.insert(0, static_cast<size_t>(digits) + 1 - body.size(), '0');
    body.insert(body.size() - static_cast<size_t>(digits), ".");
    return (neg ? "-" : "") + body;
}

Rat pow2_at_least(Rat const& x)
{
    if (x <= 0)
        throw std::invalid_argument("pow2_at_least needs a positive argument");
    Rat p = 1;
    while (p < x)
        p *= 2;
    while (p / 2 >= x)
        p /= 2;
    return p;
}

} // namespace critline
