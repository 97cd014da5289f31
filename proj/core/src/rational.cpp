#include "phaseless/rational.hpp"

#include <limits>
#include <stdexcept>

namespace phaseless {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (c < '0' || c > '9') {
            return false;
        }
    }
    return true;
}

// The string constructor of mpz_int honours C prefixes ("010" is octal), so
// digit runs are converted explicitly in base 10.
Integer decimal_digits(std::string_view s) {
    Integer value = 0;
    for (char c : s) {
        value = value * 10 + (c - '0');
    }
    return value;
}

Integer parse_integer(std::string_view s) {
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) {
        throw std::invalid_argument("malformed integer");
    }
    Integer value = decimal_digits(s);
    return negative ? Integer(-value) : value;
}

std::int64_t to_int64(const Integer& value) {
    if (value > std::numeric_limits<std::int64_t>::max() ||
        value < std::numeric_limits<std::int64_t>::min()) {
        throw std::overflow_error("rational does not fit a 64-bit integer");
    }
    return value.convert_to<std::int64_t>();
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const std::string original(text);
    auto fail = [&]() -> Rational {
        throw std::invalid_argument("malformed rational: \"" + original + "\"");
    };
    if (text.empty()) {
        return fail();
    }
    try {
        if (auto slash = text.find('/'); slash != std::string_view::npos) {
            Integer num = parse_integer(text.substr(0, slash));
            std::string_view den_text = text.substr(slash + 1);
            if (!all_digits(den_text)) {
                return fail();
            }
            Integer den = decimal_digits(den_text);
            if (den == 0) {
                return fail();
            }
            return Rational(num, den);
        }
        if (auto dot = text.find('.'); dot != std::string_view::npos) {
            std::string_view whole = text.substr(0, dot);
            std::string_view frac = text.substr(dot + 1);
            bool negative = !whole.empty() && whole.front() == '-';
            if (!whole.empty() && (whole.front() == '-' || whole.front() == '+')) {
                whole.remove_prefix(1);
            }
            if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
                (!frac.empty() && !all_digits(frac))) {
                return fail();
            }
            Integer scale = 1;
            for (std::size_t i = 0; i < frac.size(); ++i) {
                scale *= 10;
            }
            Integer digits = decimal_digits(std::string(whole) + std::string(frac));
            Rational value(digits, scale);
            return negative ? Rational(-value) : value;
        }
        return Rational(parse_integer(text));
    } catch (const std::exception&) {
        return fail();
    }
}

std::string format_rational(const Rational& value) {
    return boost::multiprecision::numerator(value).str() + "/" +
           boost::multiprecision::denominator(value).str();
}

std::int64_t floor_to_int(const Rational& value) {
    Integer num = boost::multiprecision::numerator(value);
    Integer den = boost::multiprecision::denominator(value);
    Integer q = num / den;  // truncates toward zero
    if (num % den != 0 && num < 0) {
        q -= 1;
    }
    return to_int64(q);
}

std::int64_t ceil_to_int(const Rational& value) { return -floor_to_int(-value); }

}  // namespace phaseless
