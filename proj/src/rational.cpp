#include "hrum/rational.hpp"

#include <cctype>
#include <charconv>
#include <stdexcept>

namespace hrum {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

[[noreturn]] void malformed(std::string_view text) {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
}

mpz_class pow10(long exponent) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(exponent));
    return r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (s.empty()) malformed(text);

    bool negative = false;
    if (s.front() == '+' || s.front() == '-') {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }

    Rational result;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        auto num = s.substr(0, slash);
        auto den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) malformed(text);
        mpz_class n(std::string(num), 10), d(std::string(den), 10);
        if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
        result = Rational(n, d);
    } else {
        long exponent = 0;
        if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
            auto exp_text = s.substr(e + 1);
            s = s.substr(0, e);
            bool exp_negative = false;
            if (!exp_text.empty() && (exp_text.front() == '+' || exp_text.front() == '-')) {
                exp_negative = exp_text.front() == '-';
                exp_text.remove_prefix(1);
            }
            if (!all_digits(exp_text) || exp_text.size() > 6) malformed(text);
            std::from_chars(exp_text.data(), exp_text.data() + exp_text.size(), exponent);
            if (exp_negative) exponent = -exponent;
        }
        std::string digits;
        long scale = 0;
        if (auto dot = s.find('.'); dot != std::string_view::npos) {
            auto whole = s.substr(0, dot);
            auto frac = s.substr(dot + 1);
            if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) ||
                (whole.empty() && frac.empty())) {
                malformed(text);
            }
            digits = std::string(whole) + std::string(frac);
            scale = static_cast<long>(frac.size());
        } else {
            if (!all_digits(s)) malformed(text);
            digits = std::string(s);
        }
        mpz_class mantissa(digits, 10);
        long shift = exponent - scale;
        if (shift >= 0) {
            result = Rational(mantissa * pow10(shift));
        } else {
            result = Rational(mantissa, pow10(-shift));
        }
    }
    result.canonicalize();
    return negative ? Rational(-result) : result;
}

std::string to_string(const Rational& value) {
    Rational v = value;
    v.canonicalize();
    return v.get_str();
}

std::string to_decimal(const Rational& value, int digits) {
    if (digits < 0) throw std::invalid_argument("negative digit count");
    Rational v = value;
    v.canonicalize();
    const bool negative = v < 0;
    if (negative) v = -v;
    mpz_class scale = pow10(digits);
    // round half away from zero
    mpz_class scaled = (v.get_num() * scale * 2 + v.get_den()) / (v.get_den() * 2);
    std::string s = scaled.get_str();
    if (digits > 0) {
        if (s.size() <= static_cast<std::size_t>(digits)) {
            s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
        }
        s.insert(s.size() - static_cast<std::size_t>(digits), ".");
    }
    if (negative && scaled != 0) s.insert(0, "-");
    return s;
}

Tolerance::Tolerance(Rational epsilon) : epsilon_(std::move(epsilon)) {
    epsilon_.canonicalize();
    if (epsilon_ < 0) throw std::invalid_argument("tolerance must be nonnegative");
}

bool Tolerance::equal(const Rational& lhs, const Rational& rhs) const {
    if (exact()) return lhs == rhs;
    return abs(Rational(lhs - rhs)) <= epsilon_;
}

}  // namespace hrum
