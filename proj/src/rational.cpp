#include "cuttree/rational.hpp"

#include <cctype>

#include "cuttree/errors.hpp"

namespace cuttree {
namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

[[noreturn]] void bad_number(std::string_view text) {
    throw InputError("not a rational number: '" + std::string(text) + "'");
}

}  // namespace

Rational::Rational(long num, long den) : q_(num, den) {
    if (den == 0) throw InputError("zero denominator");
    q_.canonicalize();
}

Rational::Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }

    mpq_class q;
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        const auto num = body.substr(0, slash);
        const auto den = body.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) bad_number(text);
        mpz_class d(std::string(den), 10);
        if (d == 0) bad_number(text);
        q = mpq_class(mpz_class(std::string(num), 10), d);
    } else {
        const auto dot = body.find('.');
        std::string_view whole = body.substr(0, dot);
        std::string_view frac = dot == std::string_view::npos ? std::string_view{} : body.substr(dot + 1);
        if (whole.empty() && frac.empty()) bad_number(text);
        if (!whole.empty() && !all_digits(whole)) bad_number(text);
        if (dot != std::string_view::npos && !frac.empty() && !all_digits(frac)) bad_number(text);
        if (dot != std::string_view::npos && frac.empty() && whole.empty()) bad_number(text);

        std::string digits(whole);
        digits += frac;
        if (digits.empty()) bad_number(text);
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
        q = mpq_class(mpz_class(digits, 10), scale);
    }
    q.canonicalize();
    if (negative) q = -q;
    return Rational(std::move(q));
}

std::string Rational::to_string() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::string Rational::to_decimal(int places) const {
    if (places < 0) places = 0;
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(places));
    const mpz_class num = abs(q_.get_num()) * scale;
    const mpz_class& den = q_.get_den();
    // round half away from zero: floor((2*num + den) / (2*den))
    mpz_class rounded = (2 * num + den) / (2 * den);

    std::string digits = rounded.get_str();
    if (places > 0) {
        if (digits.size() <= static_cast<std::size_t>(places))
            digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
        digits.insert(digits.size() - static_cast<std::size_t>(places), ".");
    }
    if (sign() < 0 && rounded != 0) digits.insert(0, "-");
    return digits;
}

ExtRational ExtRational::parse(std::string_view text) {
    if (text == "inf" || text == "+inf" || text == "infinity") return infinity();
    return ExtRational(Rational::parse(text));
}

const Rational& ExtRational::finite() const {
    if (!value_) throw InputError("expected a finite value, got infinity");
    return *value_;
}

std::string ExtRational::to_string() const { return value_ ? value_->to_string() : "inf"; }

std::string ExtRational::to_decimal(int places) const {
    return value_ ? value_->to_decimal(places) : "inf";
}

}  // namespace cuttree
