#include "hyperred/rational.hpp"

#include <cctype>

#include "hyperred/errors.hpp"

namespace hyperred {

Rat make_rational(long num, long den) {
    return make_rational(Int(num), Int(den));
}

Rat make_rational(const Int& num, const Int& den) {
    if (den == 0) throw ParseError("rational with zero denominator");
    Rat v(num, den);
    v.canonicalize();
    return v;
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

Int parse_int_strict(std::string_view s, std::string_view whole) {
    bool neg = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        neg = (s.front() == '-');
        s.remove_prefix(1);
    }
    if (!all_digits(s))
        throw ParseError("not an exact rational: \"" + std::string(whole) + "\"");
    Int v(std::string(s), 10);
    return neg ? Int(-v) : v;
}

}  // namespace

Rat parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rat(parse_int_strict(text, text));
    const Int num = parse_int_strict(text.substr(0, slash), text);
    std::string_view den_part = text.substr(slash + 1);
    if (!all_digits(den_part))
        throw ParseError("denominator must be a positive integer: \"" + std::string(text) + "\"");
    const Int den(std::string(den_part), 10);
    if (den == 0) throw ParseError("zero denominator: \"" + std::string(text) + "\"");
    return make_rational(num, den);
}

std::string format_rational(const Rat& v) {
    return v.get_num().get_str() + "/" + v.get_den().get_str();
}

bool is_integer(const Rat& v) {
    return v.get_den() == 1;
}

Int to_integer(const Rat& v) {
    if (!is_integer(v)) throw Error("expected an integer, got " + format_rational(v));
    return v.get_num();
}

Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Rat pow_rat(const Rat& base, unsigned long e) {
    Rat r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num().get_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den().get_mpz_t(), e);
    return r;
}

}  // namespace hyperred
