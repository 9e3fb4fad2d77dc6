#include "locsol/rational.hpp"

#include <stdexcept>

namespace locsol {

Rational parse_rational(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("parse_rational: bad literal '" + s + "'");
    q.canonicalize();
    if (q.get_den() == 0)
        throw std::domain_error("parse_rational: zero denominator");
    return q;
}

std::string fraction_string(const Rational& q) {
    return q.get_str();
}

std::string decimal_string(const Rational& q, int places, Round mode) {
    if (places < 0)
        throw std::invalid_argument("decimal_string: negative places");
    Integer pow10;
    mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(places));
    Integer num = q.get_num() * pow10;
    const Integer& den = q.get_den();
    Integer scaled;
    switch (mode) {
        case Round::Down:
            mpz_fdiv_q(scaled.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
            break;
        case Round::Up:
            mpz_cdiv_q(scaled.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
            break;
        case Round::Nearest: {
            Integer num2 = num * 2 + den;  // floor((2*num + den) / (2*den))
            Integer den2 = den * 2;
            mpz_fdiv_q(scaled.get_mpz_t(), num2.get_mpz_t(), den2.get_mpz_t());
            break;
        }
    }
    bool neg = scaled < 0;
    Integer mag = abs(scaled);
    std::string digits = mag.get_str();
    if (static_cast<int>(digits.size()) <= places)
        digits.insert(0, places + 1 - digits.size(), '0');
    std::string out = neg ? "-" : "";
    if (places == 0) return out + digits;
    out += digits.substr(0, digits.size() - places);
    out += ".";
    out += digits.substr(digits.size() - places);
    return out;
}

unsigned long valuation(const Integer& z, const Integer& p, Integer* unit) {
    if (z == 0)
        throw std::domain_error("valuation of zero");
    Integer u;
    unsigned long v = mpz_remove(u.get_mpz_t(), z.get_mpz_t(), p.get_mpz_t());
    if (unit) *unit = u;
    return v;
}

bool is_prime(unsigned long n) {
    if (n < 2) return false;
    Integer z(static_cast<unsigned long>(n));
    return mpz_probab_prime_p(z.get_mpz_t(), 40) != 0;
}

}  // namespace locsol
