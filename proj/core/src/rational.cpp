#include "hurwitz/rational.hpp"

#include <stdexcept>

namespace hurwitz {

std::string to_string(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

Rational ratio(const Integer& num, const Integer& den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational parse_rational(std::string_view text) {
    std::string s(text);
    auto slash = s.find('/');
    Rational q;
    try {
        if (slash == std::string::npos) {
            q = Rational(Integer(s, 10));
        } else {
            Integer num(s.substr(0, slash), 10);
            Integer den(s.substr(slash + 1), 10);
            if (den == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
            q = Rational(num, den);
        }
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument("cannot parse rational '" + s + "'");
    }
    q.canonicalize();
    return q;
}

Integer factorial(unsigned n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Integer binomial(unsigned n, unsigned k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Integer ipow(const Integer& base, unsigned exp) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

}  // namespace hurwitz
