#include "mzv/rational.hpp"

#include <stdexcept>
#include <string>

namespace mzv {

Rat::Rat(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::domain_error("zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    q_ /= o.q_;
    return *this;
}

Rat Rat::parse(std::string_view text) {
    const std::string s(text);
    const auto slash = s.find('/');
    mpz_class num, den = 1;
    if (num.set_str(s.substr(0, slash), 10) != 0) throw std::invalid_argument("bad rational: " + s);
    if (slash != std::string::npos && den.set_str(s.substr(slash + 1), 10) != 0)
        throw std::invalid_argument("bad rational: " + s);
    return Rat(num, den);
}

}  // namespace mzv
