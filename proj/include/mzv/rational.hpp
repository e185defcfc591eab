#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace mzv {

/// Exact rational number, always gcd-reduced with a positive denominator.
class Rat {
public:
    Rat() = default;
    Rat(long n) : q_(n) {}  // NOLINT(google-explicit-constructor)
    Rat(const mpz_class& num, const mpz_class& den);
    explicit Rat(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    /// "p", "-p/q"; throws std::invalid_argument on malformed text or zero denominator.
    static Rat parse(std::string_view text);

    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }
    const mpq_class& value() const { return q_; }

    bool is_zero() const { return sgn(q_) == 0; }
    int sign() const { return sgn(q_); }
    double to_double() const { return q_.get_d(); }
    std::string str() const { return q_.get_str(); }

    Rat operator-() const { return Rat(mpq_class(-q_)); }
    Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
    Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
    Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

private:
    mpq_class q_;
};

}  // namespace mzv
