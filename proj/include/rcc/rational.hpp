#pragma once

// Exact rational scalar on top of GMP. All engine arithmetic goes through
// this type; there is no floating point anywhere in the computation path.
//
// Invariants kept at all times:
//   - lowest terms (gcd(num, den) = 1)
//   - positive denominator (sign lives on the numerator)
// mpq_class arithmetic preserves canonical form, but two-argument
// construction does not (mpq_class(22,8) stays 22/8), so every constructor
// that could produce a non-canonical value calls canonicalize() explicitly.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace rcc {

using Integer = mpz_class;

class Rational {
public:
    Rational() : q_(0) {}
    Rational(long v) : q_(v) {}                       // NOLINT: implicit by design
    Rational(const Integer& v) : q_(v) {}             // NOLINT
    Rational(const Integer& num, const Integer& den) : q_(num, den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        q_.canonicalize();
    }
    Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

    static Rational from_string(const std::string& s) {
        mpq_class q;
        if (q.set_str(s, 10) != 0)
            throw std::invalid_argument("Rational: cannot parse '" + s + "'");
        if (q.get_den() == 0)
            throw std::domain_error("Rational: zero denominator in '" + s + "'");
        q.canonicalize();
        Rational r;
        r.q_ = q;
        return r;
    }

    const Integer num() const { return q_.get_num(); }
    const Integer den() const { return q_.get_den(); }

    bool is_zero() const { return q_ == 0; }
    bool is_integer() const { return q_.get_den() == 1; }

    // Throws unless the value is an integer; used by the count wrappers that
    // must fail loudly on a fractional "count".
    Integer to_integer() const {
        if (!is_integer())
            throw std::domain_error("Rational: " + to_string() + " is not an integer");
        return q_.get_num();
    }

    std::string to_string() const {
        if (is_integer()) return q_.get_num().get_str();
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.q_ == 0) throw std::domain_error("Rational: division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }
    friend Rational operator-(const Rational& a) { Rational r; r.q_ = -a.q_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

private:
    mpq_class q_;
};

}  // namespace rcc
