#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hecke {

// Exact rational number, always reduced, denominator > 0, zero stored as 0/1.
// Thin value wrapper over GMP's mpq_class; we keep it so the canonical-form
// invariants and the decimal-string JSON interface live in one place.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long num, long den) : v_(num, den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

    static Rational from_strings(const std::string& num, const std::string& den) {
        mpq_class v{mpz_class(num), mpz_class(den)};
        if (v.get_den() == 0) throw std::domain_error("Rational: zero denominator");
        v.canonicalize();
        return Rational(v);
    }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const { return Rational(mpq_class(-v_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

    // Integer power; negative exponents invert (error on zero base).
    Rational pow(long e) const {
        if (e == 0) return Rational(1);
        if (is_zero()) {
            if (e < 0) throw std::domain_error("Rational: zero raised to negative power");
            return Rational(0);
        }
        mpq_class base = v_;
        if (e < 0) {
            base = mpq_class(v_.get_den(), v_.get_num());
            base.canonicalize();  // mpq ops require den > 0
        }
        unsigned long k = static_cast<unsigned long>(e > 0 ? e : -e);
        mpq_class acc(1);
        mpq_class sq = base;
        while (k) {
            if (k & 1) acc *= sq;
            sq *= sq;
            k >>= 1;
        }
        return Rational(acc);
    }

    std::string num_string() const { return v_.get_num().get_str(); }
    std::string den_string() const { return v_.get_den().get_str(); }

    // "n" for integers, "n/d" otherwise.
    std::string str() const {
        if (is_integer()) return num_string();
        return num_string() + "/" + den_string();
    }

    const mpq_class& raw() const { return v_; }

private:
    mpq_class v_;
};

}  // namespace hecke
