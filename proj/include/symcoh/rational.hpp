#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace symcoh {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number, always stored in lowest terms with a positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(long long n, long long d) {
        if (d == 0) throw std::domain_error("zero denominator");
        v_ = boost::multiprecision::cpp_rational(n, d);
    }
    explicit Rational(const BigInt& n) : v_(n) {}
    Rational(const BigInt& n, const BigInt& d) {
        if (d == 0) throw std::domain_error("zero denominator");
        v_ = boost::multiprecision::cpp_rational(n, d);
    }

    /// Parses "a" or "a/b" with optional sign. Rejects decimals.
    static Rational parse(const std::string& s) {
        auto slash = s.find('/');
        auto parse_int = [](const std::string& t) {
            if (t.empty()) throw std::invalid_argument("bad rational: empty");
            std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
            if (i == t.size()) throw std::invalid_argument("bad rational: " + t);
            for (std::size_t j = i; j < t.size(); ++j)
                if (t[j] < '0' || t[j] > '9') throw std::invalid_argument("bad rational: " + t);
            return BigInt(t);
        };
        if (slash == std::string::npos) return Rational(parse_int(s));
        return Rational(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
    }

    BigInt num() const { return boost::multiprecision::numerator(v_); }
    BigInt den() const { return boost::multiprecision::denominator(v_); }
    bool is_zero() const { return v_.is_zero(); }
    bool is_integer() const { return den() == 1; }
    int sign() const { return v_.sign(); }

    /// Integer value; throws if not an integer or out of range.
    long long to_int() const {
        if (!is_integer()) throw std::domain_error("not an integer: " + str());
        return num().convert_to<long long>();
    }

    std::string str() const {
        if (is_integer()) return num().str();
        return num().str() + "/" + den().str();
    }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("division by zero");
        v_ /= o.v_;
        return *this;
    }
    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const { Rational r; r.v_ = -v_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    boost::multiprecision::cpp_rational v_;
};

inline Rational factorial(int n) {
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return Rational(r);
}

/// C(m, l) for any integer m via the falling factorial m(m-1)...(m-l+1)/l!.
inline Rational binomial(long long m, int l) {
    if (l < 0) return 0;
    BigInt num = 1;
    for (int i = 0; i < l; ++i) num *= (m - i);
    return Rational(num) / factorial(l);
}

}  // namespace symcoh
