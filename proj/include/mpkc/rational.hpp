#ifndef MPKC_RATIONAL_HPP
#define MPKC_RATIONAL_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace mpkc {

// Arbitrary-precision unsigned integer. Little-endian base-2^64 limbs, no
// trailing zero limbs (zero is the empty limb vector).
class BigUint {
public:
    BigUint() = default;
    BigUint(std::uint64_t v);
    static BigUint from_u128(unsigned __int128 v);
    static BigUint parse(const std::string& digits);

    bool is_zero() const { return limbs_.empty(); }
    bool fits_u64() const { return limbs_.size() <= 1; }
    std::uint64_t as_u64() const { return limbs_.empty() ? 0 : limbs_[0]; }

    static int cmp(const BigUint& a, const BigUint& b);
    bool operator==(const BigUint& o) const { return limbs_ == o.limbs_; }

    friend BigUint operator+(const BigUint& a, const BigUint& b);
    friend BigUint operator-(const BigUint& a, const BigUint& b); // requires a >= b
    friend BigUint operator*(const BigUint& a, const BigUint& b);

    static void divmod(const BigUint& a, const BigUint& b, BigUint& q, BigUint& r);
    static BigUint gcd(BigUint a, BigUint b);

    std::size_t bit_length() const;
    std::string str() const;

private:
    void trim();
    bool bit(std::size_t i) const;
    void set_bit(std::size_t i);
    void shl1();
    std::vector<std::uint64_t> limbs_;
};

// Exact signed rational. Always stored in lowest terms with a positive
// denominator; sign_ is -1, 0 or +1 and num_ is zero exactly when sign_ is.
class Rational {
public:
    Rational() = default;
    Rational(long long v);
    Rational(long long num, long long den);
    static Rational parse(const std::string& s); // "p", "-p" or "p/q"

    bool is_zero() const { return sign_ == 0; }
    bool is_positive() const { return sign_ > 0; }
    bool is_negative() const { return sign_ < 0; }

    static int cmp(const Rational& a, const Rational& b);
    bool operator==(const Rational& o) const { return cmp(*this, o) == 0; }
    bool operator!=(const Rational& o) const { return cmp(*this, o) != 0; }
    bool operator<(const Rational& o) const { return cmp(*this, o) < 0; }
    bool operator<=(const Rational& o) const { return cmp(*this, o) <= 0; }
    bool operator>(const Rational& o) const { return cmp(*this, o) > 0; }
    bool operator>=(const Rational& o) const { return cmp(*this, o) >= 0; }

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    Rational operator-() const;
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }

    std::string str() const; // lowest terms, "p" or "p/q"

private:
    Rational(int sign, BigUint num, BigUint den);
    void reduce();
    int sign_ = 0;
    BigUint num_;
    BigUint den_ = BigUint(1);
};

} // namespace mpkc

#endif
