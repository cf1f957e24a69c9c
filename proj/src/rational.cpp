#include "mpkc/rational.hpp"

#include <algorithm>
#include <cassert>

#include "mpkc/errors.hpp"

namespace mpkc {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

BigUint::BigUint(u64 v) {
    if (v != 0) limbs_.push_back(v);
}

BigUint BigUint::from_u128(u128 v) {
    BigUint r;
    if (v != 0) {
        r.limbs_.push_back(static_cast<u64>(v));
        u64 hi = static_cast<u64>(v >> 64);
        if (hi != 0) r.limbs_.push_back(hi);
    }
    return r;
}

void BigUint::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

int BigUint::cmp(const BigUint& a, const BigUint& b) {
    if (a.limbs_.size() != b.limbs_.size())
        return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
    for (std::size_t i = a.limbs_.size(); i-- > 0;) {
        if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
    }
    return 0;
}

BigUint operator+(const BigUint& a, const BigUint& b) {
    BigUint r;
    const std::size_t n = std::max(a.limbs_.size(), b.limbs_.size());
    r.limbs_.reserve(n + 1);
    u128 carry = 0;
    for (std::size_t i = 0; i < n; ++i) {
        u128 s = carry;
        if (i < a.limbs_.size()) s += a.limbs_[i];
        if (i < b.limbs_.size()) s += b.limbs_[i];
        r.limbs_.push_back(static_cast<u64>(s));
        carry = s >> 64;
    }
    if (carry) r.limbs_.push_back(static_cast<u64>(carry));
    return r;
}

BigUint operator-(const BigUint& a, const BigUint& b) {
    assert(BigUint::cmp(a, b) >= 0);
    BigUint r;
    r.limbs_.reserve(a.limbs_.size());
    u128 borrow = 0;
    for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
        u128 sub = borrow;
        if (i < b.limbs_.size()) sub += b.limbs_[i];
        u128 ai = a.limbs_[i];
        if (ai >= sub) {
            r.limbs_.push_back(static_cast<u64>(ai - sub));
            borrow = 0;
        } else {
            r.limbs_.push_back(static_cast<u64>((u128(1) << 64) + ai - sub));
            borrow = 1;
        }
    }
    r.trim();
    return r;
}

BigUint operator*(const BigUint& a, const BigUint& b) {
    if (a.is_zero() || b.is_zero()) return BigUint();
    BigUint r;
    r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
    for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
        u128 carry = 0;
        for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
            u128 cur = static_cast<u128>(a.limbs_[i]) * b.limbs_[j] + r.limbs_[i + j] + carry;
            r.limbs_[i + j] = static_cast<u64>(cur);
            carry = cur >> 64;
        }
        r.limbs_[i + b.limbs_.size()] += static_cast<u64>(carry);
    }
    r.trim();
    return r;
}

std::size_t BigUint::bit_length() const {
    if (limbs_.empty()) return 0;
    std::size_t top = 64 - static_cast<std::size_t>(__builtin_clzll(limbs_.back()));
    return (limbs_.size() - 1) * 64 + top;
}

bool BigUint::bit(std::size_t i) const {
    std::size_t w = i / 64;
    if (w >= limbs_.size()) return false;
    return (limbs_[w] >> (i % 64)) & 1;
}

void BigUint::set_bit(std::size_t i) {
    std::size_t w = i / 64;
    if (w >= limbs_.size()) limbs_.resize(w + 1, 0);
    limbs_[w] |= u64(1) << (i % 64);
}

void BigUint::shl1() {
    u64 carry = 0;
    for (auto& limb : limbs_) {
        u64 next = limb >> 63;
        limb = (limb << 1) | carry;
        carry = next;
    }
    if (carry) limbs_.push_back(carry);
}

// Bit-by-bit long division; quadratic, which is plenty at the sizes that occur here.
void BigUint::divmod(const BigUint& a, const BigUint& b, BigUint& q, BigUint& r) {
    if (b.is_zero()) throw InputError("division by zero");
    q = BigUint();
    r = BigUint();
    if (cmp(a, b) < 0) {
        r = a;
        return;
    }
    for (std::size_t i = a.bit_length(); i-- > 0;) {
        r.shl1();
        if (a.bit(i)) r.set_bit(0);
        if (cmp(r, b) >= 0) {
            r = r - b;
            q.set_bit(i);
        }
    }
}

BigUint BigUint::gcd(BigUint a, BigUint b) {
    while (!b.is_zero()) {
        BigUint q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

BigUint BigUint::parse(const std::string& digits) {
    if (digits.empty()) throw InputError("empty integer literal");
    BigUint r;
    for (char c : digits) {
        if (c < '0' || c > '9') throw InputError("bad digit in integer literal: " + digits);
        u128 carry = static_cast<u128>(c - '0');
        for (auto& limb : r.limbs_) {
            u128 cur = static_cast<u128>(limb) * 10 + carry;
            limb = static_cast<u64>(cur);
            carry = cur >> 64;
        }
        while (carry) {
            r.limbs_.push_back(static_cast<u64>(carry));
            carry >>= 64;
        }
    }
    return r;
}

std::string BigUint::str() const {
    if (is_zero()) return "0";
    static constexpr u64 kChunk = 1000000000000000000ULL; // 10^18
    std::vector<u64> chunks;
    BigUint cur = *this;
    while (!cur.is_zero()) {
        u128 rem = 0;
        for (std::size_t i = cur.limbs_.size(); i-- > 0;) {
            u128 v = (rem << 64) | cur.limbs_[i];
            cur.limbs_[i] = static_cast<u64>(v / kChunk);
            rem = v % kChunk;
        }
        cur.trim();
        chunks.push_back(static_cast<u64>(rem));
    }
    std::string out = std::to_string(chunks.back());
    for (std::size_t i = chunks.size() - 1; i-- > 0;) {
        std::string part = std::to_string(chunks[i]);
        out += std::string(18 - part.size(), '0') + part;
    }
    return out;
}

namespace {

u128 gcd_u128(u128 a, u128 b) {
    while (b) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

} // namespace

Rational::Rational(long long v) {
    if (v == 0) return;
    sign_ = v > 0 ? 1 : -1;
    num_ = BigUint(static_cast<u64>(v > 0 ? v : -v));
}

Rational::Rational(long long num, long long den) {
    if (den == 0) throw InputError("rational with zero denominator");
    int s = 1;
    if (num < 0) { s = -s; num = -num; }
    if (den < 0) { s = -s; den = -den; }
    if (num == 0) return;
    sign_ = s;
    num_ = BigUint(static_cast<u64>(num));
    den_ = BigUint(static_cast<u64>(den));
    reduce();
}

Rational::Rational(int sign, BigUint num, BigUint den)
    : sign_(sign), num_(std::move(num)), den_(std::move(den)) {
    if (num_.is_zero()) {
        sign_ = 0;
        den_ = BigUint(1);
    } else {
        reduce();
    }
}

void Rational::reduce() {
    BigUint g = BigUint::gcd(num_, den_);
    if (!(g == BigUint(1))) {
        BigUint q, r;
        BigUint::divmod(num_, g, q, r);
        num_ = std::move(q);
        BigUint::divmod(den_, g, q, r);
        den_ = std::move(q);
    }
}

Rational Rational::parse(const std::string& s) {
    if (s.empty()) throw InputError("empty rational literal");
    std::size_t pos = 0;
    int sign = 1;
    if (s[0] == '-') { sign = -1; pos = 1; }
    else if (s[0] == '+') { pos = 1; }
    std::size_t slash = s.find('/', pos);
    BigUint num, den(1);
    if (slash == std::string::npos) {
        num = BigUint::parse(s.substr(pos));
    } else {
        num = BigUint::parse(s.substr(pos, slash - pos));
        den = BigUint::parse(s.substr(slash + 1));
        if (den.is_zero()) throw InputError("rational with zero denominator: " + s);
    }
    int effective_sign = num.is_zero() ? 0 : sign;
    return Rational(effective_sign, std::move(num), std::move(den));
}

int Rational::cmp(const Rational& a, const Rational& b) {
    if (a.sign_ != b.sign_) return a.sign_ < b.sign_ ? -1 : 1;
    if (a.sign_ == 0) return 0;
    int mag;
    if (a.num_.fits_u64() && a.den_.fits_u64() && b.num_.fits_u64() && b.den_.fits_u64()) {
        u128 lhs = static_cast<u128>(a.num_.as_u64()) * b.den_.as_u64();
        u128 rhs = static_cast<u128>(b.num_.as_u64()) * a.den_.as_u64();
        mag = lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
    } else {
        mag = BigUint::cmp(a.num_ * b.den_, b.num_ * a.den_);
    }
    return a.sign_ > 0 ? mag : -mag;
}

Rational operator+(const Rational& a, const Rational& b) {
    if (a.sign_ == 0) return b;
    if (b.sign_ == 0) return a;

    // Fast path: all magnitudes below 2^63, so cross products fit in 126 bits
    // and their sum in 127.
    constexpr u64 kSmall = u64(1) << 63;
    if (a.num_.fits_u64() && a.den_.fits_u64() && b.num_.fits_u64() && b.den_.fits_u64() &&
        a.num_.as_u64() < kSmall && a.den_.as_u64() < kSmall &&
        b.num_.as_u64() < kSmall && b.den_.as_u64() < kSmall) {
        u128 l = static_cast<u128>(a.num_.as_u64()) * b.den_.as_u64();
        u128 r = static_cast<u128>(b.num_.as_u64()) * a.den_.as_u64();
        u128 den = static_cast<u128>(a.den_.as_u64()) * b.den_.as_u64();
        int sign;
        u128 num;
        if (a.sign_ == b.sign_) {
            sign = a.sign_;
            num = l + r;
        } else if (l == r) {
            return Rational();
        } else if (l > r) {
            sign = a.sign_;
            num = l - r;
        } else {
            sign = b.sign_;
            num = r - l;
        }
        u128 g = gcd_u128(num, den);
        return Rational(sign, BigUint::from_u128(num / g), BigUint::from_u128(den / g));
    }

    BigUint l = a.num_ * b.den_;
    BigUint r = b.num_ * a.den_;
    BigUint den = a.den_ * b.den_;
    if (a.sign_ == b.sign_) return Rational(a.sign_, l + r, std::move(den));
    int c = BigUint::cmp(l, r);
    if (c == 0) return Rational();
    if (c > 0) return Rational(a.sign_, l - r, std::move(den));
    return Rational(b.sign_, r - l, std::move(den));
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational Rational::operator-() const {
    Rational r = *this;
    r.sign_ = -r.sign_;
    return r;
}

Rational operator*(const Rational& a, const Rational& b) {
    if (a.sign_ == 0 || b.sign_ == 0) return Rational();
    return Rational(a.sign_ * b.sign_, a.num_ * b.num_, a.den_ * b.den_);
}

std::string Rational::str() const {
    if (sign_ == 0) return "0";
    std::string out = sign_ < 0 ? "-" : "";
    out += num_.str();
    if (!(den_ == BigUint(1))) out += "/" + den_.str();
    return out;
}

} // namespace mpkc
