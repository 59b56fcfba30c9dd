#include "pps/bigint.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace pps {

namespace {
constexpr std::uint64_t kBase = 1ull << 32;
}

BigInt::BigInt(long long value) {
    if (value == 0) return;
    sign_ = value > 0 ? 1 : -1;
    // two's-complement safe magnitude, LLONG_MIN included
    std::uint64_t mag = value > 0 ? static_cast<std::uint64_t>(value)
                                  : ~static_cast<std::uint64_t>(value) + 1;
    while (mag != 0) {
        mag_.push_back(static_cast<std::uint32_t>(mag & 0xffffffffu));
        mag >>= 32;
    }
}

void BigInt::trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) sign_ = 0;
}

int BigInt::compare_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

int BigInt::compare(const BigInt& a, const BigInt& b) {
    if (a.sign_ != b.sign_) return a.sign_ < b.sign_ ? -1 : 1;
    return a.sign_ >= 0 ? compare_mag(a.mag_, b.mag_) : -compare_mag(a.mag_, b.mag_);
}

std::vector<std::uint32_t> BigInt::add_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    const auto& lo = a.size() < b.size() ? a : b;
    const auto& hi = a.size() < b.size() ? b : a;
    std::vector<std::uint32_t> out;
    out.reserve(hi.size() + 1);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < hi.size(); ++i) {
        std::uint64_t sum = carry + hi[i] + (i < lo.size() ? lo[i] : 0);
        out.push_back(static_cast<std::uint32_t>(sum & 0xffffffffu));
        carry = sum >> 32;
    }
    if (carry) out.push_back(static_cast<std::uint32_t>(carry));
    return out;
}

// requires |a| >= |b|
std::vector<std::uint32_t> BigInt::sub_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> out;
    out.reserve(a.size());
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t diff = static_cast<std::int64_t>(a[i]) - borrow -
                            (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
        if (diff < 0) {
            diff += static_cast<std::int64_t>(kBase);
            borrow = 1;
        } else {
            borrow = 0;
        }
        out.push_back(static_cast<std::uint32_t>(diff));
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

std::vector<std::uint32_t> BigInt::mul_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<std::uint32_t> out(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::uint64_t carry = 0;
        const std::uint64_t ai = a[i];
        for (std::size_t j = 0; j < b.size(); ++j) {
            std::uint64_t cur = out[i + j] + ai * b[j] + carry;
            out[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        out[i + b.size()] = static_cast<std::uint32_t>(carry);
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

// Knuth algorithm D, base 2^32.
void BigInt::divrem_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                        std::vector<std::uint32_t>& quot, std::vector<std::uint32_t>& rem) {
    quot.clear();
    rem.clear();
    if (b.empty()) throw std::domain_error("BigInt division by zero");
    if (compare_mag(a, b) < 0) {
        rem = a;
        return;
    }
    if (b.size() == 1) {
        const std::uint64_t d = b[0];
        std::uint64_t r = 0;
        quot.assign(a.size(), 0);
        for (std::size_t i = a.size(); i-- > 0;) {
            std::uint64_t cur = (r << 32) | a[i];
            quot[i] = static_cast<std::uint32_t>(cur / d);
            r = cur % d;
        }
        while (!quot.empty() && quot.back() == 0) quot.pop_back();
        if (r) rem.push_back(static_cast<std::uint32_t>(r));
        return;
    }

    // normalize so the divisor's top limb has its high bit set
    int shift = 0;
    for (std::uint32_t top = b.back(); !(top & 0x80000000u); top <<= 1) ++shift;
    const std::size_t n = b.size();
    const std::size_t m = a.size() - n;
    std::vector<std::uint32_t> u(a.size() + 1, 0), v(n, 0);
    for (std::size_t i = a.size(); i-- > 0;) {
        u[i] |= static_cast<std::uint32_t>((static_cast<std::uint64_t>(a[i]) << shift) & 0xffffffffu);
        if (shift && i + 1 <= a.size()) u[i + 1] |= static_cast<std::uint32_t>(
            static_cast<std::uint64_t>(a[i]) >> (32 - shift));
    }
    for (std::size_t i = n; i-- > 0;) {
        v[i] |= static_cast<std::uint32_t>((static_cast<std::uint64_t>(b[i]) << shift) & 0xffffffffu);
        if (shift && i + 1 < n) v[i + 1] |= static_cast<std::uint32_t>(
            static_cast<std::uint64_t>(b[i]) >> (32 - shift));
    }

    quot.assign(m + 1, 0);
    for (std::size_t j = m + 1; j-- > 0;) {
        std::uint64_t numer = (static_cast<std::uint64_t>(u[j + n]) << 32) | u[j + n - 1];
        std::uint64_t qhat = numer / v[n - 1];
        std::uint64_t rhat = numer % v[n - 1];
        while (qhat >= kBase ||
               qhat * v[n - 2] > ((rhat << 32) | u[j + n - 2])) {
            --qhat;
            rhat += v[n - 1];
            if (rhat >= kBase) break;
        }
        // u[j..j+n] -= qhat * v
        std::int64_t borrow = 0;
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < n; ++i) {
            std::uint64_t prod = qhat * v[i] + carry;
            carry = prod >> 32;
            std::int64_t diff = static_cast<std::int64_t>(u[j + i]) - borrow -
                                static_cast<std::int64_t>(prod & 0xffffffffu);
            if (diff < 0) {
                diff += static_cast<std::int64_t>(kBase);
                borrow = 1;
            } else {
                borrow = 0;
            }
            u[j + i] = static_cast<std::uint32_t>(diff);
        }
        std::int64_t top = static_cast<std::int64_t>(u[j + n]) - borrow -
                           static_cast<std::int64_t>(carry);
        if (top < 0) {
            // qhat was one too large: add v back
            --qhat;
            std::uint64_t c = 0;
            for (std::size_t i = 0; i < n; ++i) {
                std::uint64_t sum = static_cast<std::uint64_t>(u[j + i]) + v[i] + c;
                u[j + i] = static_cast<std::uint32_t>(sum & 0xffffffffu);
                c = sum >> 32;
            }
            top += static_cast<std::int64_t>(c) + static_cast<std::int64_t>(kBase);
        }
        u[j + n] = static_cast<std::uint32_t>(top);
        quot[j] = static_cast<std::uint32_t>(qhat);
    }
    while (!quot.empty() && quot.back() == 0) quot.pop_back();

    rem.assign(n, 0);
    if (shift) {
        for (std::size_t i = 0; i < n; ++i)
            rem[i] = static_cast<std::uint32_t>(
                (u[i] >> shift) |
                ((static_cast<std::uint64_t>(u[i + 1]) << (32 - shift)) & 0xffffffffu));
    } else {
        for (std::size_t i = 0; i < n; ++i) rem[i] = u[i];
    }
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
}

BigInt BigInt::abs() const {
    BigInt out = *this;
    if (out.sign_ < 0) out.sign_ = 1;
    return out;
}

BigInt BigInt::operator-() const {
    BigInt out = *this;
    out.sign_ = -out.sign_;
    return out;
}

BigInt& BigInt::operator+=(const BigInt& rhs) {
    if (rhs.sign_ == 0) return *this;
    if (sign_ == 0) return *this = rhs;
    if (sign_ == rhs.sign_) {
        mag_ = add_mag(mag_, rhs.mag_);
        return *this;
    }
    int cmp = compare_mag(mag_, rhs.mag_);
    if (cmp == 0) {
        sign_ = 0;
        mag_.clear();
    } else if (cmp > 0) {
        mag_ = sub_mag(mag_, rhs.mag_);
    } else {
        mag_ = sub_mag(rhs.mag_, mag_);
        sign_ = rhs.sign_;
    }
    return *this;
}

BigInt& BigInt::operator-=(const BigInt& rhs) { return *this += -rhs; }

BigInt& BigInt::operator*=(const BigInt& rhs) {
    sign_ *= rhs.sign_;
    mag_ = mul_mag(mag_, rhs.mag_);
    if (mag_.empty()) sign_ = 0;
    return *this;
}

void BigInt::divrem(const BigInt& a, const BigInt& b, BigInt& quot, BigInt& rem) {
    std::vector<std::uint32_t> q, r;
    divrem_mag(a.mag_, b.mag_, q, r);
    quot.mag_ = std::move(q);
    quot.sign_ = quot.mag_.empty() ? 0 : a.sign_ * b.sign_;
    rem.mag_ = std::move(r);
    rem.sign_ = rem.mag_.empty() ? 0 : a.sign_;
}

BigInt& BigInt::operator/=(const BigInt& rhs) {
    BigInt q, r;
    divrem(*this, rhs, q, r);
    return *this = std::move(q);
}

BigInt& BigInt::operator%=(const BigInt& rhs) {
    BigInt q, r;
    divrem(*this, rhs, q, r);
    return *this = std::move(r);
}

BigInt BigInt::from_string(const std::string& decimal) {
    std::size_t pos = 0;
    int sign = 1;
    if (pos < decimal.size() && (decimal[pos] == '+' || decimal[pos] == '-')) {
        if (decimal[pos] == '-') sign = -1;
        ++pos;
    }
    if (pos == decimal.size()) throw std::invalid_argument("BigInt: empty numeral");
    BigInt out;
    const BigInt chunk_base(1000000000ll);
    while (pos < decimal.size()) {
        std::size_t take = std::min<std::size_t>(9, decimal.size() - pos);
        long long chunk = 0;
        for (std::size_t i = 0; i < take; ++i, ++pos) {
            char c = decimal[pos];
            if (c < '0' || c > '9') throw std::invalid_argument("BigInt: bad digit");
            chunk = chunk * 10 + (c - '0');
        }
        long long scale = 1;
        for (std::size_t i = 0; i < take; ++i) scale *= 10;
        out *= BigInt(scale);
        out += BigInt(chunk);
    }
    if (sign < 0) out = -out;
    return out;
}

std::string BigInt::to_string() const {
    if (is_zero()) return "0";
    std::vector<std::uint32_t> mag = mag_;
    std::string digits;
    const std::vector<std::uint32_t> chunk_base = {1000000000u};
    while (!mag.empty()) {
        std::vector<std::uint32_t> q, r;
        divrem_mag(mag, chunk_base, q, r);
        std::uint32_t chunk = r.empty() ? 0u : r[0];
        for (int i = 0; i < 9; ++i) {
            digits.push_back(static_cast<char>('0' + chunk % 10));
            chunk /= 10;
        }
        mag = std::move(q);
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    if (sign_ < 0) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

double BigInt::to_double() const {
    double out = 0;
    for (std::size_t i = mag_.size(); i-- > 0;) out = out * 4294967296.0 + mag_[i];
    return sign_ < 0 ? -out : out;
}

std::ostream& operator<<(std::ostream& os, const BigInt& v) { return os << v.to_string(); }

BigInt gcd(BigInt a, BigInt b) {
    a = a.abs();
    b = b.abs();
    while (!b.is_zero()) {
        BigInt r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

} // namespace pps
