#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace pps {

/// Arbitrary-precision signed integer: sign + little-endian 32-bit limbs.
/// Supports exactly what fraction-free elimination and integer polynomial
/// arithmetic need: ring operations, truncated division, comparisons and
/// decimal conversion. Division satisfies a == (a / b) * b + a % b with
/// |a % b| < |b| and the remainder carrying the sign of a.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long value);

    static BigInt from_string(const std::string& decimal);
    std::string to_string() const;
    double to_double() const;

    bool is_zero() const { return mag_.empty(); }
    int sign() const { return sign_; }
    BigInt abs() const;

    BigInt operator-() const;
    BigInt& operator+=(const BigInt& rhs);
    BigInt& operator-=(const BigInt& rhs);
    BigInt& operator*=(const BigInt& rhs);
    BigInt& operator/=(const BigInt& rhs);
    BigInt& operator%=(const BigInt& rhs);

    friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
    friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
    friend BigInt operator*(BigInt a, const BigInt& b) { return a *= b; }
    friend BigInt operator/(BigInt a, const BigInt& b) { return a /= b; }
    friend BigInt operator%(BigInt a, const BigInt& b) { return a %= b; }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.sign_ == b.sign_ && a.mag_ == b.mag_;
    }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
    friend bool operator<(const BigInt& a, const BigInt& b) { return compare(a, b) < 0; }
    friend bool operator>(const BigInt& a, const BigInt& b) { return compare(a, b) > 0; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return compare(a, b) <= 0; }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return compare(a, b) >= 0; }

    /// Quotient and remainder in one pass (truncated toward zero).
    static void divrem(const BigInt& a, const BigInt& b, BigInt& quot, BigInt& rem);

private:
    static int compare(const BigInt& a, const BigInt& b);
    static int compare_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> mul_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static void divrem_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                           std::vector<std::uint32_t>& quot, std::vector<std::uint32_t>& rem);
    void trim();

    int sign_ = 0;                    // -1, 0, +1
    std::vector<std::uint32_t> mag_;  // little-endian, no leading zero limb, empty iff zero
};

std::ostream& operator<<(std::ostream& os, const BigInt& v);

BigInt gcd(BigInt a, BigInt b);

} // namespace pps
