#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace schedmech {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Raised when an arithmetic operation has no defined value: inf - inf,
// 0 * inf, division by zero, or an infinite value in a finite-only context.
struct value_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exact rational number extended with +inf / -inf endpoints.
// Finite values are canonical (gcd 1, positive denominator); the order is
// total with -inf < every finite value < +inf. All arithmetic is exact.
class ExtRat {
public:
    enum class Kind { finite, pos_inf, neg_inf };

    ExtRat() : value_(0) {}
    ExtRat(int v) : value_(v) {}
    ExtRat(long v) : value_(v) {}
    ExtRat(long long v) : value_(v) {}
    ExtRat(BigInt v) : value_(std::move(v)) {}
    explicit ExtRat(BigRat v) : value_(std::move(v)) {}

    // num/den, canonicalized; den must be nonzero.
    ExtRat(const BigInt& num, const BigInt& den) {
        if (den == 0)
            throw value_error("rational with zero denominator");
        value_ = BigRat(num) / BigRat(den);
    }

    static ExtRat pos_inf() { return ExtRat(Kind::pos_inf); }
    static ExtRat neg_inf() { return ExtRat(Kind::neg_inf); }

    Kind kind() const { return kind_; }
    bool is_finite() const { return kind_ == Kind::finite; }
    bool is_pos_inf() const { return kind_ == Kind::pos_inf; }
    bool is_neg_inf() const { return kind_ == Kind::neg_inf; }

    BigInt numerator() const {
        require_finite("numerator");
        return boost::multiprecision::numerator(value_);
    }
    BigInt denominator() const {
        require_finite("denominator");
        return boost::multiprecision::denominator(value_);
    }
    const BigRat& rational() const {
        require_finite("rational");
        return value_;
    }

    // -1, 0 or 1; infinities count as their sign.
    int sign() const {
        if (kind_ == Kind::pos_inf) return 1;
        if (kind_ == Kind::neg_inf) return -1;
        return value_.sign();
    }

    ExtRat operator-() const {
        if (kind_ == Kind::pos_inf) return neg_inf();
        if (kind_ == Kind::neg_inf) return pos_inf();
        return ExtRat(BigRat(-value_));
    }

    ExtRat operator+(const ExtRat& o) const {
        if (is_finite() && o.is_finite()) return ExtRat(BigRat(value_ + o.value_));
        if (is_finite()) return o;
        if (o.is_finite()) return *this;
        if (kind_ == o.kind_) return *this;
        throw value_error("inf + -inf is undefined");
    }

    ExtRat operator-(const ExtRat& o) const { return *this + (-o); }

    ExtRat operator*(const ExtRat& o) const {
        if (is_finite() && o.is_finite()) return ExtRat(BigRat(value_ * o.value_));
        int s = sign() * o.sign();
        if (s == 0)
            throw value_error("0 * inf is undefined");
        return s > 0 ? pos_inf() : neg_inf();
    }

    ExtRat operator/(const ExtRat& o) const {
        if (o.is_finite() && o.sign() == 0)
            throw value_error("division by zero");
        if (is_finite() && o.is_finite()) return ExtRat(BigRat(value_ / o.value_));
        if (is_finite()) return ExtRat(0);  // finite / inf
        if (!o.is_finite())
            throw value_error("inf / inf is undefined");
        return sign() * o.sign() > 0 ? pos_inf() : neg_inf();
    }

    ExtRat& operator+=(const ExtRat& o) { return *this = *this + o; }
    ExtRat& operator-=(const ExtRat& o) { return *this = *this - o; }
    ExtRat& operator*=(const ExtRat& o) { return *this = *this * o; }
    ExtRat& operator/=(const ExtRat& o) { return *this = *this / o; }

    ExtRat abs() const { return sign() < 0 ? -*this : *this; }

    // three-way comparison under the total extended order
    int compare(const ExtRat& o) const {
        if (kind_ == o.kind_) {
            if (kind_ != Kind::finite) return 0;
            return value_.compare(o.value_);
        }
        return rank() < o.rank() ? -1 : 1;
    }

    bool operator==(const ExtRat& o) const { return compare(o) == 0; }
    bool operator!=(const ExtRat& o) const { return compare(o) != 0; }
    bool operator<(const ExtRat& o) const { return compare(o) < 0; }
    bool operator<=(const ExtRat& o) const { return compare(o) <= 0; }
    bool operator>(const ExtRat& o) const { return compare(o) > 0; }
    bool operator>=(const ExtRat& o) const { return compare(o) >= 0; }

    // canonical text form: "p", "p/q", "inf" or "-inf"
    std::string str() const;

    // strict grammar: optional sign, digits, optional "/digits"; or inf/-inf.
    // No floating-point literals. Throws value_error on malformed input.
    static ExtRat parse(const std::string& text);

private:
    explicit ExtRat(Kind k) : kind_(k), value_(0) {}

    int rank() const {
        if (kind_ == Kind::neg_inf) return -1;
        return kind_ == Kind::finite ? 0 : 1;
    }

    void require_finite(const char* what) const {
        if (kind_ != Kind::finite)
            throw value_error(std::string(what) + " of infinite value");
    }

    Kind kind_ = Kind::finite;
    BigRat value_;
};

inline ExtRat min(const ExtRat& a, const ExtRat& b) { return a <= b ? a : b; }
inline ExtRat max(const ExtRat& a, const ExtRat& b) { return a >= b ? a : b; }

}  // namespace schedmech
