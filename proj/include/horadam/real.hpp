/*
 * Copyright 2026 The horadam Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef HORADAM_REAL_HPP
#define HORADAM_REAL_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>

#include <mpfr.h>

#include "horadam/numeric.hpp"

namespace horadam
{

using PrecisionBits = unsigned;

/// Extra mantissa bits carried internally above a caller's requested precision.
inline constexpr PrecisionBits kGuardBits = 64;

/// Smallest precision any public numeric operation accepts.
inline constexpr PrecisionBits kMinPrecisionBits = 16;

/// Throws DomainError when bits < kMinPrecisionBits.
void require_precision(PrecisionBits bits);

/// Arbitrary-precision binary floating point with a per-value mantissa size.
///
/// Every value owns its precision; there is no process-wide default. Binary
/// operations round to the larger precision of the two operands, and all
/// rounding is to nearest.
class Real
{
public:
    explicit Real(PrecisionBits bits);
    Real(long value, PrecisionBits bits);
    Real(const Integer& value, PrecisionBits bits);
    Real(const Rational& value, PrecisionBits bits);

    Real(const Real& other);
    Real(Real&& other) noexcept;
    Real& operator=(const Real& other);
    Real& operator=(Real&& other) noexcept;
    ~Real();

    PrecisionBits bits() const;

    /// Copy rounded to a different precision.
    Real rounded(PrecisionBits bits) const;

    mpfr_srcptr get() const { return value_; }
    mpfr_ptr get() { return value_; }

    double to_double() const;
    bool is_zero() const;
    int sign() const;

    /// Scientific notation with `digits` significant digits.
    std::string str(std::size_t digits) const;

    /// Significant decimal digits that represent `bits` of mantissa.
    static std::size_t digits_for(PrecisionBits bits);

    /// 2^exponent exactly.
    static Real exp2i(long exponent, PrecisionBits bits);

    Real& operator+=(const Real& rhs);
    Real& operator-=(const Real& rhs);
    Real& operator*=(const Real& rhs);
    Real& operator/=(const Real& rhs);

private:
    mpfr_t value_;
};

Real operator-(const Real& x);
Real operator+(const Real& lhs, const Real& rhs);
Real operator-(const Real& lhs, const Real& rhs);
Real operator*(const Real& lhs, const Real& rhs);
Real operator/(const Real& lhs, const Real& rhs);
Real operator+(const Real& lhs, long rhs);
Real operator-(const Real& lhs, long rhs);
Real operator*(const Real& lhs, long rhs);
Real operator/(const Real& lhs, long rhs);

bool operator==(const Real& lhs, const Real& rhs);
bool operator<(const Real& lhs, const Real& rhs);
bool operator<=(const Real& lhs, const Real& rhs);
bool operator>(const Real& lhs, const Real& rhs);
bool operator>=(const Real& lhs, const Real& rhs);
bool operator==(const Real& lhs, long rhs);
bool operator<(const Real& lhs, long rhs);
bool operator>(const Real& lhs, long rhs);

Real abs(const Real& x);
Real sqrt(const Real& x);
/// Real cube root; negative arguments give negative roots.
Real cbrt(const Real& x);
Real log(const Real& x);
Real exp(const Real& x);
Real pow(const Real& base, const Real& exponent);
Real pow(const Real& base, std::uint64_t exponent);
Real max(const Real& a, const Real& b);

/// Complex number over Real. Both parts share the precision they were built
/// with; operations follow Real's rounding rule.
struct Complex
{
    Real re;
    Real im;

    explicit Complex(PrecisionBits bits) : re(bits), im(bits) {}
    Complex(Real real, Real imag) : re(std::move(real)), im(std::move(imag)) {}
    explicit Complex(const Real& real) : re(real), im(real.bits()) {}

    PrecisionBits bits() const;
};

Complex operator-(const Complex& z);
Complex operator+(const Complex& lhs, const Complex& rhs);
Complex operator-(const Complex& lhs, const Complex& rhs);
Complex operator*(const Complex& lhs, const Complex& rhs);
Complex operator/(const Complex& lhs, const Complex& rhs);
Complex operator*(const Real& lhs, const Complex& rhs);
Complex operator+(const Real& lhs, const Complex& rhs);

Complex conj(const Complex& z);
Real abs(const Complex& z);
/// z^n by binary powering.
Complex pow(const Complex& z, std::uint64_t n);

/// Relative tolerance 2^(8 - bits) used by all numeric self-checks.
Real tolerance_for(PrecisionBits bits);

/// |approx - exact| / max(1, |exact|), evaluated at approx's precision plus
/// guard bits. Falls back to the absolute error when exact is small so that
/// exact zeros stay comparable.
Real relative_error(const Real& approx, const Rational& exact);

/// Evaluates prod_i bases[i]^exponents[i] for positive rational bases.
///
/// Equal bases are merged with exact exponent arithmetic before evaluation,
/// factors whose merged exponent is zero (or whose base is 1) drop out, and
/// small integer powers are taken exactly. A product whose exponents cancel
/// therefore evaluates to exactly 1. Throws DomainError for a nonpositive base.
Real power_product(std::span<const Rational> bases,
                   std::span<const Rational> exponents,
                   PrecisionBits bits);

}  // namespace horadam

#endif  // HORADAM_REAL_HPP
