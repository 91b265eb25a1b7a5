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

#include "horadam/real.hpp"

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "horadam/errors.hpp"

namespace horadam
{

void require_precision(PrecisionBits bits)
{
    if (bits < kMinPrecisionBits)
    {
        throw DomainError("precision_bits must be at least "
                          + std::to_string(kMinPrecisionBits) + ", got "
                          + std::to_string(bits));
    }
}

Real::Real(PrecisionBits bits)
{
    mpfr_init2(value_, static_cast<mpfr_prec_t>(bits));
    mpfr_set_zero(value_, 1);
}

Real::Real(long value, PrecisionBits bits)
{
    mpfr_init2(value_, static_cast<mpfr_prec_t>(bits));
    mpfr_set_si(value_, value, MPFR_RNDN);
}

Real::Real(const Integer& value, PrecisionBits bits)
{
    mpfr_init2(value_, static_cast<mpfr_prec_t>(bits));
    mpfr_set_z(value_, value.backend().data(), MPFR_RNDN);
}

Real::Real(const Rational& value, PrecisionBits bits)
{
    mpfr_init2(value_, static_cast<mpfr_prec_t>(bits));
    mpfr_set_q(value_, value.backend().data(), MPFR_RNDN);
}

Real::Real(const Real& other)
{
    mpfr_init2(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept
{
    mpfr_init2(value_, MPFR_PREC_MIN);
    mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other)
{
    if (this != &other)
    {
        mpfr_set_prec(value_, mpfr_get_prec(other.value_));
        mpfr_set(value_, other.value_, MPFR_RNDN);
    }
    return *this;
}

Real& Real::operator=(Real&& other) noexcept
{
    mpfr_swap(value_, other.value_);
    return *this;
}

Real::~Real()
{
    mpfr_clear(value_);
}

PrecisionBits Real::bits() const
{
    return static_cast<PrecisionBits>(mpfr_get_prec(value_));
}

Real Real::rounded(PrecisionBits bits) const
{
    Real out(bits);
    mpfr_set(out.value_, value_, MPFR_RNDN);
    return out;
}

double Real::to_double() const
{
    return mpfr_get_d(value_, MPFR_RNDN);
}

bool Real::is_zero() const
{
    return mpfr_zero_p(value_) != 0;
}

int Real::sign() const
{
    return mpfr_sgn(value_);
}

std::string Real::str(std::size_t digits) const
{
    char* buffer = nullptr;
    const int precision = static_cast<int>(std::max<std::size_t>(digits, 1) - 1);
    if (mpfr_asprintf(&buffer, "%.*Re", precision, value_) < 0)
    {
        throw Error("mpfr_asprintf failed");
    }
    std::string out(buffer);
    mpfr_free_str(buffer);
    return out;
}

std::size_t Real::digits_for(PrecisionBits bits)
{
    return static_cast<std::size_t>(std::ceil(bits * std::log10(2.0))) + 1;
}

Real Real::exp2i(long exponent, PrecisionBits bits)
{
    Real out(bits);
    mpfr_set_ui_2exp(out.value_, 1, exponent, MPFR_RNDN);
    return out;
}

namespace
{

using BinaryOp = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
using UnaryOp = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);

Real apply(BinaryOp op, const Real& lhs, const Real& rhs)
{
    Real out(std::max(lhs.bits(), rhs.bits()));
    op(out.get(), lhs.get(), rhs.get(), MPFR_RNDN);
    return out;
}

Real apply(UnaryOp op, const Real& x)
{
    Real out(x.bits());
    op(out.get(), x.get(), MPFR_RNDN);
    return out;
}

}  // namespace

Real& Real::operator+=(const Real& rhs)
{
    return *this = *this + rhs;
}

Real& Real::operator-=(const Real& rhs)
{
    return *this = *this - rhs;
}

Real& Real::operator*=(const Real& rhs)
{
    return *this = *this * rhs;
}

Real& Real::operator/=(const Real& rhs)
{
    return *this = *this / rhs;
}

Real operator-(const Real& x)
{
    return apply(mpfr_neg, x);
}

Real operator+(const Real& lhs, const Real& rhs)
{
    return apply(mpfr_add, lhs, rhs);
}

Real operator-(const Real& lhs, const Real& rhs)
{
    return apply(mpfr_sub, lhs, rhs);
}

Real operator*(const Real& lhs, const Real& rhs)
{
    return apply(mpfr_mul, lhs, rhs);
}

Real operator/(const Real& lhs, const Real& rhs)
{
    return apply(mpfr_div, lhs, rhs);
}

Real operator+(const Real& lhs, long rhs)
{
    Real out(lhs.bits());
    mpfr_add_si(out.get(), lhs.get(), rhs, MPFR_RNDN);
    return out;
}

Real operator-(const Real& lhs, long rhs)
{
    Real out(lhs.bits());
    mpfr_sub_si(out.get(), lhs.get(), rhs, MPFR_RNDN);
    return out;
}

Real operator*(const Real& lhs, long rhs)
{
    Real out(lhs.bits());
    mpfr_mul_si(out.get(), lhs.get(), rhs, MPFR_RNDN);
    return out;
}

Real operator/(const Real& lhs, long rhs)
{
    Real out(lhs.bits());
    mpfr_div_si(out.get(), lhs.get(), rhs, MPFR_RNDN);
    return out;
}

bool operator==(const Real& lhs, const Real& rhs)
{
    return mpfr_equal_p(lhs.get(), rhs.get()) != 0;
}

bool operator<(const Real& lhs, const Real& rhs)
{
    return mpfr_less_p(lhs.get(), rhs.get()) != 0;
}

bool operator<=(const Real& lhs, const Real& rhs)
{
    return mpfr_lessequal_p(lhs.get(), rhs.get()) != 0;
}

bool operator>(const Real& lhs, const Real& rhs)
{
    return mpfr_greater_p(lhs.get(), rhs.get()) != 0;
}

bool operator>=(const Real& lhs, const Real& rhs)
{
    return mpfr_greaterequal_p(lhs.get(), rhs.get()) != 0;
}

bool operator==(const Real& lhs, long rhs)
{
    return mpfr_cmp_si(lhs.get(), rhs) == 0;
}

bool operator<(const Real& lhs, long rhs)
{
    return mpfr_cmp_si(lhs.get(), rhs) < 0;
}

bool operator>(const Real& lhs, long rhs)
{
    return mpfr_cmp_si(lhs.get(), rhs) > 0;
}

Real abs(const Real& x)
{
    return apply(mpfr_abs, x);
}

Real sqrt(const Real& x)
{
    return apply(mpfr_sqrt, x);
}

Real cbrt(const Real& x)
{
    return apply(mpfr_cbrt, x);
}

Real log(const Real& x)
{
    return apply(mpfr_log, x);
}

Real exp(const Real& x)
{
    return apply(mpfr_exp, x);
}

Real pow(const Real& base, const Real& exponent)
{
    return apply(mpfr_pow, base, exponent);
}

Real pow(const Real& base, std::uint64_t exponent)
{
    Real out(base.bits());
    mpfr_pow_ui(out.get(), base.get(), static_cast<unsigned long>(exponent),
                MPFR_RNDN);
    return out;
}

Real max(const Real& a, const Real& b)
{
    return a < b ? b : a;
}

PrecisionBits Complex::bits() const
{
    return std::max(re.bits(), im.bits());
}

Complex operator-(const Complex& z)
{
    return {-z.re, -z.im};
}

Complex operator+(const Complex& lhs, const Complex& rhs)
{
    return {lhs.re + rhs.re, lhs.im + rhs.im};
}

Complex operator-(const Complex& lhs, const Complex& rhs)
{
    return {lhs.re - rhs.re, lhs.im - rhs.im};
}

Complex operator*(const Complex& lhs, const Complex& rhs)
{
    return {lhs.re * rhs.re - lhs.im * rhs.im,
            lhs.re * rhs.im + lhs.im * rhs.re};
}

Complex operator/(const Complex& lhs, const Complex& rhs)
{
    const Real denom = rhs.re * rhs.re + rhs.im * rhs.im;
    return {(lhs.re * rhs.re + lhs.im * rhs.im) / denom,
            (lhs.im * rhs.re - lhs.re * rhs.im) / denom};
}

Complex operator*(const Real& lhs, const Complex& rhs)
{
    return {lhs * rhs.re, lhs * rhs.im};
}

Complex operator+(const Real& lhs, const Complex& rhs)
{
    return {lhs + rhs.re, rhs.im};
}

Complex conj(const Complex& z)
{
    return {z.re, -z.im};
}

Real abs(const Complex& z)
{
    return apply(mpfr_hypot, z.re, z.im);
}

Complex pow(const Complex& z, std::uint64_t n)
{
    Complex result(Real(1, z.bits()), Real(0, z.bits()));
    Complex square = z;
    while (n != 0)
    {
        if (n & 1U)
        {
            result = result * square;
        }
        n >>= 1U;
        if (n != 0)
        {
            square = square * square;
        }
    }
    return result;
}

Real tolerance_for(PrecisionBits bits)
{
    return Real::exp2i(8 - static_cast<long>(bits), bits);
}

Real relative_error(const Real& approx, const Rational& exact)
{
    const PrecisionBits working = approx.bits() + kGuardBits;
    const Real reference(exact, working);
    const Real scale = max(abs(reference), Real(1, working));
    return abs(approx.rounded(working) - reference) / scale;
}

Real power_product(std::span<const Rational> bases,
                   std::span<const Rational> exponents,
                   PrecisionBits bits)
{
    if (bases.size() != exponents.size())
    {
        throw Error("power_product: bases and exponents differ in length");
    }
    std::vector<std::pair<Rational, Rational>> merged;
    for (std::size_t i = 0; i < bases.size(); ++i)
    {
        if (bases[i] <= 0)
        {
            throw DomainError("power_product: base " + to_string(bases[i])
                              + " is not positive");
        }
        auto it = std::find_if(merged.begin(), merged.end(),
                               [&](const auto& entry) { return entry.first == bases[i]; });
        if (it == merged.end())
        {
            merged.emplace_back(bases[i], exponents[i]);
        }
        else
        {
            it->second += exponents[i];
        }
    }

    constexpr std::int64_t kExactPowerLimit = 64;
    const PrecisionBits working = bits + kGuardBits;
    Rational exact_part(1);
    Real product(1, working);
    for (const auto& [base, exponent] : merged)
    {
        if (exponent == 0 || base == 1)
        {
            continue;
        }
        if (is_integer(exponent) && boost::multiprecision::abs(exponent) <= kExactPowerLimit)
        {
            exact_part *= pow(base, numerator(exponent).convert_to<std::int64_t>());
            continue;
        }
        product *= pow(Real(base, working), Real(exponent, working));
    }
    return (Real(exact_part, working) * product).rounded(bits);
}

}  // namespace horadam
