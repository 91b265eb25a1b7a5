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

#ifndef HORADAM_NUMERIC_HPP
#define HORADAM_NUMERIC_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>
// Must precede any Eigen instantiation over the multiprecision types.
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

namespace horadam
{

// Expression templates are off: Eigen stores scalars by value and does not
// cope with lazily evaluated boost expressions.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                  boost::multiprecision::et_off>;

template <typename Scalar>
using Matrix3 = Eigen::Matrix<Scalar, 3, 3>;

template <typename Scalar>
using Vector3 = Eigen::Matrix<Scalar, 3, 1>;

inline Rational make_rational(const Integer& num, const Integer& den)
{
    return Rational(num, den);
}

inline Integer numerator(const Rational& q)
{
    return boost::multiprecision::numerator(q);
}

inline Integer denominator(const Rational& q)
{
    return boost::multiprecision::denominator(q);
}

inline bool is_integer(const Rational& q)
{
    return denominator(q) == 1;
}

/// Exact q^e for a nonnegative integer exponent.
Rational pow(const Rational& base, std::uint64_t exponent);

/// Exact q^e; a negative exponent inverts the base, which must be nonzero.
Rational pow(const Rational& base, std::int64_t exponent);

Integer pow(const Integer& base, std::uint64_t exponent);

/// 3^k as an exact integer.
Integer pow3(std::uint64_t k);

/// 3^k for any integer k, so 3^-2 = 1/9.
Rational pow3_signed(std::int64_t k);

/// Renders "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Parses "p", "p/q" or a decimal literal ("-0.125", "2.5e-3") exactly.
/// Throws ParseError on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Number of bits in |z| (0 for z = 0).
std::size_t bit_length(const Integer& z);

}  // namespace horadam

#endif  // HORADAM_NUMERIC_HPP
