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

#include "horadam/numeric.hpp"

#include <charconv>
#include <limits>
#include <regex>

#include "horadam/errors.hpp"

namespace horadam
{

Integer pow(const Integer& base, std::uint64_t exponent)
{
    if (exponent > std::numeric_limits<unsigned>::max())
    {
        throw CapExceeded("integer exponent too large");
    }
    return boost::multiprecision::pow(base, static_cast<unsigned>(exponent));
}

Rational pow(const Rational& base, std::uint64_t exponent)
{
    return Rational(pow(numerator(base), exponent),
                    pow(denominator(base), exponent));
}

Rational pow(const Rational& base, std::int64_t exponent)
{
    if (exponent >= 0)
    {
        return pow(base, static_cast<std::uint64_t>(exponent));
    }
    if (base == 0)
    {
        throw DomainError("zero raised to a negative power");
    }
    auto magnitude = static_cast<std::uint64_t>(-(exponent + 1)) + 1;
    return Rational(1) / pow(base, magnitude);
}

Integer pow3(std::uint64_t k)
{
    return pow(Integer(3), k);
}

Rational pow3_signed(std::int64_t k)
{
    return pow(Rational(3), k);
}

std::string to_string(const Integer& z)
{
    return z.str();
}

std::string to_string(const Rational& q)
{
    if (is_integer(q))
    {
        return numerator(q).str();
    }
    return numerator(q).str() + "/" + denominator(q).str();
}

std::size_t bit_length(const Integer& z)
{
    if (z == 0)
    {
        return 0;
    }
    return boost::multiprecision::msb(boost::multiprecision::abs(z)) + 1;
}

namespace
{

// Integer(std::string) reads a leading 0 as an octal prefix, so strip sign and
// leading zeros first.
Integer parse_integer(const std::string& text)
{
    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-'))
    {
        negative = text[pos] == '-';
        ++pos;
    }
    while (pos + 1 < text.size() && text[pos] == '0')
    {
        ++pos;
    }
    Integer value(text.substr(pos));
    return negative ? Integer(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text)
{
    static const std::regex fraction(R"(^\s*([+-]?\d+)\s*/\s*([+-]?\d+)\s*$)");
    static const std::regex decimal(
        R"(^\s*([+-]?)(\d*)(?:\.(\d*))?(?:[eE]([+-]?\d+))?\s*$)");

    const std::string s(text);
    std::smatch m;
    if (std::regex_match(s, m, fraction))
    {
        Integer den = parse_integer(m[2].str());
        if (den == 0)
        {
            throw ParseError("zero denominator in '" + s + "'");
        }
        return Rational(parse_integer(m[1].str()), den);
    }
    if (std::regex_match(s, m, decimal))
    {
        const std::string whole = m[2].str();
        const std::string frac = m[3].matched ? m[3].str() : std::string();
        if (whole.empty() && frac.empty())
        {
            throw ParseError("not a number: '" + s + "'");
        }
        long long exp10 = 0;
        if (m[4].matched)
        {
            const std::string e = m[4].str();
            const char* first = e.data() + (e[0] == '+' ? 1 : 0);
            auto [ptr, ec] = std::from_chars(first, e.data() + e.size(), exp10);
            if (ec != std::errc() || exp10 > 100000 || exp10 < -100000)
            {
                throw ParseError("exponent out of range in '" + s + "'");
            }
        }
        Rational value(parse_integer(whole + frac));
        long long scale = exp10 - static_cast<long long>(frac.size());
        value *= pow(Rational(10), static_cast<std::int64_t>(scale));
        return m[1].str() == "-" ? -value : value;
    }
    throw ParseError("not a rational literal: '" + s + "'");
}

}  // namespace horadam
