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

#include "horadam/power_product.hpp"

#include <string>
#include <vector>

#include "horadam/errors.hpp"

namespace horadam
{

FundamentalExponents fundamental_exponents(const Params& params, std::size_t n)
{
    const Rational one(1);
    const Rational zero(0);
    return {term_iterative(Spec{one, zero, zero, params}, n),
            term_iterative(Spec{zero, one, zero, params}, n),
            term_iterative(Spec{zero, zero, one, params}, n),
            params,
            n};
}

namespace
{

std::uint64_t require_small_nonnegative(const Rational& value, const char* name)
{
    if (!is_integer(value) || value < 0)
    {
        throw DomainError(std::string("direct power-product iteration needs a "
                                      "nonnegative integer ")
                          + name + ", got " + to_string(value));
    }
    if (value > 64)
    {
        throw CapExceeded(std::string("coefficient ") + name + " = "
                          + to_string(value) + " is too large for direct iteration");
    }
    return numerator(value).convert_to<std::uint64_t>();
}

std::size_t size_bits(const Rational& q)
{
    return bit_length(numerator(q)) + bit_length(denominator(q));
}

}  // namespace

Rational z_term_direct(const GeoInit& init, const Params& params, std::size_t n)
{
    init.validate();
    const std::uint64_t r = require_small_nonnegative(params.r, "r");
    const std::uint64_t s = require_small_nonnegative(params.s, "s");
    const std::uint64_t t = require_small_nonnegative(params.t, "t");
    if (n > kDirectIndexCap)
    {
        throw CapExceeded("z_term_direct is capped at n = "
                          + std::to_string(kDirectIndexCap) + ", got "
                          + std::to_string(n));
    }

    // Bound every intermediate size through the integer exponents before
    // materializing anything: size(z_k) <= sum_i e_i(k) size(init_i).
    const SequenceSpec<Integer> unit_a{Integer(1), Integer(0), Integer(0),
                                       {Integer(r), Integer(s), Integer(t)}};
    SequenceSpec<Integer> unit_b = unit_a;
    unit_b.a = 0;
    unit_b.b = 1;
    SequenceSpec<Integer> unit_c = unit_a;
    unit_c.a = 0;
    unit_c.c = 1;
    const auto ea = terms_iterative(unit_a, n);
    const auto eb = terms_iterative(unit_b, n);
    const auto ec = terms_iterative(unit_c, n);
    const Integer cap(kDirectBitCap);
    for (std::size_t k = 0; k <= n; ++k)
    {
        const Integer estimate = ea[k] * size_bits(init.a) + eb[k] * size_bits(init.b)
                                 + ec[k] * size_bits(init.c);
        if (estimate > cap)
        {
            throw CapExceeded("z_" + std::to_string(k) + " would need about "
                              + estimate.str() + " bits");
        }
    }

    std::vector<Rational> z{init.a, init.b, init.c};
    while (z.size() <= n)
    {
        const std::size_t k = z.size();
        z.push_back(pow(z[k - 1], r) * pow(z[k - 2], s) * pow(z[k - 3], t));
    }
    return z[n];
}

Real z_term_closed(const GeoInit& init, const Params& params, std::size_t n,
                   PrecisionBits bits)
{
    require_precision(bits);
    init.validate();
    const auto bases = init.values();
    const auto exponents = fundamental_exponents(params, n).values();
    return power_product(bases, exponents, bits);
}

}  // namespace horadam
