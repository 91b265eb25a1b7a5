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

#ifndef HORADAM_POWER_PRODUCT_HPP
#define HORADAM_POWER_PRODUCT_HPP

#include <array>
#include <cstddef>

#include "horadam/geomean.hpp"
#include "horadam/numeric.hpp"
#include "horadam/real.hpp"
#include "horadam/recurrence.hpp"

namespace horadam
{

/// H_n(1,0,0), H_n(0,1,0), H_n(0,0,1) for one parameter triple.
struct FundamentalExponents
{
    Rational e_a;
    Rational e_b;
    Rational e_c;
    Params params;
    std::size_t index = 0;

    std::array<Rational, 3> values() const { return {e_a, e_b, e_c}; }
};

FundamentalExponents fundamental_exponents(const Params& params, std::size_t n);

/// Largest index z_term_direct accepts.
inline constexpr std::size_t kDirectIndexCap = 20;

/// Largest estimated numerator+denominator size, in bits, z_term_direct
/// will materialize.
inline constexpr std::size_t kDirectBitCap = std::size_t{1} << 26;

/// z_n from z_{k+3} = z_{k+2}^r z_{k+1}^s z_k^t, exactly.
///
/// r, s, t must be nonnegative integers (DomainError otherwise). Throws
/// CapExceeded for n > kDirectIndexCap or when any term up to n would exceed
/// kDirectBitCap bits.
Rational z_term_direct(const GeoInit& init, const Params& params, std::size_t n);

/// a^{e_a} b^{e_b} c^{e_c} from fundamental_exponents.
Real z_term_closed(const GeoInit& init, const Params& params, std::size_t n,
                   PrecisionBits bits);

}  // namespace horadam

#endif  // HORADAM_POWER_PRODUCT_HPP
