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

#ifndef HORADAM_GEOMEAN_HPP
#define HORADAM_GEOMEAN_HPP

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "horadam/numeric.hpp"
#include "horadam/real.hpp"

namespace horadam
{

/// g = (a^num_a b^num_b c^num_c)^(1/3^pow3).
///
/// Numerators are kept over the explicit power of three the exponent
/// formula produces; reduced() is for display only.
struct ExponentTriple
{
    Integer num_a;
    Integer num_b;
    Integer num_c;
    std::size_t pow3 = 0;

    std::array<Rational, 3> exponents() const;

    /// Divides out common factors of 3 shared by all numerators.
    ExponentTriple reduced() const;

    /// "a^p b^q c^r / 3^k"
    std::string to_string() const;

    bool operator==(const ExponentTriple&) const = default;
};

/// Strictly positive initial values g_0 = a, g_1 = b, g_2 = c.
struct GeoInit
{
    Rational a;
    Rational b;
    Rational c;

    /// Throws DomainError unless a, b, c > 0.
    void validate() const;

    std::array<Rational, 3> values() const { return {a, b, c}; }
};

/// Exponents of g_n in a, b, c. Unit triples for n ≤ 2; for n = m + 2 ≥ 3,
/// (T_{m+1}, T_{m+1} + 3T_m, T_{m+2}) over 3^m.
ExponentTriple geo_exponents(std::size_t n);

/// geo_exponents(0..n_max) in one pass.
std::vector<ExponentTriple> geo_exponent_table(std::size_t n_max);

/// g_n evaluated from its exponent triple.
Real geo_term_symbolic(const GeoInit& init, std::size_t n, PrecisionBits bits);

/// g_n by iterating g_{k+3} = cbrt(g_{k+2} g_{k+1} g_k).
Real geo_term_iterative(const GeoInit& init, std::size_t n, PrecisionBits bits);

/// g_{n+1} / g_n, from the exact difference of the two exponent triples.
/// Exactly 1 whenever a = b = c.
Real growth_ratio(const GeoInit& init, std::size_t n, PrecisionBits bits);

struct GrowthTraceRow
{
    std::size_t n;
    Real ratio;
    Real deviation;  // |ratio − 1|
};

/// growth_ratio for n = 0..n_max.
std::vector<GrowthTraceRow> growth_trace(const GeoInit& init, std::size_t n_max,
                                         PrecisionBits bits);

struct GrowthReport
{
    std::size_t crossing;  // first n with deviation < tol
    std::vector<GrowthTraceRow> trace;
};

/// Scans n = 0..n_max for the first |g_{n+1}/g_n − 1| < tol.
///
/// Requires tol > 0 and bits ≥ 2 log2(1/tol) (DomainError otherwise).
/// Throws NoConvergence when no n up to n_max meets the tolerance.
GrowthReport growth_convergence_report(const GeoInit& init, std::size_t n_max,
                                       double tol, PrecisionBits bits);

}  // namespace horadam

#endif  // HORADAM_GEOMEAN_HPP
