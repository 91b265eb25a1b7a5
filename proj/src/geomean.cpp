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

#include "horadam/geomean.hpp"

#include <algorithm>
#include <cmath>

#include "horadam/errors.hpp"
#include "horadam/recurrence.hpp"

namespace horadam
{

std::array<Rational, 3> ExponentTriple::exponents() const
{
    const Integer den = horadam::pow3(pow3);
    return {Rational(num_a, den), Rational(num_b, den), Rational(num_c, den)};
}

ExponentTriple ExponentTriple::reduced() const
{
    ExponentTriple out = *this;
    while (out.pow3 > 0 && out.num_a % 3 == 0 && out.num_b % 3 == 0
           && out.num_c % 3 == 0)
    {
        out.num_a /= 3;
        out.num_b /= 3;
        out.num_c /= 3;
        --out.pow3;
    }
    return out;
}

std::string ExponentTriple::to_string() const
{
    const ExponentTriple r = reduced();
    return "a^" + r.num_a.str() + " b^" + r.num_b.str() + " c^" + r.num_c.str()
           + " / 3^" + std::to_string(r.pow3);
}

void GeoInit::validate() const
{
    if (a <= 0 || b <= 0 || c <= 0)
    {
        throw DomainError("geometric-mean initial values must be positive, got ("
                          + horadam::to_string(a) + ", " + horadam::to_string(b)
                          + ", " + horadam::to_string(c) + ")");
    }
}

namespace
{

ExponentTriple unit_triple(std::size_t n)
{
    return {Integer(n == 0 ? 1 : 0), Integer(n == 1 ? 1 : 0),
            Integer(n == 2 ? 1 : 0), 0};
}

ExponentTriple triple_from_t(const std::vector<Integer>& t, std::size_t n)
{
    const std::size_t m = n - 2;
    return {t[m + 1], t[m + 1] + 3 * t[m], t[m + 2], m};
}

}  // namespace

ExponentTriple geo_exponents(std::size_t n)
{
    if (n <= 2)
    {
        return unit_triple(n);
    }
    return triple_from_t(t_sequence_prefix(n), n);
}

std::vector<ExponentTriple> geo_exponent_table(std::size_t n_max)
{
    const std::vector<Integer> t = t_sequence_prefix(std::max<std::size_t>(n_max, 2));
    std::vector<ExponentTriple> table;
    table.reserve(n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n)
    {
        table.push_back(n <= 2 ? unit_triple(n) : triple_from_t(t, n));
    }
    return table;
}

Real geo_term_symbolic(const GeoInit& init, std::size_t n, PrecisionBits bits)
{
    require_precision(bits);
    init.validate();
    const auto bases = init.values();
    const auto exponents = geo_exponents(n).exponents();
    return power_product(bases, exponents, bits);
}

Real geo_term_iterative(const GeoInit& init, std::size_t n, PrecisionBits bits)
{
    require_precision(bits);
    init.validate();
    const PrecisionBits working = bits + kGuardBits;
    Real g0(init.a, working);
    Real g1(init.b, working);
    Real g2(init.c, working);
    if (n == 0)
    {
        return g0.rounded(bits);
    }
    if (n == 1)
    {
        return g1.rounded(bits);
    }
    for (std::size_t k = 2; k < n; ++k)
    {
        Real next = cbrt(g2 * g1 * g0);
        g0 = std::move(g1);
        g1 = std::move(g2);
        g2 = std::move(next);
    }
    return g2.rounded(bits);
}

namespace
{

Real ratio_from_triples(const GeoInit& init, const ExponentTriple& current,
                        const ExponentTriple& next, PrecisionBits bits)
{
    const auto e_now = current.exponents();
    const auto e_next = next.exponents();
    const std::array<Rational, 3> delta{e_next[0] - e_now[0], e_next[1] - e_now[1],
                                        e_next[2] - e_now[2]};
    const auto bases = init.values();
    return power_product(bases, delta, bits);
}

}  // namespace

Real growth_ratio(const GeoInit& init, std::size_t n, PrecisionBits bits)
{
    require_precision(bits);
    init.validate();
    return ratio_from_triples(init, geo_exponents(n), geo_exponents(n + 1), bits);
}

std::vector<GrowthTraceRow> growth_trace(const GeoInit& init, std::size_t n_max,
                                         PrecisionBits bits)
{
    require_precision(bits);
    init.validate();
    const std::vector<ExponentTriple> table = geo_exponent_table(n_max + 1);
    std::vector<GrowthTraceRow> trace;
    trace.reserve(n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n)
    {
        Real ratio = ratio_from_triples(init, table[n], table[n + 1], bits);
        Real deviation = abs(ratio - 1);
        trace.push_back({n, std::move(ratio), std::move(deviation)});
    }
    return trace;
}

GrowthReport growth_convergence_report(const GeoInit& init, std::size_t n_max,
                                       double tol, PrecisionBits bits)
{
    if (!(tol > 0.0))
    {
        throw DomainError("tolerance must be positive");
    }
    if (tol < 1.0)
    {
        const double needed = std::ceil(2.0 * std::log2(1.0 / tol));
        if (static_cast<double>(bits) < needed)
        {
            throw DomainError("precision_bits " + std::to_string(bits)
                              + " is below 2*log2(1/tol) = "
                              + std::to_string(static_cast<long>(needed)));
        }
    }
    GrowthReport report{0, growth_trace(init, n_max, bits)};
    const Real threshold(Rational(tol), bits);
    for (const auto& row : report.trace)
    {
        if (row.deviation < threshold)
        {
            report.crossing = row.n;
            return report;
        }
    }
    throw NoConvergence(n_max);
}

}  // namespace horadam
