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

#include "horadam/recurrence.hpp"

namespace horadam
{

Integer t_sequence(std::size_t n)
{
    return term_iterative(t_spec<Integer>(), n);
}

std::vector<Integer> t_sequence_prefix(std::size_t n)
{
    return terms_iterative(t_spec<Integer>(), n);
}

Rational h_sequence(const Params& params, std::size_t n)
{
    return term_iterative(h_spec(params), n);
}

Integer v_sequence(std::size_t n)
{
    Integer v0(-1);
    Integer v1(3);
    if (n == 0)
    {
        return v0;
    }
    for (std::size_t k = 1; k < n; ++k)
    {
        Integer next = -2 * v1 - 3 * v0;
        v0 = std::move(v1);
        v1 = std::move(next);
    }
    return v1;
}

Integer t_closed_form(std::size_t n)
{
    if (n < 2)
    {
        throw IndexError("t_closed_form requires n >= 2");
    }
    const Integer numerator = pow3(n - 1) + v_sequence(n - 1);
    if (numerator % 6 != 0)
    {
        throw InconsistencyError("3^" + std::to_string(n - 1) + " + V_"
                                 + std::to_string(n - 1)
                                 + " is not divisible by 6");
    }
    return numerator / 6;
}

Integer classic_tribonacci(std::size_t n)
{
    const SequenceSpec<Integer> spec{Integer(0), Integer(1), Integer(1),
                                     {Integer(1), Integer(1), Integer(1)}};
    return term_iterative(spec, n);
}

}  // namespace horadam
