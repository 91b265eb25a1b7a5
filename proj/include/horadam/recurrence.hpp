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

#ifndef HORADAM_RECURRENCE_HPP
#define HORADAM_RECURRENCE_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "horadam/errors.hpp"
#include "horadam/numeric.hpp"

namespace horadam
{

/// Coefficients of x_{n+3} = r x_{n+2} + s x_{n+1} + t x_n.
template <typename Scalar>
struct RecurrenceParams
{
    Scalar r;
    Scalar s;
    Scalar t;

    bool operator==(const RecurrenceParams&) const = default;
};

/// One third-order Horadam sequence: H_0 = a, H_1 = b, H_2 = c plus params.
template <typename Scalar>
struct SequenceSpec
{
    Scalar a;
    Scalar b;
    Scalar c;
    RecurrenceParams<Scalar> params;

    bool operator==(const SequenceSpec&) const = default;
};

using Params = RecurrenceParams<Rational>;
using Spec = SequenceSpec<Rational>;

/// (H_{n+1}, H_n, H_{n-1}) stacked top to bottom.
template <typename Scalar>
using StateVector = Vector3<Scalar>;

/// [[r, s, t], [1, 0, 0], [0, 1, 0]]
template <typename Scalar>
Matrix3<Scalar> companion_matrix(const RecurrenceParams<Scalar>& p)
{
    Matrix3<Scalar> m;
    m << p.r, p.s, p.t,
         Scalar(1), Scalar(0), Scalar(0),
         Scalar(0), Scalar(1), Scalar(0);
    return m;
}

/// Shifts the state one index forward without forming the matrix.
template <typename Scalar>
StateVector<Scalar> advance(const RecurrenceParams<Scalar>& p,
                            const StateVector<Scalar>& state)
{
    StateVector<Scalar> next;
    next << p.r * state(0) + p.s * state(1) + p.t * state(2), state(0), state(1);
    return next;
}

/// State at index 1: (H_2, H_1, H_0) = (c, b, a).
template <typename Scalar>
StateVector<Scalar> initial_state(const SequenceSpec<Scalar>& spec)
{
    StateVector<Scalar> state;
    state << spec.c, spec.b, spec.a;
    return state;
}

/// H_n by unrolling the recurrence; O(n) scalar operations.
template <typename Scalar>
Scalar term_iterative(const SequenceSpec<Scalar>& spec, std::size_t n)
{
    Scalar h0 = spec.a;
    Scalar h1 = spec.b;
    Scalar h2 = spec.c;
    if (n == 0)
    {
        return h0;
    }
    if (n == 1)
    {
        return h1;
    }
    const auto& p = spec.params;
    for (std::size_t k = 2; k < n; ++k)
    {
        Scalar next = p.r * h2 + p.s * h1 + p.t * h0;
        h0 = std::move(h1);
        h1 = std::move(h2);
        h2 = std::move(next);
    }
    return h2;
}

/// H_0, ..., H_n in order.
template <typename Scalar>
std::vector<Scalar> terms_iterative(const SequenceSpec<Scalar>& spec, std::size_t n)
{
    std::vector<Scalar> out{spec.a, spec.b, spec.c};
    out.reserve(n + 1);
    const auto& p = spec.params;
    while (out.size() <= n)
    {
        const std::size_t k = out.size();
        out.push_back(p.r * out[k - 1] + p.s * out[k - 2] + p.t * out[k - 3]);
    }
    out.resize(n + 1);
    return out;
}

/// Multiplication counter for companion_power.
struct PowerStats
{
    std::size_t multiplications = 0;
};

/// m^exponent by left-to-right square-and-multiply.
///
/// Uses floor(log2 e) squarings plus popcount(e) - 1 multiplications by m,
/// so at most 2 floor(log2 e) products. An exponent of zero returns the
/// identity without multiplying.
template <typename Scalar>
Matrix3<Scalar> companion_power(const Matrix3<Scalar>& m,
                                std::uint64_t exponent,
                                PowerStats* stats = nullptr)
{
    if (exponent == 0)
    {
        return Matrix3<Scalar>::Identity();
    }
    Matrix3<Scalar> result = m;
    std::size_t count = 0;
    for (int bit = std::bit_width(exponent) - 2; bit >= 0; --bit)
    {
        result = (result * result).eval();
        ++count;
        if ((exponent >> bit) & 1U)
        {
            result = (result * m).eval();
            ++count;
        }
    }
    if (stats != nullptr)
    {
        stats->multiplications += count;
    }
    return result;
}

/// H_n = [0 1 0] M^{n-1} [c b a]^T with O(log n) matrix products.
///
/// The matrix form starts at index 1, so n = 0 throws IndexError; callers
/// wanting H_0 use term_iterative.
template <typename Scalar>
Scalar term_matrix(const SequenceSpec<Scalar>& spec,
                   std::uint64_t n,
                   PowerStats* stats = nullptr)
{
    if (n == 0)
    {
        throw IndexError("term_matrix requires n >= 1");
    }
    const Matrix3<Scalar> power =
        companion_power(companion_matrix(spec.params), n - 1, stats);
    const StateVector<Scalar> state = initial_state(spec);
    return (power.row(1) * state).value();
}

/// (0, 0, 1; 1, 3, 9): the T sequence behind the geometric-mean exponents.
template <typename Scalar = Integer>
SequenceSpec<Scalar> t_spec()
{
    return {Scalar(0), Scalar(0), Scalar(1),
            {Scalar(1), Scalar(3), Scalar(9)}};
}

/// (0, 1, r; r, s, t): generalized Tribonacci numbers h_n.
template <typename Scalar>
SequenceSpec<Scalar> h_spec(const RecurrenceParams<Scalar>& p)
{
    return {Scalar(0), Scalar(1), p.r, p};
}

/// T_n with T_0 = T_1 = 0, T_2 = 1, T_{n+3} = T_{n+2} + 3T_{n+1} + 9T_n.
Integer t_sequence(std::size_t n);

/// T_0, ..., T_n.
std::vector<Integer> t_sequence_prefix(std::size_t n);

Rational h_sequence(const Params& params, std::size_t n);

/// V_{n+2} = -2V_{n+1} - 3V_n with V_0 = -1, V_1 = 3.
Integer v_sequence(std::size_t n);

/// T_n = (3^{n-1} + V_{n-1}) / 6 for n >= 2.
///
/// The division by 6 is checked, not rounded: a nonzero remainder throws
/// InconsistencyError. n < 2 throws IndexError.
Integer t_closed_form(std::size_t n);

/// Classic Tribonacci 0, 1, 1, 2, 4, 7, ...
Integer classic_tribonacci(std::size_t n);

}  // namespace horadam

#endif  // HORADAM_RECURRENCE_HPP
