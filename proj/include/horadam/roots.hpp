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

#ifndef HORADAM_ROOTS_HPP
#define HORADAM_ROOTS_HPP

#include <cstddef>

#include "horadam/numeric.hpp"
#include "horadam/real.hpp"
#include "horadam/recurrence.hpp"

namespace horadam
{

/// Δ(r,s,t) = r³t/27 − r²s²/108 + rst/6 − s³/27 + t²/4, exact.
struct Discriminant
{
    Rational value;

    bool positive() const { return value > 0; }
};

Discriminant discriminant(const Params& params);

/// Roots of x³ − rx² − sx − t under Δ > 0: one real root and a conjugate
/// pair. Values carry precision_bits + kGuardBits of mantissa.
struct CubicRoots
{
    Real alpha;
    Complex omega1;  // positive imaginary part
    Complex omega2;  // conj(omega1)
    PrecisionBits precision_bits;
    Rational delta;
};

/// Cardano's formula with the real cube-root branch:
/// α = r/3 + A + B, ω₁ = r/3 + εA + ε²B, ω₂ = r/3 + ε²A + εB.
///
/// Throws DomainError when Δ ≤ 0 or bits < kMinPrecisionBits, and
/// PrecisionError if a root fails |p(x)| ≤ 2^(8-bits) max(1, |x|³).
CubicRoots solve_cubic(const Params& params, PrecisionBits bits);

struct VietaResiduals
{
    Real sum;         // |α + ω₁ + ω₂ − r|
    Real pair_sum;    // |αω₁ + αω₂ + ω₁ω₂ + s|
    Real product;     // |αω₁ω₂ − t|
};

VietaResiduals vieta_residuals(const CubicRoots& roots, const Params& params);

/// |x³ − rx² − sx − t| for a complex x.
Real cubic_residual(const Complex& x, const Params& params);

struct BinetCoefficients
{
    Complex P;
    Complex Q;
    Complex R;
};

BinetCoefficients binet_coefficients(const Spec& spec, const CubicRoots& roots);

/// H_n from the Binet formula, rounded to `bits`.
///
/// The full complex sum is assembled and its imaginary part checked against
/// 2^(8-bits) times the summed term magnitudes; a larger residual throws
/// PrecisionError instead of being dropped.
Real binet_term(const Spec& spec, std::size_t n, PrecisionBits bits);

/// Same, reusing roots already solved for spec.params.
Real binet_term(const Spec& spec, const CubicRoots& roots, std::size_t n);

/// Outcome of comparing the generic Binet form of H_n(1,0,0;r,s,t) with the
/// reduced form t·(α^{n−1}/… − ω₁^{n−1}/… + ω₂^{n−1}/…).
struct BinetCheck
{
    Real lhs;        // generic P, Q, R evaluation
    Real rhs;        // reduced t·x^{n−1} evaluation
    Rational exact;  // term_iterative
    Real tolerance;  // 2^(−bits/2)
    bool pass;
};

/// Requires n ≥ 1 (IndexError) and Δ > 0 (DomainError).
BinetCheck fundamental_binet_check(const Params& params, std::size_t n,
                                   PrecisionBits bits);

/// max over n in [n_max/2, n_max] of |V_n / 3^n|, from exact V values.
/// Requires n_max ≥ 1.
Real v_limit_check(std::size_t n_max, PrecisionBits bits);

}  // namespace horadam

#endif  // HORADAM_ROOTS_HPP
