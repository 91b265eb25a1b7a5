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

#include "horadam/roots.hpp"

#include <string>

#include "horadam/errors.hpp"

namespace horadam
{

Discriminant discriminant(const Params& params)
{
    const Rational& r = params.r;
    const Rational& s = params.s;
    const Rational& t = params.t;
    return {r * r * r * t / 27 - r * r * s * s / 108 + r * s * t / 6
            - s * s * s / 27 + t * t / 4};
}

namespace
{

Complex horner(const Complex& x, const Params& params, PrecisionBits bits)
{
    // x³ − r x² − s x − t
    Complex acc(Real(1, bits), Real(0, bits));
    acc = acc * x - Complex(Real(params.r, bits));
    acc = acc * x - Complex(Real(params.s, bits));
    acc = acc * x - Complex(Real(params.t, bits));
    return acc;
}

void check_root(const Complex& x, const Params& params, PrecisionBits bits,
                const char* name)
{
    const Real residual = cubic_residual(x, params);
    const Real magnitude = abs(x);
    const Real scale =
        max(Real(1, x.bits()), magnitude * magnitude * magnitude);
    if (residual > tolerance_for(bits) * scale)
    {
        throw PrecisionError(std::string("cubic residual too large at root ")
                             + name + ": " + residual.str(6));
    }
}

}  // namespace

Real cubic_residual(const Complex& x, const Params& params)
{
    return abs(horner(x, params, x.bits()));
}

CubicRoots solve_cubic(const Params& params, PrecisionBits bits)
{
    require_precision(bits);
    const Discriminant delta = discriminant(params);
    if (!delta.positive())
    {
        throw DomainError("discriminant " + to_string(delta.value)
                          + " <= 0: only the one-real-root regime (delta > 0) "
                            "is supported");
    }

    const PrecisionBits working = bits + kGuardBits;
    const Rational& r = params.r;
    const Rational& s = params.s;
    const Rational& t = params.t;

    // A³ = m + √Δ, B³ = m − √Δ, and (m + √Δ)(m − √Δ) = m² − Δ = k³ exactly.
    const Rational m = r * r * r / 27 + r * s / 6 + t / 2;
    const Rational k = (s + r * r / 3) / 3;
    const Real root_delta = sqrt(Real(delta.value, working));
    const Real k_cubed(k * k * k, working);

    Real radicand_a(working);
    Real radicand_b(working);
    if (m >= 0)
    {
        radicand_a = Real(m, working) + root_delta;
        radicand_b = k_cubed / radicand_a;
    }
    else
    {
        radicand_b = Real(m, working) - root_delta;
        radicand_a = k_cubed / radicand_b;
    }
    const Real A = cbrt(radicand_a);
    const Real B = cbrt(radicand_b);

    const Real shift(r / 3, working);
    const Real sqrt3_half = sqrt(Real(3, working)) / 2;

    // ε = −1/2 + i√3/2, so εA + ε²B = −(A+B)/2 + i(√3/2)(A−B).
    Real alpha = shift + A + B;
    Complex omega1(shift - (A + B) / 2, sqrt3_half * (A - B));
    Complex omega2 = conj(omega1);

    check_root(Complex(alpha), params, bits, "alpha");
    check_root(omega1, params, bits, "omega1");
    check_root(omega2, params, bits, "omega2");

    return {std::move(alpha), std::move(omega1), std::move(omega2), bits,
            delta.value};
}

VietaResiduals vieta_residuals(const CubicRoots& roots, const Params& params)
{
    const PrecisionBits bits = roots.alpha.bits();
    const Complex alpha(roots.alpha);
    const Complex& w1 = roots.omega1;
    const Complex& w2 = roots.omega2;

    const Complex sum = alpha + w1 + w2 - Complex(Real(params.r, bits));
    const Complex pairs =
        alpha * w1 + alpha * w2 + w1 * w2 + Complex(Real(params.s, bits));
    const Complex product = alpha * w1 * w2 - Complex(Real(params.t, bits));
    return {abs(sum), abs(pairs), abs(product)};
}

BinetCoefficients binet_coefficients(const Spec& spec, const CubicRoots& roots)
{
    const PrecisionBits bits = roots.alpha.bits();
    const Complex a(Real(spec.a, bits));
    const Complex b(Real(spec.b, bits));
    const Complex c(Real(spec.c, bits));
    const Complex alpha(roots.alpha);
    const Complex& w1 = roots.omega1;
    const Complex& w2 = roots.omega2;

    return {c - (w1 + w2) * b + w1 * w2 * a,
            c - (alpha + w2) * b + alpha * w2 * a,
            c - (alpha + w1) * b + alpha * w1 * a};
}

namespace
{

struct LagrangeTerms
{
    Complex first;
    Complex second;
    Complex third;
};

// P α^n/((α−ω₁)(α−ω₂)) − Q ω₁^n/((α−ω₁)(ω₁−ω₂)) + R ω₂^n/((α−ω₂)(ω₁−ω₂))
LagrangeTerms lagrange_terms(const Complex& P, const Complex& Q, const Complex& R,
                             const CubicRoots& roots, std::uint64_t n)
{
    const Complex alpha(roots.alpha);
    const Complex& w1 = roots.omega1;
    const Complex& w2 = roots.omega2;
    const Complex d_a1 = alpha - w1;
    const Complex d_a2 = alpha - w2;
    const Complex d_12 = w1 - w2;
    return {P * pow(alpha, n) / (d_a1 * d_a2),
            -(Q * pow(w1, n) / (d_a1 * d_12)),
            R * pow(w2, n) / (d_a2 * d_12)};
}

Real assemble_real(const LagrangeTerms& terms, PrecisionBits bits)
{
    const Complex sum = terms.first + terms.second + terms.third;
    const Real magnitude =
        abs(terms.first) + abs(terms.second) + abs(terms.third);
    const Real bound =
        tolerance_for(bits) * max(Real(1, magnitude.bits()), magnitude);
    if (abs(sum.im) > bound)
    {
        throw PrecisionError("Binet sum has imaginary residual "
                             + abs(sum.im).str(6) + " above " + bound.str(6));
    }
    return sum.re;
}

}  // namespace

Real binet_term(const Spec& spec, const CubicRoots& roots, std::size_t n)
{
    const BinetCoefficients coeffs = binet_coefficients(spec, roots);
    const LagrangeTerms terms =
        lagrange_terms(coeffs.P, coeffs.Q, coeffs.R, roots, n);
    return assemble_real(terms, roots.precision_bits)
        .rounded(roots.precision_bits);
}

Real binet_term(const Spec& spec, std::size_t n, PrecisionBits bits)
{
    return binet_term(spec, solve_cubic(spec.params, bits), n);
}

BinetCheck fundamental_binet_check(const Params& params, std::size_t n,
                                   PrecisionBits bits)
{
    if (n < 1)
    {
        throw IndexError("fundamental_binet_check requires n >= 1");
    }
    const CubicRoots roots = solve_cubic(params, bits);
    const Spec unit_a{Rational(1), Rational(0), Rational(0), params};

    Real lhs = binet_term(unit_a, roots, n);

    // With (a,b,c) = (1,0,0): P = ω₁ω₂ = t/α, Q = αω₂ = t/ω₁, R = αω₁ = t/ω₂,
    // so each numerator collapses to t·x^{n−1}.
    const PrecisionBits working = roots.alpha.bits();
    const Complex t(Real(params.t, working));
    const LagrangeTerms reduced = lagrange_terms(t, t, t, roots, n - 1);
    Real rhs = assemble_real(reduced, bits).rounded(bits);

    Rational exact = term_iterative(unit_a, n);
    Real tolerance = Real::exp2i(-static_cast<long>(bits / 2), bits);
    const bool pass = relative_error(lhs, exact) <= tolerance
                      && relative_error(rhs, exact) <= tolerance;
    return {std::move(lhs), std::move(rhs), std::move(exact),
            std::move(tolerance), pass};
}

Real v_limit_check(std::size_t n_max, PrecisionBits bits)
{
    require_precision(bits);
    if (n_max < 1)
    {
        throw IndexError("v_limit_check requires n_max >= 1");
    }
    Integer previous(-1);  // V_0
    Integer current(3);    // V_1
    Rational worst(0);
    for (std::size_t n = 0; n <= n_max; ++n)
    {
        if (n > 0)
        {
            Integer next = -2 * current - 3 * previous;
            // After this shift `previous` holds V_n.
            previous = std::move(current);
            current = std::move(next);
        }
        if (n >= n_max / 2)
        {
            const Rational ratio(boost::multiprecision::abs(previous), pow3(n));
            if (ratio > worst)
            {
                worst = ratio;
            }
        }
    }
    return Real(worst, bits);
}

}  // namespace horadam
