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

#include <doctest.h>

#include <cmath>
#include <vector>

#include "horadam/errors.hpp"
#include "horadam/recurrence.hpp"
#include "oracles.hpp"

using namespace horadam;
using oracle::q;

namespace
{

Spec spec_of(long a, long b, long c, long r, long s, long t)
{
    return {q(a), q(b), q(c), {q(r), q(s), q(t)}};
}

Spec random_spec(oracle::RationalSource& src)
{
    return {src.any(), src.any(), src.any(), {src.any(), src.any(), src.any()}};
}

}  // namespace

TEST_CASE("term_iterative examples")
{
    CHECK(term_iterative(spec_of(0, 0, 1, 1, 3, 9), 0) == 0);
    CHECK(term_iterative(spec_of(0, 0, 1, 1, 3, 9), 6) == 37);
    CHECK(term_iterative(spec_of(0, 1, 1, 1, 1, 1), 5) == 7);
    CHECK(term_iterative(spec_of(0, 0, 1, 1, 3, 9), 5) == 16);
}

TEST_CASE("term_iterative matches the list oracle on random rational specs")
{
    oracle::RationalSource src(1);
    for (int trial = 0; trial < 40; ++trial)
    {
        const Spec s = random_spec(src);
        const auto expected = oracle::terms(s.a, s.b, s.c, s.params.r, s.params.s,
                                            s.params.t, 60);
        const auto all = terms_iterative(s, 60);
        REQUIRE(all.size() == 61);
        for (std::size_t n = 0; n <= 60; ++n)
        {
            CHECK(term_iterative(s, n) == expected[n]);
            CHECK(all[n] == expected[n]);
        }
    }
    CHECK(terms_iterative(spec_of(4, 5, 6, 1, 1, 1), 1) == std::vector<Rational>{q(4), q(5)});
}

TEST_CASE("term_matrix examples")
{
    CHECK(term_matrix(spec_of(0, 0, 1, 1, 3, 9), 6) == 37);
    const Spec s{q(2, 3), q(-5, 7), q(4), {q(1, 2), q(3), q(-1)}};
    CHECK(term_matrix(s, 1) == q(-5, 7));
    CHECK(term_matrix(spec_of(0, 0, 1, 1, 3, 9), 200)
          == term_iterative(spec_of(0, 0, 1, 1, 3, 9), 200));
    CHECK(term_matrix(spec_of(0, 1, 1, 1, 1, 1), 10) == 149);
    CHECK_THROWS_AS(term_matrix(s, 0), IndexError);
}

TEST_CASE("term_matrix equals term_iterative for 1 <= n <= 500")
{
    oracle::RationalSource src(2);
    for (int trial = 0; trial < 3; ++trial)
    {
        const Spec s = random_spec(src);
        const auto expected = terms_iterative(s, 500);
        for (std::size_t n = 1; n <= 500; ++n)
        {
            REQUIRE(term_matrix(s, n) == expected[n]);
        }
    }
}

TEST_CASE("companion_power against repeated naive products")
{
    oracle::RationalSource src(3);
    for (int trial = 0; trial < 10; ++trial)
    {
        const Params p{src.any(), src.any(), src.any()};
        const auto m = companion_matrix(p);
        const auto naive = oracle::companion(p.r, p.s, p.t);
        for (std::uint64_t k : {0u, 1u, 2u, 3u, 7u, 8u, 13u, 31u})
        {
            const auto fast = companion_power(m, k);
            const auto slow = oracle::power(naive, k);
            for (int i = 0; i < 3; ++i)
            {
                for (int j = 0; j < 3; ++j)
                {
                    CHECK(fast(i, j) == slow[i][j]);
                }
            }
        }
    }
}

TEST_CASE("companion_power multiplication count stays within 2 log2 e")
{
    const auto m = companion_matrix(t_spec<Integer>().params);
    for (std::uint64_t e : {1ull, 2ull, 3ull, 255ull, 256ull, 1000ull, 999999ull, 1000000ull})
    {
        PowerStats stats;
        companion_power(m, e, &stats);
        CAPTURE(e);
        CHECK(stats.multiplications
              == static_cast<std::size_t>(std::bit_width(e) - 1 + std::popcount(e) - 1));
        CHECK(static_cast<double>(stats.multiplications) <= 2.0 * std::log2(static_cast<double>(e)) + 1e-9);
    }
    PowerStats zero;
    CHECK(companion_power(m, 0, &zero) == Matrix3<Integer>::Identity());
    CHECK(zero.multiplications == 0);
}

TEST_CASE("companion matrix shape and determinant")
{
    oracle::RationalSource src(4);
    for (int trial = 0; trial < 50; ++trial)
    {
        const Params p{src.any(), src.any(), src.any()};
        const auto m = companion_matrix(p);
        CHECK(m(1, 0) == 1);
        CHECK(m(1, 1) == 0);
        CHECK(m(1, 2) == 0);
        CHECK(m(2, 0) == 0);
        CHECK(m(2, 1) == 1);
        CHECK(m(2, 2) == 0);
        oracle::Mat naive;
        for (int i = 0; i < 3; ++i)
        {
            for (int j = 0; j < 3; ++j)
            {
                naive[i][j] = m(i, j);
            }
        }
        CHECK(oracle::det(naive) == p.t);
    }
}

TEST_CASE("advance shifts the state by one index")
{
    oracle::RationalSource src(5);
    const Spec s = random_spec(src);
    const auto h = terms_iterative(s, 80);
    const auto m = companion_matrix(s.params);
    for (std::size_t n = 1; n + 2 <= 80; ++n)
    {
        StateVector<Rational> state;
        state << h[n + 1], h[n], h[n - 1];
        StateVector<Rational> expected;
        expected << h[n + 2], h[n + 1], h[n];
        CHECK(advance(s.params, state) == expected);
        CHECK(StateVector<Rational>(m * state) == expected);
    }
    CHECK(initial_state(s) == StateVector<Rational>(Vector3<Rational>(s.c, s.b, s.a)));
}

TEST_CASE("t_sequence examples and recurrence up to 1000")
{
    CHECK(t_sequence(2) == 1);
    CHECK(t_sequence(4) == 4);
    CHECK(t_sequence(7) == 121);
    const auto t = oracle::t_list(1000);
    const auto prefix = t_sequence_prefix(1000);
    REQUIRE(prefix.size() == 1001);
    for (std::size_t n = 0; n <= 1000; ++n)
    {
        REQUIRE(prefix[n] == t[n]);
        REQUIRE(prefix[n] >= 0);
        if (n >= 3)
        {
            REQUIRE(prefix[n] == prefix[n - 1] + 3 * prefix[n - 2] + 9 * prefix[n - 3]);
        }
    }
    CHECK(t_sequence(250) == t[250]);
}

TEST_CASE("h_sequence examples")
{
    CHECK(h_sequence({q(1), q(3), q(9)}, 2) == 1);
    CHECK(h_sequence({q(1), q(3), q(9)}, 5) == 37);
    CHECK(h_sequence({q(2), q(5), q(7)}, 3) == 9);
    const Params p{q(2, 3), q(-1), q(5, 2)};
    const auto h = oracle::terms(0, 1, p.r, p.r, p.s, p.t, 30);
    for (std::size_t n = 0; n <= 30; ++n)
    {
        CHECK(h_sequence(p, n) == h[n]);
    }
}

TEST_CASE("v_sequence examples")
{
    CHECK(v_sequence(0) == -1);
    CHECK(v_sequence(1) == 3);
    CHECK(v_sequence(4) == 15);
    const auto v = oracle::v_list(200);
    for (std::size_t n = 0; n <= 200; ++n)
    {
        CHECK(v_sequence(n) == v[n]);
    }
}

TEST_CASE("t_closed_form agrees with the recurrence for 2 <= n <= 1000")
{
    CHECK(t_closed_form(2) == 1);
    CHECK(t_closed_form(5) == 16);
    CHECK(t_closed_form(100) == t_sequence(100));
    const auto t = oracle::t_list(1000);
    for (std::size_t n = 2; n <= 1000; ++n)
    {
        REQUIRE(t_closed_form(n) == t[n]);
    }
    CHECK_THROWS_AS(t_closed_form(1), IndexError);
    CHECK_THROWS_AS(t_closed_form(0), IndexError);
}

TEST_CASE("classic_tribonacci")
{
    const std::vector<long> expected{0, 1, 1, 2, 4, 7, 13, 24, 44, 81, 149};
    for (std::size_t n = 0; n < expected.size(); ++n)
    {
        CHECK(classic_tribonacci(n) == expected[n]);
    }
}

TEST_CASE("t = 0 degenerates to a second-order recurrence")
{
    oracle::RationalSource src(6);
    for (int trial = 0; trial < 10; ++trial)
    {
        const Spec s{src.any(), src.any(), src.any(), {src.any(), src.any(), q(0)}};
        const auto h = terms_iterative(s, 200);
        // H_2 is free; from index 1 on the sequence is second order.
        for (std::size_t n = 1; n + 2 <= 200; ++n)
        {
            REQUIRE(h[n + 2] == s.params.r * h[n + 1] + s.params.s * h[n]);
        }
    }
}

TEST_CASE("integer and rational scalars agree")
{
    const auto zi = term_matrix(t_spec<Integer>(), 300);
    const auto zq = term_matrix(t_spec<Rational>(), 300);
    CHECK(Rational(zi) == zq);
}
