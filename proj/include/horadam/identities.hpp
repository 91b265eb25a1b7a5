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

#ifndef HORADAM_IDENTITIES_HPP
#define HORADAM_IDENTITIES_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "horadam/numeric.hpp"
#include "horadam/recurrence.hpp"

namespace horadam
{

enum class IdentityId
{
    E4_ADDITION,
    E5_SQUARE_H,
    E6_SQUARE_HORADAM,
    I1,
    I2,
    I3,
    PROP1,
    PROP2,
    SIMILARITY_N10,
    REMARK_TRIB,
    REMARK_LAMBDA1,
    D_SEQ_PROOF2,
};

inline constexpr std::array<IdentityId, 12> kAllIdentities{
    IdentityId::E4_ADDITION,    IdentityId::E5_SQUARE_H,  IdentityId::E6_SQUARE_HORADAM,
    IdentityId::I1,             IdentityId::I2,           IdentityId::I3,
    IdentityId::PROP1,          IdentityId::PROP2,        IdentityId::SIMILARITY_N10,
    IdentityId::REMARK_TRIB,    IdentityId::REMARK_LAMBDA1, IdentityId::D_SEQ_PROOF2,
};

std::string_view to_string(IdentityId id);
std::optional<IdentityId> parse_identity_id(std::string_view text);

/// One checked instance of an identity. Scalar identities carry one value per
/// side; matrix and triple identities list every compared entry.
struct IdentityReport
{
    IdentityId id;
    std::vector<std::pair<std::string, std::string>> inputs;
    std::vector<Rational> lhs;
    std::vector<Rational> rhs;
    bool pass = false;  // lhs == rhs, entrywise and exactly
};

/// Tab-separated record: id, inputs (k=v;k=v), lhs, rhs, PASS|FAIL.
/// Multi-valued sides render as [v1,v2,...].
std::string format_record(const IdentityReport& report);

/// Side rendering used by format_record: "p/q" or "[p/q,...]".
std::string format_side(const std::vector<Rational>& side);

/// Nonzero λ generating the coefficient family (λ, 3λ², 9λ³).
class LambdaFamily
{
public:
    /// Throws DomainError for λ = 0.
    explicit LambdaFamily(Rational lambda);

    const Rational& lambda() const { return lambda_; }
    Params params() const;

private:
    Rational lambda_;
};

/// H_{n+m} = h_n H_{m+1} + (s h_{n-1} + t h_{n-2}) H_m + t h_{n-1} H_{m-1};
/// n ≥ 2, m ≥ 1.
IdentityReport check_addition(const Spec& spec, std::size_t n, std::size_t m);

/// h_n² + s h_{n-1}² + 2t h_{n-1} h_{n-2} = h_{2n-1}; n ≥ 2.
IdentityReport check_square_h(const Params& params, std::size_t n);

/// H_n² + s H_{n-1}² + 2t H_{n-1} H_{n-2}
///   = c H_{2n-2} + (sb + ta) H_{2n-3} + tb H_{2n-4}; n ≥ 2.
IdentityReport check_square_horadam(const Spec& spec, std::size_t n);

/// T_{n-1} = 3^{n-2} H_n(1,0,0; 1/3,1/3,1/3); n ≥ 1.
IdentityReport check_i1(std::size_t n);
/// T_{n-1} + 3T_{n-2} = 3^{n-2} H_n(0,1,0; 1/3,1/3,1/3); n ≥ 2.
IdentityReport check_i2(std::size_t n);
/// T_n = 3^{n-2} H_n(0,0,1; 1/3,1/3,1/3); n ≥ 0.
IdentityReport check_i3(std::size_t n);
/// The subset of I1, I2, I3 whose lower bound n satisfies.
std::vector<IdentityReport> check_relations(std::size_t n);

/// T_{n-1} = H_n(1,0,0; λ,3λ²,9λ³) / (9λ^n); n ≥ 2.
IdentityReport check_prop1(const LambdaFamily& family, std::size_t n);

/// T_n = H_n(0,0,1; λ,3λ²,9λ³) / λ^{n-2}; n ≥ 1.
///
/// Also asserts, term by term up to n, that D_k = λ^{k-2} T_k obeys the
/// (λ, 3λ², 9λ³) recurrence; a violation throws InconsistencyError.
IdentityReport check_prop2(const LambdaFamily& family, std::size_t n);

/// D_{n+1} = λD_n + 3λ²D_{n-1} + 9λ³D_{n-2} for D_k = λ^{k-2} T_k; n ≥ 2.
IdentityReport check_d_sequence(const LambdaFamily& family, std::size_t n);

/// (1/λ) F C F⁻¹ = [[1,3,9],[1,0,0],[0,1,0]] with F = diag(1, λ, λ²) and C the
/// (λ, 3λ², 9λ³) companion matrix, followed by the power form
/// [(1/λ) F C F⁻¹]^k = λ^{-k} F C^k F⁻¹ for k = 0..9. The report lists the
/// 9 + 90 entries of each side.
IdentityReport check_similarity(const LambdaFamily& family);

/// fundamental_exponents(1,1,1; n) = (Trib_{n-2}, Trib_{n-2} + Trib_{n-3},
/// Trib_{n-1}); n ≥ 3.
IdentityReport check_remark_trib(std::size_t n);

/// T_{n-1} = H_n(1,0,0; 1,3,9) / 9; n ≥ 2.
IdentityReport check_remark_lambda1(std::size_t n);

/// Seeded sweep: cases_per_identity reports for every identity in `ids`
/// (all identities when empty), grouped by identity in enum order. Each
/// identity draws from its own stream derived from (seed, id), so filtering
/// does not change the surviving reports. Throws std::invalid_argument when
/// cases_per_identity is 0.
std::vector<IdentityReport> run_catalog(std::uint64_t seed,
                                        std::size_t cases_per_identity,
                                        const std::vector<IdentityId>& ids = {});

bool all_pass(const std::vector<IdentityReport>& reports);

}  // namespace horadam

#endif  // HORADAM_IDENTITIES_HPP
