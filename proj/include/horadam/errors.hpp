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

#ifndef HORADAM_ERRORS_HPP
#define HORADAM_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace horadam
{

class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Input outside the mathematical domain (Δ ≤ 0, nonpositive init, λ = 0).
class DomainError : public Error
{
public:
    using Error::Error;
};

/// Index below the lower bound an operation is stated for.
class IndexError : public Error
{
public:
    using Error::Error;
};

/// A numeric self-check (imaginary residual, root residual) failed.
class PrecisionError : public Error
{
public:
    using Error::Error;
};

/// A computation would exceed an explicit size cap.
class CapExceeded : public Error
{
public:
    using Error::Error;
};

/// An exact self-check that must hold by construction failed.
class InconsistencyError : public Error
{
public:
    using Error::Error;
};

class ParseError : public Error
{
public:
    using Error::Error;
};

class NoConvergence : public Error
{
public:
    explicit NoConvergence(std::size_t n_max)
        : Error("growth ratio did not reach tolerance by n = "
                + std::to_string(n_max)),
          n_max_(n_max)
    {
    }

    std::size_t n_max() const noexcept { return n_max_; }

private:
    std::size_t n_max_;
};

}  // namespace horadam

#endif  // HORADAM_ERRORS_HPP
