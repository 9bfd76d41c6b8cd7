/*
 * Copyright 2026 The superpot developers
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef SUPERPOT_ERRORS_HPP
#define SUPERPOT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace superpot {

/* error classes map onto the CLI exit-code contract:
 *   2 bad input, 3 a configured cap was exceeded, 4 internal invariant broke */
enum class errc : int { parse = 2, cap = 3, internal = 4 };

class Error : public std::runtime_error {
   public:
    Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    [[nodiscard]] errc code() const noexcept { return code_; }

   private:
    errc code_;
};

struct ZeroPolynomial : Error {
    explicit ZeroPolynomial(const std::string& ctx)
        : Error(errc::parse, "zero polynomial not admissible: " + ctx) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(errc::parse, what) {}
};

struct ZeroSubstitution : Error {
    explicit ZeroSubstitution(const std::string& what) : Error(errc::parse, what) {}
};

/* carries the offending denominator (printed form) as witness */
struct NotLaurent : Error {
    explicit NotLaurent(const std::string& witness)
        : Error(errc::parse, "rational function is not a Laurent polynomial, denominator " + witness),
          witness_(witness) {}
    [[nodiscard]] const std::string& witness() const noexcept { return witness_; }

   private:
    std::string witness_;
};

struct DegreeExplosion : Error {
    explicit DegreeExplosion(long cap)
        : Error(errc::cap, "Groebner degree cap " + std::to_string(cap) + " exceeded") {}
};

struct SearchSpaceTooLarge : Error {
    explicit SearchSpaceTooLarge(const std::string& what) : Error(errc::cap, what) {}
};

struct NoStabilization : Error {
    explicit NoStabilization(long n_max)
        : Error(errc::cap, "dimension sweep did not stabilize by N = " + std::to_string(n_max)) {}
};

struct NotZeroDimensional : Error {
    explicit NotZeroDimensional(const std::string& what) : Error(errc::parse, what) {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& what) : Error(errc::parse, what) {}
};

struct NotCritical : Error {
    explicit NotCritical(const std::string& what) : Error(errc::parse, what) {}
};

struct NotIsolated : Error {
    explicit NotIsolated(const std::string& what) : Error(errc::parse, what) {}
};

struct DivisionFailure : Error {
    explicit DivisionFailure(const std::string& what) : Error(errc::internal, what) {}
};

struct HomotopyObstruction : Error {
    explicit HomotopyObstruction(const std::string& what) : Error(errc::internal, what) {}
};

struct InvariantViolation : Error {
    explicit InvariantViolation(const std::string& what) : Error(errc::internal, what) {}
};

}  // namespace superpot

#endif
