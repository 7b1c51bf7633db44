/*
   Copyright 2026 The trignum Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <stdexcept>
#include <string>

namespace trignum {

class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

// exact-core
class NotDivisible : public Error {
   public:
    using Error::Error;
};
class NotASquare : public Error {
   public:
    using Error::Error;
};
class ConstantTermZero : public Error {
   public:
    using Error::Error;
};
class InnerConstantNonzero : public Error {
   public:
    using Error::Error;
};

// combinatorics
class NegativeK : public Error {
   public:
    using Error::Error;
};
class DegenerateDenominator : public Error {
   public:
    using Error::Error;
};
class OutOfTriangle : public Error {
   public:
    using Error::Error;
};

/// Raised when a construction that must stay in Z[x] produces a fraction.
/// Any occurrence is a bug, not a user error.
class NonIntegerCoefficient : public Error {
   public:
    using Error::Error;
};

// riordan
class NotInvertible : public Error {
   public:
    using Error::Error;
};
class NotProper : public Error {
   public:
    using Error::Error;
};
class OrderMismatch : public Error {
   public:
    using Error::Error;
};

class CheckFailed : public Error {
   public:
    using Error::Error;
};

/// A located failure of the factorization conjecture.
class ConjectureViolation : public Error {
   public:
    ConjectureViolation(long n, std::string what)
        : Error("conjecture violated at n=" + std::to_string(n) + ": " + what), n_(n), what_(std::move(what)) {}
    long n() const noexcept { return n_; }
    const std::string& item() const noexcept { return what_; }

   private:
    long n_;
    std::string what_;
};

// oeis
class NotAvailableOffline : public Error {
   public:
    using Error::Error;
};
class NetworkError : public Error {
   public:
    using Error::Error;
};
class ParseError : public Error {
   public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

   private:
    std::size_t line_;
};

}  // namespace trignum
