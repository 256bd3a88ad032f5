/*
   Copyright 2026 The arteq Authors

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

#ifndef ARTEQ_ERROR_HPP
#define ARTEQ_ERROR_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace arteq {

enum class ErrorKind {
    ZeroPolynomial,
    MixedOrder,
    UnsupportedOrder,
    NotIrreducible,
    NotMonic,
    NotPMaximal,
    EvenPrime,
    DenominatorClash,
    BaseFieldMismatch,
    IncompatibleRepresentation,
    SolverBoundExceeded,
    RamifiedBase,
    ModulusOverflow,
    NotSquarefree,
    BoundTooLarge,
    NotSinglePrime,
    NormMismatch,
    ValueMismatch,
    NotBijective,
    PrimeExcluded,
    BadModulus,
    InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library. `prime()` carries the rational prime
/// the failure is attached to (0 when not applicable) and `index()` the
/// canonical prime index for per-prime verdicts.
class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, std::string message, std::uint64_t prime = 0, std::size_t index = 0)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message),
          kind_(kind),
          prime_(prime),
          index_(index) {}

    ErrorKind kind() const noexcept { return kind_; }
    std::uint64_t prime() const noexcept { return prime_; }
    std::size_t index() const noexcept { return index_; }

  private:
    ErrorKind kind_;
    std::uint64_t prime_;
    std::size_t index_;
};

}  // namespace arteq

#endif  // ARTEQ_ERROR_HPP
