// Copyright 2026 The sgkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SGKIT_ERROR_HPP_
#define SGKIT_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sgkit {

  enum class ErrorCode {
    cap_exceeded,
    inconsistent_product,
    not_well_defined,
    not_surjective,
    size_exceeded,
    not_idempotent,
    not_in_minimal_ideal,
    not_closed,
    no_idempotents,
    size_mismatch,
    not_row_monomial,
    not_in_local_monoid,
    n_too_small,
    modulus_not_allowed,
    too_few_generators,
    prime_bound_violated,
    non_surjective_alpha,
    not_simple,
    not_a_group,
    internal_inconsistency,
    invalid_argument,
    parse_error,
    unknown_object,
    k_mismatch
  };

  std::string_view to_string(ErrorCode code) noexcept;

  //! All failures raised by the library carry one of the codes above.
  class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, std::string const& message);

    ErrorCode code() const noexcept {
      return _code;
    }

   private:
    ErrorCode _code;
  };

  //! Raised when an enumeration grows past its element cap. `reached()` is a
  //! lower bound for the size of the structure that was being enumerated.
  class CapExceeded : public Error {
   public:
    CapExceeded(std::size_t cap, std::size_t reached, std::string const& what);

    std::size_t cap() const noexcept {
      return _cap;
    }
    std::size_t reached() const noexcept {
      return _reached;
    }

   private:
    std::size_t _cap;
    std::size_t _reached;
  };

}  // namespace sgkit

#endif  // SGKIT_ERROR_HPP_
