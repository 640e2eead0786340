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

#include "sgkit/error.hpp"

#include <fmt/format.h>

namespace sgkit {

  std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
      case ErrorCode::cap_exceeded: return "CapExceeded";
      case ErrorCode::inconsistent_product: return "InconsistentProduct";
      case ErrorCode::not_well_defined: return "NotWellDefined";
      case ErrorCode::not_surjective: return "NotSurjective";
      case ErrorCode::size_exceeded: return "SizeExceeded";
      case ErrorCode::not_idempotent: return "NotIdempotent";
      case ErrorCode::not_in_minimal_ideal: return "NotInMinimalIdeal";
      case ErrorCode::not_closed: return "NotClosed";
      case ErrorCode::no_idempotents: return "NoIdempotents";
      case ErrorCode::size_mismatch: return "SizeMismatch";
      case ErrorCode::not_row_monomial: return "NotRowMonomial";
      case ErrorCode::not_in_local_monoid: return "NotInLocalMonoid";
      case ErrorCode::n_too_small: return "NTooSmall";
      case ErrorCode::modulus_not_allowed: return "ModulusNotAllowed";
      case ErrorCode::too_few_generators: return "TooFewGenerators";
      case ErrorCode::prime_bound_violated: return "PrimeBoundViolated";
      case ErrorCode::non_surjective_alpha: return "NonSurjectiveAlpha";
      case ErrorCode::not_simple: return "NotSimple";
      case ErrorCode::not_a_group: return "NotAGroup";
      case ErrorCode::internal_inconsistency: return "InternalInconsistency";
      case ErrorCode::invalid_argument: return "InvalidArgument";
      case ErrorCode::parse_error: return "ParseError";
      case ErrorCode::unknown_object: return "UnknownObject";
      case ErrorCode::k_mismatch: return "KMismatch";
    }
    return "Unknown";
  }

  Error::Error(ErrorCode code, std::string const& message)
      : std::runtime_error(fmt::format("{}: {}", to_string(code), message)),
        _code(code) {}

  CapExceeded::CapExceeded(std::size_t cap,
                           std::size_t reached,
                           std::string const& what)
      : Error(ErrorCode::cap_exceeded,
              fmt::format("{} exceeded the cap of {} elements (at least {} "
                          "elements)",
                          what,
                          cap,
                          reached)),
        _cap(cap),
        _reached(reached) {}

}  // namespace sgkit
