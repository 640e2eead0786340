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

#ifndef SGKIT_ACCEPTANCE_HPP_
#define SGKIT_ACCEPTANCE_HPP_

#include <functional>
#include <string>
#include <vector>

#include "sgkit/report.hpp"

namespace sgkit::acceptance {

  struct CriterionResult {
    int         number;
    std::string name;
    bool        pass;
    //! Deterministic summary or failure witness.
    std::string detail;
    double      seconds;
    //! 0 if there is no time bound.
    double limit;
  };

  //! Runs every acceptance criterion in order, calling `progress` after
  //! each one.
  std::vector<CriterionResult> run(
      std::function<void(CriterionResult const&)> const& progress = {});

  //! One check per criterion; timings go to the notes only.
  Report to_report(std::vector<CriterionResult> const& results);

  //! "PASS 3 cover_cheap_s3: ..." style line.
  std::string format_line(CriterionResult const& result);

  //! The definition files used by the embedding criteria, also shipped as
  //! data files.
  extern char const* const kEmbedOneZero;
  extern char const* const kEmbedCyclic;

}  // namespace sgkit::acceptance

#endif  // SGKIT_ACCEPTANCE_HPP_
