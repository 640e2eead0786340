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

#include "sgkit/schutzenberger.hpp"

#include <fmt/format.h>

#include "sgkit/error.hpp"
#include "sgkit/transformation.hpp"

namespace sgkit {

  Rlm rlm(ReesCoordinates const& R) {
    auto const&          M = R.monoid;
    std::vector<Element> images;
    for (std::size_t g = 0; g < M.generator_count(); ++g) {
      std::vector<Element::value_type> t(R.b_size());
      for (Index b = 0; b < R.b_size(); ++b) {
        t[b] = R.b_of[M.right(R.col_reps[b], g)];
      }
      images.push_back(transformation(t));
    }
    auto action = generate_monoid(images, transformation_rule(R.b_size()));
    auto hom    = hom_from_images(M, action, images);
    return Rlm{std::move(action), std::move(hom)};
  }

  Rlm rlm(FiniteMonoid const& M) {
    return rlm(rees_coordinates(M));
  }

  RowMonomialMatrix SchutzenbergerRep::matrix_of(Index s) const {
    auto const&                         M = rees.monoid;
    std::vector<RowMonomialMatrix::Row> rows(rees.b_size());
    for (Index b = 0; b < rees.b_size(); ++b) {
      auto y  = M.multiply(rees.col_reps[b], s);
      auto g  = M.multiply(M.multiply(rees.base, y), rees.base);
      rows[b] = {rees.b_of[y], rees.monoid_to_group[g]};
    }
    return RowMonomialMatrix(rees.group.monoid(), std::move(rows));
  }

  SchutzenbergerRep schutz_rep(ReesCoordinates const& R) {
    auto const&       M = R.monoid;
    SchutzenbergerRep partial{R, M, identity_hom(M)};
    std::vector<Element> images;
    for (auto g : M.generators()) {
      images.push_back(partial.matrix_of(g).to_element());
    }
    auto image = generate_monoid(
        images, row_monomial_rule(R.group.monoid(), R.b_size()), M.size());
    auto hom = hom_from_images(M, image, images);
    for (Index x = 0; x < M.size(); ++x) {
      if (image.at(hom(x)) != partial.matrix_of(x).to_element()) {
        throw Error(ErrorCode::internal_inconsistency,
                    fmt::format("Schutzenberger matrix of {} disagrees with "
                                "its generator word",
                                M.format(x)));
      }
    }
    return SchutzenbergerRep{R, std::move(image), std::move(hom)};
  }

  SchutzenbergerRep schutz_rep(FiniteMonoid const& M) {
    return schutz_rep(rees_coordinates(M));
  }

  std::optional<std::pair<Index, Index>> faithfulness_witness(
      SchutzenbergerRep const& rep) {
    std::vector<Index> first(rep.image.size(), kNoIndex);
    for (Index x = 0; x < rep.hom.source().size(); ++x) {
      auto& f = first[rep.hom(x)];
      if (f != kNoIndex) {
        return std::make_pair(f, x);
      }
      f = x;
    }
    return std::nullopt;
  }

  bool is_faithful_on_min_ideal(FiniteMonoid const& M) {
    return !faithfulness_witness(schutz_rep(M));
  }

  FaithfulQuotient schutz_faithful_quotient(FiniteMonoid const& M) {
    auto rep = schutz_rep(M);
    return FaithfulQuotient{rep.image, rep.hom};
  }

}  // namespace sgkit
