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

#ifndef SGKIT_DETAIL_SCC_HPP_
#define SGKIT_DETAIL_SCC_HPP_

#include <algorithm>
#include <cstddef>
#include <vector>

#include "sgkit/monoid.hpp"

namespace sgkit::detail {

  //! Strongly connected components of the subgraph induced on `vertices`
  //! (a subset of [0, n)), by an iterative Tarjan search. `neighbours(v, out)`
  //! appends the successors of v to `out`; successors outside `vertices` are
  //! ignored. Returns a component id per vertex (kNoIndex outside), numbered
  //! so that every edge goes from a component to one with a smaller or equal
  //! id, i.e. sinks first.
  template <typename Neighbours>
  std::vector<Index> strongly_connected_components(
      std::size_t               n,
      std::vector<Index> const& vertices,
      Neighbours&&              neighbours) {
    std::vector<Index> comp(n, kNoIndex);
    std::vector<Index> index(n, kNoIndex);
    std::vector<Index> low(n, 0);
    std::vector<bool>  in_graph(n, false), on_stack(n, false);
    for (auto v : vertices) {
      in_graph[v] = true;
    }
    std::vector<Index> stack;
    Index              counter = 0, ncomp = 0;

    struct Frame {
      Index              v;
      std::vector<Index> succ;
      std::size_t        next;
    };
    std::vector<Frame> call;

    auto push = [&](Index v) {
      index[v] = low[v] = counter++;
      stack.push_back(v);
      on_stack[v] = true;
      Frame f{v, {}, 0};
      neighbours(v, f.succ);
      call.push_back(std::move(f));
    };

    for (auto root : vertices) {
      if (index[root] != kNoIndex) {
        continue;
      }
      push(root);
      while (!call.empty()) {
        auto& f = call.back();
        if (f.next < f.succ.size()) {
          auto w = f.succ[f.next++];
          if (!in_graph[w]) {
            continue;
          }
          if (index[w] == kNoIndex) {
            push(w);
          } else if (on_stack[w]) {
            low[f.v] = std::min(low[f.v], index[w]);
          }
          continue;
        }
        auto v = f.v;
        call.pop_back();
        if (!call.empty()) {
          low[call.back().v] = std::min(low[call.back().v], low[v]);
        }
        if (low[v] == index[v]) {
          Index w;
          do {
            w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            comp[w]     = ncomp;
          } while (w != v);
          ++ncomp;
        }
      }
    }
    return comp;
  }

}  // namespace sgkit::detail

#endif  // SGKIT_DETAIL_SCC_HPP_
