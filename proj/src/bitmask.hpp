// Copyright 2026 The cliquecode Authors
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

// Private helpers for the exact searches, which work on 64-bit vertex masks.

#ifndef CLIQUECODE_SRC_BITMASK_HPP_
#define CLIQUECODE_SRC_BITMASK_HPP_

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "cliquecode/errors.hpp"
#include "cliquecode/graph.hpp"

namespace cliquecode::detail {

using VertexMask = std::uint64_t;

inline constexpr std::size_t kMaxSearchVertices = 64;

inline VertexMask bit(Vertex v) { return VertexMask{1} << v; }

inline void require_search_size(const Graph& g, const char* op) {
  if (g.vertex_count() > kMaxSearchVertices) {
    throw InputError(std::string(op) + ": exact search supports at most 64 vertices");
  }
}

inline std::vector<VertexMask> adjacency_masks(const Graph& g) {
  std::vector<VertexMask> adj(g.vertex_count(), 0);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    for (Vertex u : g.neighbors(v)) adj[v] |= bit(u);
  }
  return adj;
}

inline std::vector<Vertex> mask_to_vertices(VertexMask m) {
  std::vector<Vertex> out;
  while (m != 0) {
    out.push_back(static_cast<Vertex>(std::countr_zero(m)));
    m &= m - 1;
  }
  return out;
}

inline VertexMask vertices_to_mask(const std::vector<Vertex>& vs) {
  VertexMask m = 0;
  for (Vertex v : vs) m |= bit(v);
  return m;
}

}  // namespace cliquecode::detail

#endif  // CLIQUECODE_SRC_BITMASK_HPP_
