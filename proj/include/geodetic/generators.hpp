#pragma once

#include <array>
#include <cstddef>

#include "geodetic/graph.hpp"

// Standard graph families used as fixtures by the tools and tests.
namespace geodetic::generators {

Graph cycle(std::size_t length);
Graph path(std::size_t edges);
Graph complete(std::size_t vertices);

/// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
Graph petersen();

/// K_4 on vertices 0..3 with its edges taken in the order
/// (0,1) (0,2) (0,3) (1,2) (1,3) (2,3); edge k becomes a path of
/// `lengths[k]` edges. Inserted vertices are numbered from 4 upward.
Graph subdivided_k4(const std::array<std::size_t, 6>& lengths);

}  // namespace geodetic::generators
