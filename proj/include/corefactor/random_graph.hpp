#pragma once

#include <cstdint>

#include "corefactor/multigraph.hpp"

namespace corefactor {

// Sparse G(n, p) sample with mean degree c, i.e. p = c / (n - 1), drawn by
// geometric skip sampling over the C(n,2) vertex pairs in lexicographic
// order: expected O(n + m) time rather than O(n^2) Bernoulli draws.
// Requires n >= 1 and 0 <= c <= n - 1. No self-loops, no parallel edges.
// Deterministic for a fixed (n, c, seed).
MultiGraph gnp_random(std::size_t n, double c, std::uint64_t seed);

}  // namespace corefactor
