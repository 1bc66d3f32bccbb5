#pragma once

#include "bochert/group.hpp"

#include <cstdint>
#include <string>

namespace bochert {

enum class MinDegMethod { automatic, exhaustive, backtrack };

std::string to_string(MinDegMethod m);
MinDegMethod parse_min_deg_method(const std::string &s);

struct MinDegResult {
  std::size_t m = 0;
  Permutation witness;
  MinDegMethod method = MinDegMethod::exhaustive;
  std::uint64_t elements_visited = 0;
  std::uint64_t nodes_pruned = 0;
};

inline constexpr std::uint64_t default_exhaustive_cap = 10'000'000;

/// Scans every non-identity element. The witness is the lexicographically least image
/// sequence among elements of minimum support. Throws CapExceeded when the order exceeds
/// `order_cap` and PreconditionError on the trivial group.
MinDegResult minimal_degree_exhaustive(const Group &g, std::uint64_t order_cap = default_exhaustive_cap,
                                       unsigned jobs = 1);

/// Depth-first search over base images maximizing the fixed-point count.
///
/// At each node the partial product y is known and every completion has the form z*y with z in
/// the next stabilizer; alpha can only be fixed if alpha and alpha^(y^-1) share an orbit of
/// that stabilizer. Nodes whose count of such points cannot beat the incumbent are pruned.
/// Children are visited in increasing order of the image they give the current base point, so
/// the first optimal leaf is the lexicographically least one.
MinDegResult minimal_degree_backtrack(const Group &g, unsigned jobs = 1);

/// Dispatches on the group order (exhaustive up to `order_cap`) and caches on the handle.
MinDegResult min_degree(const Group &g, MinDegMethod method = MinDegMethod::automatic,
                        std::uint64_t order_cap = default_exhaustive_cap, unsigned jobs = 1);

} // namespace bochert
