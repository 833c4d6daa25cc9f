#pragma once

#include <utility>
#include <vector>

#include "galton/traversal.hpp"

namespace galton {

// All monotone right/down paths between two nodes, with per-path arrival
// probabilities (the factor at the final node is not applied, so the
// probabilities sum to the traversal probability into that node).
struct PathEnumeration {
  std::vector<std::vector<std::pair<int, int>>> paths;  // 1-based coordinates
  std::vector<double> probabilities;
};

PathEnumeration enumerate_paths(const Checkerboard& board,
                                const TunnelingTable& table,
                                std::pair<int, int> from, std::pair<int, int> to);

// Exhaustive full-sweep traversal: every entry is walked by depth-first
// enumeration of complete trajectories with explicit stack and running
// products.  Deliberately shares no code with the dynamic program; N <= 4.
StatePopulations brute_force_traversal(const Checkerboard& board,
                                       const TunnelingTable& table,
                                       const StatePopulations& initial);

}  // namespace galton
