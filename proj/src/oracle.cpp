#include "galton/oracle.hpp"

#include <stdexcept>

namespace galton {

PathEnumeration enumerate_paths(const Checkerboard& board,
                                const TunnelingTable& table,
                                std::pair<int, int> from, std::pair<int, int> to) {
  if (to.first < from.first || to.second < from.second)
    throw std::invalid_argument("target is not monotonically reachable");
  PathEnumeration out;
  std::vector<std::pair<int, int>> path{from};
  // Depth-first over pending (node, entered-rightward, probability-so-far,
  // path length at branch point) alternatives.
  struct Frame {
    std::pair<int, int> node;
    bool entered_right;
    double prob;
    size_t depth;
  };
  std::vector<Frame> stack{{from, true, 1.0, 1}};
  while (!stack.empty()) {
    Frame f = stack.back();
    stack.pop_back();
    path.resize(f.depth);
    path.back() = f.node;
    while (true) {
      const auto [k, l] = path.back();
      if (k == to.first && l == to.second) {
        out.paths.push_back(path);
        out.probabilities.push_back(f.prob);
        break;
      }
      const double eta = table.at(k - 1, l - 1);
      const double p_right = f.entered_right ? eta : 1.0 - eta;
      const double p_down = f.entered_right ? 1.0 - eta : eta;
      const bool can_right = k < to.first, can_down = l < to.second;
      if (can_right && can_down)
        stack.push_back({{k, l + 1}, false, f.prob * p_down, path.size() + 1});
      if (can_right) {
        f.entered_right = true;
        f.prob *= p_right;
        path.emplace_back(k + 1, l);
      } else {
        f.entered_right = false;
        f.prob *= p_down;
        path.emplace_back(k, l + 1);
      }
    }
  }
  return out;
}

StatePopulations brute_force_traversal(const Checkerboard& board,
                                       const TunnelingTable& table,
                                       const StatePopulations& initial) {
  if (board.n_nuclei > 4)
    throw std::invalid_argument("brute-force traversal limited to n_nuclei <= 4");
  const int L = board.size;
  if (static_cast<int>(initial.m0.size()) != L ||
      static_cast<int>(initial.m1.size()) != L)
    throw std::invalid_argument("initial populations size does not match board");

  StatePopulations out = StatePopulations::zero(L);
  struct Frame {
    int k, l;
    bool moving_right;
    double prob;
  };
  std::vector<Frame> stack;
  auto walk = [&](Frame entry) {
    stack.push_back(entry);
    while (!stack.empty()) {
      Frame f = stack.back();
      stack.pop_back();
      if (f.prob == 0.0) continue;
      if (f.k >= L) {  // exits rightward: stays in m_s=0 on its row
        out.m0[board.l_rank[f.l]] += f.prob;
        continue;
      }
      if (f.l >= L) {  // exits downward: remains m_s=+1 in its column
        out.m1[board.k_rank[f.k]] += f.prob;
        continue;
      }
      const double eta = table.at(f.k, f.l);
      const double p_right = f.moving_right ? eta : 1.0 - eta;
      const double p_down = 1.0 - p_right;
      stack.push_back({f.k + 1, f.l, true, f.prob * p_right});
      stack.push_back({f.k, f.l + 1, false, f.prob * p_down});
    }
  };
  for (int l = 0; l < L; ++l)
    walk({0, l, true, initial.m0[board.l_rank[l]]});
  for (int k = 0; k < L; ++k)
    walk({k, 0, false, initial.m1[board.k_rank[k]]});
  return out;
}

}  // namespace galton
