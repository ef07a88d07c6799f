#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace bsymb::conway {

// Conway polynomials C_{p,d}, coefficients constant term first, leading 1
// included. Values match the standard published tables; they make field
// constructions reproducible across computer-algebra systems.
inline const std::map<std::pair<int, int>, std::vector<int>>& table() {
  static const std::map<std::pair<int, int>, std::vector<int>> t = {
      {{3, 1}, {1, 1}},
      {{3, 2}, {2, 2, 1}},
      {{3, 3}, {1, 2, 0, 1}},
      {{3, 4}, {2, 0, 0, 2, 1}},
      {{3, 5}, {1, 2, 0, 0, 0, 1}},
      {{3, 6}, {2, 2, 1, 0, 2, 0, 1}},
      {{3, 7}, {1, 0, 2, 0, 0, 0, 0, 1}},
      {{3, 8}, {2, 2, 2, 0, 1, 2, 0, 0, 1}},
      {{3, 10}, {2, 1, 0, 0, 2, 2, 2, 0, 0, 0, 1}},
      {{3, 12}, {2, 0, 1, 0, 1, 1, 1, 0, 0, 0, 0, 0, 1}},
      {{5, 1}, {3, 1}},
      {{5, 2}, {2, 4, 1}},
      {{5, 3}, {3, 3, 0, 1}},
      {{5, 4}, {2, 4, 4, 0, 1}},
      {{5, 6}, {2, 0, 1, 4, 1, 0, 1}},
      {{5, 8}, {2, 4, 3, 0, 1, 0, 0, 0, 1}},
      {{7, 1}, {4, 1}},
      {{7, 2}, {3, 6, 1}},
      {{7, 3}, {4, 0, 6, 1}},
      {{7, 4}, {3, 4, 5, 0, 1}},
      {{7, 6}, {3, 6, 4, 5, 1, 0, 1}},
      {{11, 1}, {9, 1}},
      {{11, 2}, {2, 7, 1}},
      {{11, 4}, {2, 10, 8, 0, 1}},
      {{13, 1}, {11, 1}},
      {{13, 2}, {2, 12, 1}},
      {{13, 4}, {2, 12, 3, 0, 1}},
  };
  return t;
}

inline std::optional<std::vector<int>> lookup(int p, int degree) {
  auto it = table().find({p, degree});
  if (it == table().end()) return std::nullopt;
  return it->second;
}

}  // namespace bsymb::conway
