#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "schelling/assignment.hpp"
#include "schelling/instance.hpp"

namespace schelling::testing {

inline Instance path_instance(int n, std::vector<int> counts) {
  return Instance(Graph::path(n), std::move(counts));
}

inline Instance cycle_instance(int n, std::vector<int> counts) {
  return Instance(Graph::cycle(n), std::move(counts));
}

inline Instance complete_instance(int n, std::vector<int> counts) {
  return Instance(Graph::complete(n), std::move(counts));
}

// 'R' -> type 0, 'B' -> type 1, 'G' -> type 2, '.' -> empty.
inline Assignment from_letters(const std::string& letters) {
  std::vector<int> types;
  types.reserve(letters.size());
  for (char c : letters) {
    switch (c) {
      case 'R': types.push_back(0); break;
      case 'B': types.push_back(1); break;
      case 'G': types.push_back(2); break;
      case '.': types.push_back(kEmpty); break;
      default: throw std::invalid_argument("unknown letter in assignment shorthand");
    }
  }
  return Assignment(types);
}

}  // namespace schelling::testing
