#pragma once

#include <optional>

#include "schelling/assignment.hpp"
#include "schelling/instance.hpp"

namespace schelling {

// Decides whether a two-type instance admits an assignment where every agent
// has utility 1, by enumerating the candidate vertex sets of the second type
// in lexicographic order. Runs in time n^b times a polynomial, where b is the
// second type's count. Returns the first witness found, or nullopt when no
// perfect assignment exists. Throws std::invalid_argument unless the instance
// has exactly two types.
std::optional<Assignment> find_perfect_two_types(const Instance& instance);

}  // namespace schelling
