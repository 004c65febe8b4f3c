// Umbrella header.

#ifndef HEAPABLE_HEAPABLE_HPP
#define HEAPABLE_HEAPABLE_HPP

#include "address.hpp"
#include "estimate.hpp"
#include "families.hpp"
#include "greedy.hpp"
#include "hammersley.hpp"
#include "heap_forest.hpp"
#include "hooks.hpp"
#include "random.hpp"
#include "rs.hpp"
#include "tableau.hpp"

namespace heapable {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace heapable

#endif  // HEAPABLE_HEAPABLE_HPP
