#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qsr/graph.hpp"

// Named witness graphs. g1 and g2 are the unique strictly quasi-strongly
// regular graphs with k = 4, a = 0, c = (3,2,1) at the extreme orders 11 and
// 12; h8 is the 7-vertex double-star gadget used in the independence-number
// argument; c5 and k44 are small reference graphs.

namespace qsr {

Graph build_g1();
Graph build_g2();
Graph build_h8();

Graph build_named(std::string_view name);
std::vector<std::string> catalog_names();

}  // namespace qsr
