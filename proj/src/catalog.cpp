#include "qsr/catalog.hpp"

#include <string>

namespace qsr {

// Vertex labels follow the figure coordinates left to right, top to bottom;
// the transcription gate is matches(g, n, 4, 0, [3,2,1], strict) in the tests.

Graph build_g1() {
    static const std::vector<Edge> edges = {
        {0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 5}, {2, 5}, {3, 5}, {1, 6},
        {2, 6}, {2, 7}, {1, 9}, {3, 10}, {3, 7}, {4, 7}, {7, 9}, {4, 8},
        {4, 10}, {5, 8}, {6, 8}, {6, 10}, {8, 9}, {9, 10},
    };
    return make_graph(11, edges);
}

Graph build_g2() {
    static const std::vector<Edge> edges = {
        {0, 5}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {1, 6},
        {5, 6}, {5, 7}, {7, 2}, {7, 11}, {7, 10}, {8, 5}, {8, 3}, {8, 11},
        {8, 9}, {9, 2}, {9, 4}, {9, 10}, {10, 6}, {10, 3}, {11, 6}, {11, 4},
    };
    return make_graph(12, edges);
}

Graph build_h8() {
    // double star: centre 0 carries leaves 1, 2 and the shared path vertex 3;
    // centre 4 carries 3 and the leaves 5, 6
    static const std::vector<Edge> edges = {{0, 1}, {0, 2}, {0, 3}, {3, 4}, {4, 5}, {4, 6}};
    return make_graph(7, edges);
}

namespace {

Graph build_c5() {
    return make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
}

Graph build_k44() {
    std::vector<Edge> edges;
    for (int i = 0; i < 4; ++i)
        for (int j = 4; j < 8; ++j) edges.emplace_back(i, j);
    return make_graph(8, edges);
}

}  // namespace

Graph build_named(std::string_view name) {
    if (name == "g1") return build_g1();
    if (name == "g2") return build_g2();
    if (name == "h8") return build_h8();
    if (name == "c5") return build_c5();
    if (name == "k44") return build_k44();
    throw UnknownName("unknown catalog name: " + std::string(name));
}

std::vector<std::string> catalog_names() { return {"c5", "g1", "g2", "h8", "k44"}; }

}  // namespace qsr
