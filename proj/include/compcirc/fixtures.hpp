#pragma once

// Reference instances, byte-identical to the files in fixtures/.

#include <array>
#include <string_view>

namespace compcirc::fixtures
{

/// Six wires labelled x0 x1 x2 !x0 !x1 !x2 with four gates.
inline constexpr std::string_view annotated_six_wire = R"(CCV v1
wires 6
annot 0 x0
annot 1 x1
annot 2 x2
annot 3 !x0
annot 4 !x1
annot 5 !x2
gate 0 3
gate 1 4
gate 0 5
gate 3 1
output 0
)";

/// Four bottoms, three tops; greedy matching with a designated edge.
inline constexpr std::string_view greedy_matching = R"(GRAPH v1
bottom 4
top 3
edge 0 0
edge 0 1
edge 1 0
edge 2 0
edge 2 2
edge 3 1
edge 3 2
target-edge 3 1
)";

/// Constant-annotated three-wire circuit whose two gates point up.
inline constexpr std::string_view three_wire_up = R"(CCV v1
wires 3
annot 0 0
annot 1 1
annot 2 1
gate 1 0
gate 2 1
output 2
)";

/// Three bottoms, four tops; designated top for the matching circuit.
inline constexpr std::string_view matching_sim = R"(GRAPH v1
bottom 3
top 4
edge 0 0
edge 0 1
edge 0 2
edge 1 0
edge 1 2
edge 2 1
edge 2 3
target-top 2
)";

/// Three wires, two comparators and one negation.
inline constexpr std::string_view negation_rails = R"(CCV v1
wires 3
annot 0 0
annot 1 1
annot 2 1
gate 1 0
gate 2 1
neg 2
output 0
)";

/// Two bottoms, three tops; designated edge for the negation circuit.
inline constexpr std::string_view edge_decision = R"(GRAPH v1
bottom 2
top 3
edge 0 0
edge 0 1
edge 1 0
edge 1 2
target-edge 1 2
)";

/// Forward digraph on five nodes for the pebbling circuit.
inline constexpr std::string_view pebbling = R"(DIGRAPH v1
nodes 5
arc 0 1
arc 0 2
arc 2 3
arc 2 4
)";

struct Named
{
  std::string_view file;
  std::string_view text;
};

inline constexpr std::array<Named, 7> all = { {
    { "annotated_six_wire.ccv", annotated_six_wire },
    { "greedy_matching.graph", greedy_matching },
    { "three_wire_up.ccv", three_wire_up },
    { "matching_sim.graph", matching_sim },
    { "negation_rails.ccv", negation_rails },
    { "edge_decision.graph", edge_decision },
    { "pebbling.digraph", pebbling },
} };

} // namespace compcirc::fixtures
