#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "mdim/graph.hpp"

namespace mdim {

namespace family {
struct Path { int n; };
struct Cycle { int n; };
struct Complete { int n; };
/// K_{1,n}
struct Star { int n; };
/// K_{1,n} with every edge subdivided p - 1 times.
struct SubdividedStar { int n; int p; };
/// P_m x P_n
struct Grid { int m; int n; };
/// Complete k-ary tree of height h.
struct KAryTree { int k; int h; };
struct Petersen {};
/// Root with three children, each carrying two pendant vertices.
struct CounterexampleTree {};
}  // namespace family

using FamilySpec = std::variant<family::Path, family::Cycle, family::Complete, family::Star,
                                family::SubdividedStar, family::Grid, family::KAryTree,
                                family::Petersen, family::CounterexampleTree>;

class InvalidParameter : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class NoKnownWitness : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parses "path:7", "cycle:9", "complete:5", "star:4", "substar:4x3",
/// "grid:4x5", "karytree:2x3", "petersen", "cextree".
FamilySpec parse_family(std::string_view text);
std::string to_string(const FamilySpec& spec);

/// Throws InvalidParameter when a parameter is out of range.
void validate(const FamilySpec& spec);

/// Labelings:
///   path/cycle      consecutive ids, cycle closes n-1 to 0
///   grid(m, n)      v_{i,j} -> (i-1) n + (j-1)
///   substar(n, p)   centre 0; branch b holds 1+(b-1)p .. bp by distance
///   karytree        breadth-first ids, root 0
///   petersen        outer 0-4, inner 5+i ~ 5+((i+2) mod 5), spokes i ~ i+5
///   cextree         root 0, children 1 2 3, pendants 4 5 | 6 7 | 8 9
Graph generate(const FamilySpec& spec);

struct ExpectedMd {
    enum class Kind { Finite, Infinite, Unspecified };
    Kind kind = Kind::Unspecified;
    int value = 0;
    std::string note;
};

ExpectedMd expected_md(const FamilySpec& spec);

/// Explicit m-resolving set from the family's construction, when one is known.
std::optional<VertexSet> witness_for(const FamilySpec& spec);

/// Same as witness_for but throws NoKnownWitness instead of returning nullopt.
VertexSet require_witness(const FamilySpec& spec);

}  // namespace mdim
