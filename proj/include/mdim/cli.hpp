#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mdim/search.hpp"

namespace mdim::cli {

enum ExitCode : int { Ok = 0, Usage = 1, InvalidGraph = 2, SearchCapExceeded = 3, ClaimViolated = 4 };

/// A graph file path or a family spec string.
struct Input {
    std::optional<std::string> path;
    std::optional<std::string> family;
};

struct Md { Input input; };
struct Dim { Input input; };
struct Verify { Input input; VertexSet set; };
struct Bounds { Input input; };
struct Family { std::string spec; std::string action = "emit"; };
struct Tables { std::string selector = "all"; };
struct Scan { int n = 6; bool dedup = false; };
struct Suite { int scan_n = 6; };

using Command = std::variant<Md, Dim, Verify, Bounds, Family, Tables, Scan, Suite>;

struct Options {
    bool json = false;
    SearchConfig search;
};

int run(const Command& cmd, const Options& opts, std::ostream& out, std::ostream& err);

/// Parses argv (including the program name) and runs the command.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mdim::cli
