#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "mdim/graph.hpp"

namespace mdim {

/// Malformed edge-list text, or a graph error traced back to its line.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::optional<GraphError::Kind> kind, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line), kind_(kind) {}

    std::size_t line() const noexcept { return line_; }
    /// Set when the line parsed but describes an invalid edge.
    std::optional<GraphError::Kind> kind() const noexcept { return kind_; }

private:
    std::size_t line_;
    std::optional<GraphError::Kind> kind_;
};

/// Lines starting with '#' are comments. An optional first data line
/// "n=<int>" fixes the order; otherwise n is one more than the largest id.
/// Every other data line is "u v".
Graph parse_edge_list(std::string_view text);

std::string format_edge_list(const Graph& g);

}  // namespace mdim
