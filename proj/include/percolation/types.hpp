#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace percolation {

/// Dense node index assigned at ingestion, contiguous 0..n-1.
using NodeId = std::int32_t;

/// A clique as a strictly ascending array of node ids.
using Clique = std::vector<NodeId>;

/// Index of a clique within a CliqueStore (or a k-clique list).
using CliqueId = std::int32_t;

class ParseError : public std::runtime_error {
public:
    ParseError(std::int64_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what),
          line_(line) {}

    std::int64_t line() const noexcept { return line_; }

private:
    std::int64_t line_;
};

/// Thrown when a configured safety cap is hit (clique blowup, naive pair
/// blowup). Carries the cap name so callers can report which limit fired.
class CapExceeded : public std::runtime_error {
public:
    CapExceeded(std::string cap_name, std::uint64_t limit)
        : std::runtime_error(cap_name + " exceeded (limit " + std::to_string(limit) + ")"),
          cap_name_(std::move(cap_name)),
          limit_(limit) {}

    const std::string& cap_name() const noexcept { return cap_name_; }
    std::uint64_t limit() const noexcept { return limit_; }

private:
    std::string cap_name_;
    std::uint64_t limit_;
};

}  // namespace percolation
