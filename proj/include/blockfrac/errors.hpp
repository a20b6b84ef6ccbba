#pragma once

#include <stdexcept>
#include <string>

namespace blockfrac {

// Invalid arguments or malformed domain objects.
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input files; carries a human-readable locus (line/field).
class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A configured cap (vertex count, branch nodes, iterations) was exceeded.
class resource_error : public std::runtime_error {
public:
    explicit resource_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A constructive extraction needed a certificate that does not hold.
class certificate_error : public std::runtime_error {
public:
    explicit certificate_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace blockfrac
