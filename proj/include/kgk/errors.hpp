#pragma once

#include <stdexcept>
#include <string>

namespace kgk {

// Input documents that do not parse or violate their declared format.
class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// A computation was requested that the tool does not support for the given
// rank (unit class for k != 2, comparing families of different rank, ...).
class unsupported_error : public std::runtime_error {
public:
    explicit unsupported_error(const std::string& what) : std::runtime_error(what) {}
};

// quotient_presentation called with generators outside the ambient kernel.
class subgroup_error : public std::runtime_error {
public:
    explicit subgroup_error(const std::string& what) : std::runtime_error(what) {}
};

// An edge labelling value that is not an element of the given group.
class label_error : public std::runtime_error {
public:
    explicit label_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace kgk
