#pragma once

#include <stdexcept>
#include <string>

namespace femafs {

// Thrown for data and pipeline failures (bad files, degenerate inputs).
// API misuse (dimension mismatches, out-of-range parameters) throws
// std::invalid_argument instead.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace femafs
