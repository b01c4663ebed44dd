#ifndef SAMPNET_TYPES_HPP
#define SAMPNET_TYPES_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sampnet {

// Dataset-wide artist identifier. Non-negative, unique within a dataset,
// shared by every module.
using ArtistId = std::int64_t;

// Bad input: malformed files, broken references, invalid arguments.
// The CLI maps this to exit code 1.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Numerical failure: separation, rank deficiency, undefined corrections.
// The CLI maps this to exit code 2.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace sampnet

#endif  // SAMPNET_TYPES_HPP
