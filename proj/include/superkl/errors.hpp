#pragma once

#include <stdexcept>
#include <string>

namespace superkl {

// A search or enumeration needed more room than the configured window.
class WindowExhausted : public std::runtime_error {
 public:
  explicit WindowExhausted(const std::string& what) : std::runtime_error(what) {}
};

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace superkl
