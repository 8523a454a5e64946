#pragma once

#include <stdexcept>
#include <string>

namespace alcove {

enum class ErrorCode {
  BadType = 1,     // unknown root system label
  BadArgument,     // precondition violation, out-of-range index
  Parse,           // malformed word / JSON / root string
  Unsupported,     // operation not available for this input (e.g. rank-3 render)
  Resource,        // enumeration cap exceeded
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace alcove
