#pragma once

#include <stdexcept>
#include <string>

namespace catk {

enum class ErrorKind {
  Usage,
  Data,
  InconsistentSides,
  UndefinedCosq,
  NoUniqueGeodesic,
  ReflectionUndefined,
  Parse,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace catk
