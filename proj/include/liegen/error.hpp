#ifndef LIEGEN_ERROR_HPP
#define LIEGEN_ERROR_HPP

#include <stdexcept>
#include <string>

namespace liegen {

enum class ErrorCode {
  invalid_argument = 1,
  dimension_mismatch,
  parse_error,
  domain_error,
  internal_error,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace liegen

#endif
