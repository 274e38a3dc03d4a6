#ifndef CONCEPTORY_CORE_ERRORS_HPP
#define CONCEPTORY_CORE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace conceptory {

/// Error categories surfaced across the library. `input` covers anything a
/// caller handed us (bad syntax, unbound names, out-of-range universes);
/// the more specific codes identify which operation precondition failed.
enum class ErrorCode {
  invalid_universe,
  boundary_mismatch,
  not_a_subobject,
  not_a_superobject,
  no_such_two_cell,
  unbound_name,
  input,
  internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

struct BoundaryMismatch : Error {
  explicit BoundaryMismatch(const std::string& what)
      : Error(ErrorCode::boundary_mismatch, what) {}
};

struct NotASubobject : Error {
  explicit NotASubobject(const std::string& what)
      : Error(ErrorCode::not_a_subobject, what) {}
};

struct NotASuperobject : Error {
  explicit NotASuperobject(const std::string& what)
      : Error(ErrorCode::not_a_superobject, what) {}
};

struct NoSuchTwoCell : Error {
  explicit NoSuchTwoCell(const std::string& what)
      : Error(ErrorCode::no_such_two_cell, what) {}
};

struct UnboundName : Error {
  explicit UnboundName(const std::string& what)
      : Error(ErrorCode::unbound_name, what) {}
};

struct InputError : Error {
  explicit InputError(const std::string& what)
      : Error(ErrorCode::input, what) {}
};

}  // namespace conceptory

#endif
