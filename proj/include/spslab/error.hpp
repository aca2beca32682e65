#pragma once

#include <stdexcept>
#include <string>

namespace spslab {

enum class ErrorKind {
  InvalidInput,
  CycleInCovers,
  NotTransitivelyReduced,
  NotALattice,
  NotRectangular,
  LayoutContradiction,
  KindMismatch,
  NotAntisymmetric,
  IsoFailure,
  MissingShield,
  NotACell,
  NotDistributiveCell,
  DecompositionFailed,
  GreyCellNotFound,
  ReplayMismatch,
  EquivalenceViolation,
  Internal,
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind(kind) {}
  ErrorKind kind;
};

[[noreturn]] inline void fail(ErrorKind k, const std::string& msg) { throw Error(k, msg); }

inline void require(bool cond, ErrorKind k, const std::string& msg) {
  if (!cond) fail(k, msg);
}

} // namespace spslab
