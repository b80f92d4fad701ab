#pragma once

#include <stdexcept>
#include <string>

namespace doomsim {

/// Malformed DIMACS input or bad configuration. Carries a line number when known.
class ParseError : public std::runtime_error {
public:
  ParseError(std::string message, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message
                                    : message),
        line_(line) {}
  int line() const { return line_; }

private:
  int line_;
};

/// Post-selection failed: the alive branch has zero mass, i.e. the instance
/// is unsatisfiable and every branch of the wavefunction is observer-free.
class AllObserversDead : public std::runtime_error {
public:
  AllObserversDead() : std::runtime_error("all branches observer-free: instance unsatisfiable") {}
};

} // namespace doomsim
