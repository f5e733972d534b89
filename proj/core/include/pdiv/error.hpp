#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pdiv {

enum class Errc {
  unknown_name,
  invalid_size,
  size_overflow,
  zero_size,
  attach_not_stable,
  attach_empty,
  out_of_range,
  malformed_line,
  unsupported_size,
  cap_exceeded,
  weight_mismatch,
  precondition_violated,
  empty_graph,
  budget_exceeded,
  not_a_hole,
  shape_mismatch,
  anchor_not_in_m,
  unresolvable_selector,
  io_error,
  invalid_argument,
};

std::string_view to_string(Errc code);

// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace pdiv
