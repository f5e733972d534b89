#include "pdiv/error.hpp"

namespace pdiv {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::unknown_name: return "unknown-name";
    case Errc::invalid_size: return "invalid-size";
    case Errc::size_overflow: return "size-overflow";
    case Errc::zero_size: return "zero-size";
    case Errc::attach_not_stable: return "attach-not-stable";
    case Errc::attach_empty: return "attach-empty";
    case Errc::out_of_range: return "out-of-range";
    case Errc::malformed_line: return "malformed-line";
    case Errc::unsupported_size: return "unsupported-size";
    case Errc::cap_exceeded: return "cap-exceeded";
    case Errc::weight_mismatch: return "weight-length-mismatch";
    case Errc::precondition_violated: return "precondition-violated";
    case Errc::empty_graph: return "empty-graph";
    case Errc::budget_exceeded: return "budget-exceeded";
    case Errc::not_a_hole: return "not-a-hole";
    case Errc::shape_mismatch: return "shape-mismatch";
    case Errc::anchor_not_in_m: return "anchor-not-in-M";
    case Errc::unresolvable_selector: return "unresolvable-selector";
    case Errc::io_error: return "io-error";
    case Errc::invalid_argument: return "invalid-argument";
  }
  return "unknown";
}

}  // namespace pdiv
