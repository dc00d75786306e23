#include "ccg/error.hpp"

namespace ccg {

const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::out_of_range: return "OutOfRange";
    case Errc::self_loop: return "SelfLoop";
    case Errc::bad_order: return "BadOrder";
    case Errc::unknown_name: return "UnknownName";
    case Errc::malformed_input: return "MalformedInput";
    case Errc::empty_set: return "EmptySet";
    case Errc::not_cds: return "NotCds";
    case Errc::overlap: return "Overlap";
    case Errc::not_a_partition: return "NotAPartition";
    case Errc::invalid_partition: return "InvalidPartition";
    case Errc::too_large: return "TooLarge";
    case Errc::precondition_violated: return "PreconditionViolated";
  }
  return "Unknown";
}

}  // namespace ccg
