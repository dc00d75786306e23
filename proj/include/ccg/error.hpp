#pragma once

#include <stdexcept>
#include <string>

namespace ccg {

enum class Errc {
  out_of_range,
  self_loop,
  bad_order,
  unknown_name,
  malformed_input,
  empty_set,
  not_cds,
  overlap,
  not_a_partition,
  invalid_partition,
  too_large,
  precondition_violated,
};

const char* to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace ccg
