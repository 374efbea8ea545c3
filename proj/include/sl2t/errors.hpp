#pragma once

#include <stdexcept>
#include <string>

namespace sl2t {

// Failure taxonomy shared by every module. Violations found by the verifiers
// and descent certificates are data, not errors; these codes cover contract
// breaches and certified impossibilities only.
enum class errc {
  dimension_mismatch,
  empty_window,
  too_large,
  out_of_window,
  bad_axis,
  bad_index,
  not_admissible,
  dimension_too_large,
  wrong_signature,
  window_not_symmetric,
  non_integer_division,
  non_positive_entry,
  unreachable_cell,
  slices_not_constant,
  scan_inconclusive,
  bad_format,
};

const char* errc_name(errc code);

class tiling_error : public std::runtime_error {
public:
  tiling_error(errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  errc code() const noexcept { return code_; }

private:
  errc code_;
};

[[noreturn]] void fail(errc code, const std::string& what);

}  // namespace sl2t
