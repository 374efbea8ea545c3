#include "sl2t/errors.hpp"

namespace sl2t {

const char* errc_name(errc code) {
  switch (code) {
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::empty_window: return "EmptyWindow";
    case errc::too_large: return "TooLarge";
    case errc::out_of_window: return "OutOfWindow";
    case errc::bad_axis: return "BadAxis";
    case errc::bad_index: return "BadIndex";
    case errc::not_admissible: return "NotAdmissible";
    case errc::dimension_too_large: return "DimensionTooLarge";
    case errc::wrong_signature: return "WrongSignature";
    case errc::window_not_symmetric: return "WindowNotSymmetric";
    case errc::non_integer_division: return "NonIntegerDivision";
    case errc::non_positive_entry: return "NonPositiveEntry";
    case errc::unreachable_cell: return "UnreachableCell";
    case errc::slices_not_constant: return "SlicesNotConstant";
    case errc::scan_inconclusive: return "ScanInconclusive";
    case errc::bad_format: return "BadFormat";
  }
  return "UnknownError";
}

void fail(errc code, const std::string& what) {
  throw tiling_error(code, std::string(errc_name(code)) + ": " + what);
}

}  // namespace sl2t
