#include "plumbcurve/errors.hpp"

namespace pc {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::malformed: return "malformed";
    case Errc::duplicate_id: return "duplicate_id";
    case Errc::unknown_endpoint: return "unknown_endpoint";
    case Errc::unknown_root: return "unknown_root";
    case Errc::cycle: return "cycle";
    case Errc::disconnected: return "disconnected";
    case Errc::bad_argument: return "bad_argument";
    case Errc::empty_word: return "empty_word";
    case Errc::not_symmetric: return "not_symmetric";
    case Errc::parity_undefined: return "parity_undefined";
    case Errc::not_unique: return "not_unique";
    case Errc::no_distinguished: return "no_distinguished";
    case Errc::merge_precondition: return "merge_precondition";
    case Errc::degenerate_alpha: return "degenerate_alpha";
    case Errc::zero_alpha: return "zero_alpha";
    case Errc::not_closed: return "not_closed";
    case Errc::interior_reversal: return "interior_reversal";
    case Errc::different_spinc: return "different_spinc";
    case Errc::wu_count: return "wu_count";
    case Errc::det_zero: return "det_zero";
    case Errc::not_type_alpha: return "not_type_alpha";
    case Errc::internal: return "internal";
  }
  return "unknown";
}

bool is_input_error(Errc c) {
  switch (c) {
    case Errc::malformed:
    case Errc::duplicate_id:
    case Errc::unknown_endpoint:
    case Errc::unknown_root:
    case Errc::cycle:
    case Errc::disconnected:
    case Errc::bad_argument:
      return true;
    default:
      return false;
  }
}

}  // namespace pc
