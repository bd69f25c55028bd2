#pragma once
#include <stdexcept>
#include <string>

namespace pc {

enum class Errc {
  // input errors
  malformed,
  duplicate_id,
  unknown_endpoint,
  unknown_root,
  cycle,
  disconnected,
  bad_argument,
  // domain errors
  empty_word,
  not_symmetric,
  parity_undefined,
  not_unique,
  no_distinguished,
  merge_precondition,
  degenerate_alpha,
  zero_alpha,
  not_closed,
  interior_reversal,
  different_spinc,
  wu_count,
  det_zero,
  not_type_alpha,
  internal,
};

const char* errc_name(Errc c);
bool is_input_error(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc c, const std::string& what) : std::runtime_error(what), code_(c) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace pc
