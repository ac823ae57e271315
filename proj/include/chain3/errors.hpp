#pragma once

#include <stdexcept>
#include <string>

namespace chain3 {

// Failure kinds raised by library operations. The CLI maps these onto exit codes.
enum class errc {
  ragged_rows,
  illegal_character,
  empty_input,
  index_out_of_bounds,
  dimension_mismatch,
  label_mismatch,
  size_mismatch,
  not_chain,
  not_dominated,
  invariant_violation,
  not_free,
  cell_not_zero,
  budget_exceeded,
};

const char* errc_name(errc code);

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace chain3
