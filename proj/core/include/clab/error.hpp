#pragma once

#include <stdexcept>
#include <string>

namespace clab {

// Failure kinds surfaced by the library. Tests and the CLI dispatch on the
// code rather than the message text.
enum class errc {
  negative_entry,
  row_sum_violation,
  non_square,
  non_unique_stationary,
  zero_pushed_mass,
  zero_mass,
  disconnected_graph,
  non_finite,
  bracket_failure,
  absolute_continuity_violation,
  not_stationary,
  not_doubly_stochastic,
  degenerate_divergence,
  lambda_out_of_range,
  delta_too_small,
  not_reached,
  unknown_figure,
  parse_error,
};

const char* errc_name(errc c);

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

}  // namespace clab
