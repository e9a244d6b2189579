#include "clab/error.hpp"

namespace clab {

const char* errc_name(errc c) {
  switch (c) {
    case errc::negative_entry: return "negative_entry";
    case errc::row_sum_violation: return "row_sum_violation";
    case errc::non_square: return "non_square";
    case errc::non_unique_stationary: return "non_unique_stationary";
    case errc::zero_pushed_mass: return "zero_pushed_mass";
    case errc::zero_mass: return "zero_mass";
    case errc::disconnected_graph: return "disconnected_graph";
    case errc::non_finite: return "non_finite";
    case errc::bracket_failure: return "bracket_failure";
    case errc::absolute_continuity_violation: return "absolute_continuity_violation";
    case errc::not_stationary: return "not_stationary";
    case errc::not_doubly_stochastic: return "not_doubly_stochastic";
    case errc::degenerate_divergence: return "degenerate_divergence";
    case errc::lambda_out_of_range: return "lambda_out_of_range";
    case errc::delta_too_small: return "delta_too_small";
    case errc::not_reached: return "not_reached";
    case errc::unknown_figure: return "unknown_figure";
    case errc::parse_error: return "parse_error";
  }
  return "unknown";
}

}  // namespace clab
