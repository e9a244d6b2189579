#pragma once

#include <optional>
#include <string>

#include "clab/concentration.hpp"
#include "clab/markov.hpp"

namespace clab {

// Kernel files are JSON: {"matrix": [[...], ...], "mu": [...]} with "mu"
// optional (defaults to the stationary distribution at load sites that need
// a measure). Parse failures throw errc::parse_error; invalid kernels
// propagate their validation errors.
struct KernelFile {
  MarkovKernel kernel;
  std::optional<ProbVector> mu;
};

KernelFile load_kernel_file(const std::string& path);
KernelFile parse_kernel_json(const std::string& text);
std::string kernel_to_json(const MarkovKernel& k);  // 17 significant digits

// Scenario files: {"kernel": [[...]] | "kernels": [[[...]], ...],
//   "start": [...], "t": N} plus optional "t0", "eta", "p", "trials",
//   "seed" and "observable" (struct defaults apply when a key is absent).
ConcentrationScenario load_scenario_file(const std::string& path);
ConcentrationScenario parse_scenario_json(const std::string& text);

// doubles rendered with 17 significant digits, '.' decimal separator
std::string format_double(double v);

}  // namespace clab
