#include "clab/kernel_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

#include <json.hpp>

#include "clab/error.hpp"

namespace clab {

namespace {

using nlohmann::json;

json parse_text(const std::string& text) {
  json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) fail(errc::parse_error, "malformed JSON");
  return j;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(errc::parse_error, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Vec read_vector(const json& j, const std::string& what) {
  if (!j.is_array() || j.empty()) fail(errc::parse_error, what + " must be a nonempty array");
  Vec v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number()) fail(errc::parse_error, what + " entries must be numbers");
    v[static_cast<Eigen::Index>(i)] = j[i].get<double>();
  }
  return v;
}

Mat read_matrix(const json& j, const std::string& what) {
  if (!j.is_array() || j.empty()) fail(errc::parse_error, what + " must be a nonempty array");
  const std::size_t rows = j.size();
  Mat m;
  for (std::size_t x = 0; x < rows; ++x) {
    const Vec row = read_vector(j[x], what + " row");
    if (x == 0) {
      m.resize(static_cast<Eigen::Index>(rows), row.size());
    } else if (row.size() != m.cols()) {
      fail(errc::parse_error, what + " rows have uneven lengths");
    }
    m.row(static_cast<Eigen::Index>(x)) = row.transpose();
  }
  return m;
}

long read_integer(const json& j, const std::string& what, long lo) {
  if (!j.is_number_integer()) fail(errc::parse_error, what + " must be an integer");
  const long v = j.get<long>();
  if (v < lo) fail(errc::parse_error, what + " is below " + std::to_string(lo));
  return v;
}

double read_number(const json& j, const std::string& what) {
  if (!j.is_number()) fail(errc::parse_error, what + " must be a number");
  return j.get<double>();
}

}  // namespace

std::string format_double(double v) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", v);
  return buffer;
}

KernelFile parse_kernel_json(const std::string& text) {
  const json j = parse_text(text);
  if (!j.is_object() || !j.contains("matrix"))
    fail(errc::parse_error, "kernel file needs a \"matrix\" key");
  KernelFile out{MarkovKernel(read_matrix(j["matrix"], "matrix")), std::nullopt};
  if (j.contains("mu")) out.mu = ProbVector(read_vector(j["mu"], "mu"));
  return out;
}

KernelFile load_kernel_file(const std::string& path) { return parse_kernel_json(slurp(path)); }

std::string kernel_to_json(const MarkovKernel& k) {
  std::string out = "{\"matrix\": [";
  for (int x = 0; x < k.size(); ++x) {
    out += x == 0 ? "[" : ", [";
    for (int y = 0; y < k.size(); ++y) {
      if (y) out += ", ";
      out += format_double(k(x, y));
    }
    out += "]";
  }
  out += "]}";
  return out;
}

ConcentrationScenario parse_scenario_json(const std::string& text) {
  const json j = parse_text(text);
  if (!j.is_object()) fail(errc::parse_error, "scenario file must be a JSON object");
  if (j.contains("kernel") == j.contains("kernels"))
    fail(errc::parse_error, "scenario needs exactly one of \"kernel\" or \"kernels\"");

  std::vector<MarkovKernel> kernels;
  if (j.contains("kernel")) {
    kernels.emplace_back(read_matrix(j["kernel"], "kernel"));
  } else {
    const json& list = j["kernels"];
    if (!list.is_array() || list.empty())
      fail(errc::parse_error, "\"kernels\" must be a nonempty array");
    for (std::size_t i = 0; i < list.size(); ++i)
      kernels.emplace_back(read_matrix(list[i], "kernels entry"));
  }

  if (!j.contains("start")) fail(errc::parse_error, "scenario needs a \"start\" law");
  if (!j.contains("t")) fail(errc::parse_error, "scenario needs a horizon \"t\"");

  ConcentrationScenario scn(std::move(kernels), ProbVector(read_vector(j["start"], "start")));
  scn.t = static_cast<int>(read_integer(j["t"], "t", 1));
  if (j.contains("t0")) scn.t0 = static_cast<int>(read_integer(j["t0"], "t0", 0));
  if (j.contains("eta")) scn.eta = read_number(j["eta"], "eta");
  if (j.contains("p")) scn.p = read_number(j["p"], "p");
  if (j.contains("trials")) scn.trials = read_integer(j["trials"], "trials", 1);
  if (j.contains("seed")) {
    if (!j["seed"].is_number_integer()) fail(errc::parse_error, "seed must be an integer");
    scn.seed = j["seed"].get<std::uint64_t>();
  }
  if (j.contains("observable")) {
    const Vec g = read_vector(j["observable"], "observable");
    scn.observable.assign(g.data(), g.data() + g.size());
  }

  if (scn.kernels.size() != 1 && static_cast<int>(scn.kernels.size()) != scn.t - 1)
    fail(errc::parse_error, "need one kernel or t-1 kernels");
  for (const MarkovKernel& k : scn.kernels)
    if (k.size() != scn.start.size()) fail(errc::parse_error, "kernel/start size mismatch");
  return scn;
}

ConcentrationScenario load_scenario_file(const std::string& path) {
  return parse_scenario_json(slurp(path));
}

}  // namespace clab
