#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "dqeig/dense.hpp"
#include "dqeig/eig.hpp"
#include "dqeig/errors.hpp"

namespace dqeig::cli {

using nlohmann::json;

inline constexpr int kFormatVersion = 1;

/// Malformed or missing input; maps to exit code 4.
struct InputError : Error {
  using Error::Error;
};

struct MatrixFile {
  DQMatrix matrix;
  json metadata = json::object();
};

json quaternion_to_json(const Quaternion& q);
Quaternion quaternion_from_json(const json& j);

json matrix_to_json(const MatrixFile& m);
MatrixFile matrix_from_json(const json& j);

json vector_to_json(const DQVector& v);
DQVector vector_from_json(const json& j);

json dual_quaternion_to_json(const DualQuaternion& q);
DualQuaternion dual_quaternion_from_json(const json& j);

/// Eigenvalues for `gen spectrum`: an array of [re_s, im_s, re_d, im_d].
std::vector<DualComplex> spectrum_from_json(const json& j);

struct TraceHeader {
  std::string algorithm;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  double delta = 0.0;
  int kmax = 0;
  std::string status;
  int iterations = 0;
  double wall_time = 0.0;
  std::string v0;
};

struct TraceRow {
  int iter = 0;
  double res = 0.0;
  DualQuaternion lambda;
};

struct TraceFile {
  TraceHeader header;
  std::vector<TraceRow> rows;
};

TraceFile make_trace(const TraceHeader& header, const EigResult& r);
std::string trace_to_csv(const TraceFile& t);
TraceFile trace_from_csv(const std::string& text);

/// Reads a whole file; throws InputError when it cannot be opened.
std::string read_text(const std::filesystem::path& path);
json read_json(const std::filesystem::path& path);

/// Writes to a sibling temporary file and renames it over `path`.
void write_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace dqeig::cli
