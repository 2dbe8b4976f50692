#include "io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <system_error>

namespace dqeig::cli {

namespace {

double finite_number(const json& j, const char* what) {
  if (!j.is_number()) throw InputError(std::string(what) + ": expected a number");
  const double x = j.get<double>();
  if (!std::isfinite(x)) throw InputError(std::string(what) + ": non-finite value");
  return x;
}

void require_version(const json& j, const char* what) {
  if (!j.is_object()) throw InputError(std::string(what) + ": expected a JSON object");
  const auto it = j.find("format_version");
  if (it == j.end() || !it->is_number_integer() || it->get<int>() != kFormatVersion) {
    throw InputError(std::string(what) + ": unsupported or missing format_version");
  }
}

std::size_t read_count(const json& j, const char* key, const char* what) {
  const auto it = j.find(key);
  if (it == j.end() || !it->is_number_unsigned()) {
    throw InputError(std::string(what) + ": missing or invalid '" + key + "'");
  }
  return it->get<std::size_t>();
}

const json& field(const json& j, const char* key, const char* what) {
  const auto it = j.find(key);
  if (it == j.end()) throw InputError(std::string(what) + ": missing '" + key + "'");
  return *it;
}

QMatrix quaternion_grid(const json& rows, std::size_t n, const char* what) {
  if (!rows.is_array() || rows.size() != n) throw InputError(std::string(what) + ": expected " + std::to_string(n) + " rows");
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!rows[i].is_array() || rows[i].size() != n) {
      throw InputError(std::string(what) + ": row " + std::to_string(i) + " has wrong length");
    }
    for (std::size_t k = 0; k < n; ++k) m(i, k) = quaternion_from_json(rows[i][k]);
  }
  return m;
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

json quaternion_to_json(const Quaternion& q) { return json::array({q.w, q.x, q.y, q.z}); }

Quaternion quaternion_from_json(const json& j) {
  if (!j.is_array() || j.size() != 4) throw InputError("quaternion: expected [w, x, y, z]");
  return {finite_number(j[0], "quaternion"), finite_number(j[1], "quaternion"), finite_number(j[2], "quaternion"),
          finite_number(j[3], "quaternion")};
}

json dual_quaternion_to_json(const DualQuaternion& q) {
  return {{"standard", quaternion_to_json(q.s)}, {"dual", quaternion_to_json(q.d)}};
}

DualQuaternion dual_quaternion_from_json(const json& j) {
  if (!j.is_object()) throw InputError("dual quaternion: expected {standard, dual}");
  return {quaternion_from_json(field(j, "standard", "dual quaternion")),
          quaternion_from_json(field(j, "dual", "dual quaternion"))};
}

json matrix_to_json(const MatrixFile& m) {
  const std::size_t n = m.matrix.rows();
  json standard = json::array(), dual = json::array();
  for (std::size_t i = 0; i < n; ++i) {
    json rs = json::array(), rd = json::array();
    for (std::size_t k = 0; k < n; ++k) {
      rs.push_back(quaternion_to_json(m.matrix(i, k).s));
      rd.push_back(quaternion_to_json(m.matrix(i, k).d));
    }
    standard.push_back(std::move(rs));
    dual.push_back(std::move(rd));
  }
  json out = {{"format_version", kFormatVersion}, {"n", n}, {"standard", std::move(standard)}, {"dual", std::move(dual)}};
  if (!m.metadata.empty()) out["metadata"] = m.metadata;
  return out;
}

MatrixFile matrix_from_json(const json& j) {
  require_version(j, "matrix file");
  const std::size_t n = read_count(j, "n", "matrix file");
  if (n == 0) throw InputError("matrix file: n must be positive");
  const QMatrix s = quaternion_grid(field(j, "standard", "matrix file"), n, "matrix file standard part");
  const QMatrix d = quaternion_grid(field(j, "dual", "matrix file"), n, "matrix file dual part");
  MatrixFile m;
  m.matrix = DQMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) m.matrix(i, k) = {s(i, k), d(i, k)};
  if (const auto it = j.find("metadata"); it != j.end()) m.metadata = *it;
  return m;
}

json vector_to_json(const DQVector& v) {
  json standard = json::array(), dual = json::array();
  for (const auto& e : v) {
    standard.push_back(quaternion_to_json(e.s));
    dual.push_back(quaternion_to_json(e.d));
  }
  return {{"format_version", kFormatVersion}, {"n", v.size()}, {"standard", std::move(standard)}, {"dual", std::move(dual)}};
}

DQVector vector_from_json(const json& j) {
  require_version(j, "vector file");
  const std::size_t n = read_count(j, "n", "vector file");
  const json& s = field(j, "standard", "vector file");
  const json& d = field(j, "dual", "vector file");
  if (!s.is_array() || !d.is_array() || s.size() != n || d.size() != n) {
    throw InputError("vector file: standard and dual must have n entries");
  }
  DQVector v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = {quaternion_from_json(s[i]), quaternion_from_json(d[i])};
  return v;
}

std::vector<DualComplex> spectrum_from_json(const json& j) {
  const json& arr = j.is_object() ? field(j, "eigenvalues", "spectrum file") : j;
  if (!arr.is_array() || arr.empty()) throw InputError("spectrum file: expected a non-empty array");
  std::vector<DualComplex> out;
  for (const json& e : arr) {
    if (!e.is_array() || e.size() != 4) throw InputError("spectrum file: entries are [re_s, im_s, re_d, im_d]");
    out.push_back({Complex(finite_number(e[0], "spectrum"), finite_number(e[1], "spectrum")),
                   Complex(finite_number(e[2], "spectrum"), finite_number(e[3], "spectrum"))});
  }
  return out;
}

TraceFile make_trace(const TraceHeader& header, const EigResult& r) {
  TraceFile t{header, {}};
  t.rows.reserve(r.trace.size());
  for (std::size_t k = 0; k < r.trace.size(); ++k) {
    t.rows.push_back({static_cast<int>(k + 1), r.trace[k], r.eigenvalue_trace[k]});
  }
  return t;
}

std::string trace_to_csv(const TraceFile& t) {
  std::ostringstream os;
  const TraceHeader& h = t.header;
  os << "# algorithm=" << h.algorithm << '\n'
     << "# n=" << h.n << '\n'
     << "# seed=" << h.seed << '\n'
     << "# delta=" << fmt(h.delta) << '\n'
     << "# kmax=" << h.kmax << '\n'
     << "# status=" << h.status << '\n'
     << "# iterations=" << h.iterations << '\n'
     << "# wall_time=" << fmt(h.wall_time) << '\n'
     << "# v0=" << h.v0 << '\n';
  os << "iter,res,ls_w,ls_x,ls_y,ls_z,ld_w,ld_x,ld_y,ld_z\n";
  for (const TraceRow& r : t.rows) {
    const Quaternion& s = r.lambda.s;
    const Quaternion& d = r.lambda.d;
    os << r.iter << ',' << fmt(r.res);
    for (double x : {s.w, s.x, s.y, s.z, d.w, d.x, d.y, d.z}) os << ',' << fmt(x);
    os << '\n';
  }
  return os.str();
}

TraceFile trace_from_csv(const std::string& text) {
  TraceFile t;
  std::istringstream is(text);
  std::string line;
  bool saw_columns = false;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (line.rfind("# ", 0) == 0) {
      const auto eq = line.find('=');
      if (eq == std::string::npos) continue;
      const std::string key = line.substr(2, eq - 2);
      const std::string val = line.substr(eq + 1);
      try {
        TraceHeader& h = t.header;
        if (key == "algorithm") h.algorithm = val;
        else if (key == "n") h.n = std::stoul(val);
        else if (key == "seed") h.seed = std::stoull(val);
        else if (key == "delta") h.delta = std::stod(val);
        else if (key == "kmax") h.kmax = std::stoi(val);
        else if (key == "status") h.status = val;
        else if (key == "iterations") h.iterations = std::stoi(val);
        else if (key == "wall_time") h.wall_time = std::stod(val);
        else if (key == "v0") h.v0 = val;
      } catch (const std::exception&) {
        throw InputError("trace file: bad header value for '" + key + "'");
      }
      continue;
    }
    if (!saw_columns) {
      saw_columns = true;
      continue;
    }
    std::vector<double> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) {
      try {
        cells.push_back(std::stod(cell));
      } catch (const std::exception&) {
        throw InputError("trace file: non-numeric cell '" + cell + "'");
      }
    }
    if (cells.size() != 10) throw InputError("trace file: expected 10 columns, got " + std::to_string(cells.size()));
    TraceRow r;
    r.iter = static_cast<int>(cells[0]);
    r.res = cells[1];
    r.lambda = {{cells[2], cells[3], cells[4], cells[5]}, {cells[6], cells[7], cells[8], cells[9]}};
    t.rows.push_back(r);
  }
  if (!saw_columns) throw InputError("trace file: missing column header");
  return t;
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json read_json(const std::filesystem::path& path) {
  try {
    return json::parse(read_text(path));
  } catch (const json::parse_error& e) {
    throw InputError("'" + path.string() + "' is not valid JSON: " + e.what());
  }
}

void write_atomic(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError("cannot write '" + tmp.string() + "'");
    out << content;
    out.flush();
    if (!out) throw InputError("write to '" + tmp.string() + "' failed");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw InputError("cannot rename onto '" + path.string() + "': " + ec.message());
  }
}

}  // namespace dqeig::cli
