#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <future>
#include <iomanip>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "dqeig/eig.hpp"
#include "dqeig/fixtures.hpp"
#include "dqeig/graphgen.hpp"
#include "dqeig/linalg.hpp"
#include "dqeig/oracle.hpp"
#include "io.hpp"

namespace dqeig::cli {

namespace {

std::uint64_t default_seed() {
  if (const char* env = std::getenv("DQEIG_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw InputError("DQEIG_SEED is not an unsigned integer");
    }
  }
  return 0;
}

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

void emit(std::ostream& out, const std::optional<std::string>& path, const std::string& text) {
  if (path) {
    write_atomic(*path, text);
  } else {
    out << text;
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// --- gen -------------------------------------------------------------------

struct GenOptions {
  std::size_t n = 0;
  std::uint64_t seed = 0;
  bool unbalanced = false;
  std::string eigs_file;
  std::size_t n21 = 1;
  std::string example;
  std::optional<std::string> out;
  std::optional<std::string> v0_out;
};

MatrixFile generate(const std::string& family, const GenOptions& o) {
  Rng rng(o.seed);
  MatrixFile m;
  json params = json::object();
  if (family == "cycle" || family == "wheel") {
    const GraphFixture g = family == "cycle" ? cycle_laplacian(o.n, rng, !o.unbalanced)
                                             : wheel_laplacian(o.n, rng, !o.unbalanced);
    m.matrix = g.laplacian;
    params["balanced"] = !o.unbalanced;
  } else if (family == "spectrum") {
    std::vector<DualComplex> eigs = spectrum_from_json(read_json(o.eigs_file));
    const std::size_t n = o.n == 0 ? eigs.size() : o.n;
    if (eigs.size() > n) throw InputError("gen spectrum: more eigenvalues than n");
    eigs.resize(n, eigs.back());
    m.matrix = prescribed_spectrum_matrix(eigs, rng).matrix;
    params["eigs_file"] = o.eigs_file;
  } else if (family == "jordan") {
    m.matrix = jordan_experiment_matrix(o.n, o.n21, rng);
    params["n21"] = o.n21;
  }
  m.metadata = {{"family", family}, {"seed", o.seed}, {"params", params}};
  return m;
}

void add_gen(CLI::App& app, GenOptions& o, std::ostream& out) {
  auto* gen = app.add_subcommand("gen", "Generate a matrix fixture");
  gen->require_subcommand(1);

  auto common = [&](CLI::App* sub, bool needs_n) {
    auto* n = sub->add_option("--n", o.n, "Matrix size");
    if (needs_n) n->required();
    sub->add_option("--seed", o.seed, "Random seed")->default_val(default_seed());
    sub->add_option("--out", o.out, "Output file (default: standard output)");
  };

  for (const char* family : {"cycle", "wheel"}) {
    auto* sub = gen->add_subcommand(family, std::string("Balanced ") + family + " graph Laplacian");
    common(sub, true);
    sub->add_flag("--unbalanced", o.unbalanced, "Draw independent arc weights");
    sub->callback([&, family] { emit(out, o.out, dump(matrix_to_json(generate(family, o)))); });
  }

  auto* spec = gen->add_subcommand("spectrum", "Diagonalizable matrix with prescribed eigenvalues");
  common(spec, false);
  spec->add_option("--eigs", o.eigs_file, "JSON array of [re_s, im_s, re_d, im_d]; padded with the last entry")
      ->required();
  spec->callback([&] { emit(out, o.out, dump(matrix_to_json(generate("spectrum", o)))); });

  auto* jordan = gen->add_subcommand("jordan", "Similarity transform of a Jordan-block matrix");
  common(jordan, true);
  jordan->add_option("--n21", o.n21, "Order of the subdominant Jordan block")->required();
  jordan->callback([&] { emit(out, o.out, dump(matrix_to_json(generate("jordan", o)))); });

  auto* example = gen->add_subcommand("example", "Small non-convergence fixture");
  example->add_option("name", o.example, "fail-iii, fail-iv or fail-v")
      ->required()
      ->check(CLI::IsMember({"fail-iii", "fail-iv", "fail-v"}));
  example->add_option("--out", o.out, "Output file (default: standard output)");
  example->add_option("--v0-out", o.v0_out, "Also write the fixture's starting vector");
  example->callback([&] {
    const DivergenceFixture f = divergence_fixture(o.example);
    MatrixFile m{f.matrix, {{"family", "example"}, {"params", {{"name", o.example}}}}};
    if (o.v0_out) write_atomic(*o.v0_out, dump(vector_to_json(f.v0)));
    emit(out, o.out, dump(matrix_to_json(m)));
  });
}

// --- run -------------------------------------------------------------------

struct RunOptions {
  std::string algorithm;
  std::string matrix;
  std::uint64_t seed = 0;
  std::optional<std::string> v0;
  int kmax = 1000;
  double tol = 1e-10;
  std::string trace;
  std::optional<std::string> result;
  int repeat = 1;
};

int status_code(Status s) {
  switch (s) {
    case Status::Converged:
      return kOk;
    case Status::MaxIter:
      return kMaxIter;
    case Status::Breakdown:
      return kBreakdown;
  }
  return kFailed;
}

std::string indexed_path(const std::string& path, int index, int count) {
  if (count == 1) return path;
  std::filesystem::path p(path);
  std::filesystem::path q = p.parent_path() / p.stem();
  q += "." + std::to_string(index);
  q += p.extension();
  return q.string();
}

struct Trial {
  json summary;
  Status status;
};

// Fixtures from `gen example` carry their own starting vector.
std::optional<std::string> example_name(const json& metadata) {
  if (!metadata.is_object() || metadata.value("family", "") != "example") return std::nullopt;
  const auto params = metadata.find("params");
  if (params == metadata.end() || !params->is_object() || !params->contains("name")) return std::nullopt;
  return (*params)["name"].get<std::string>();
}

Trial run_trial(const RunOptions& o, const MatrixFile& m, std::uint64_t seed, int index) {
  const DQMatrix& a = m.matrix;
  DQVector v0;
  std::string v0_desc;
  if (o.v0) {
    v0 = vector_from_json(read_json(*o.v0));
    if (v0.size() != a.rows()) throw InputError("--v0: length does not match the matrix");
    v0_desc = "file:" + *o.v0;
  } else if (const auto name = example_name(m.metadata)) {
    v0 = divergence_fixture(*name).v0;
    v0_desc = "fixture:" + *name;
  } else {
    Rng rng(seed);
    v0 = random_initial_vector(a.rows(), rng);
    v0_desc = "gaussian standard part, zero dual part, normalized (seed " + std::to_string(seed) + ")";
  }

  SolverConfig cfg;
  cfg.k_max = o.kmax;
  cfg.tol = o.tol;
  const EigResult r = o.algorithm == "pm" ? power_method(a, v0, cfg) : dcam_power_method(a, v0, cfg);

  const TraceHeader header{o.algorithm, a.rows(), seed, o.tol, o.kmax, std::string(to_string(r.status)),
                           r.iterations, r.wall_time, v0_desc};
  const std::string trace_path = indexed_path(o.trace, index, o.repeat);
  write_atomic(trace_path, trace_to_csv(make_trace(header, r)));

  json class_rep = nullptr;
  try {
    const DualComplex c = class_representative(r.eigenvalue);
    class_rep = {{"standard", complex_to_json(c.s)}, {"dual", complex_to_json(c.d)}};
  } catch (const ClassRepUndefined&) {
  }
  json rate = nullptr;
  try {
    rate = estimate_rate(r.trace, r.status == Status::Converged);
  } catch (const UndefinedRateError&) {
  }

  json summary = {
      {"format_version", kFormatVersion},
      {"algorithm", o.algorithm},
      {"seed", seed},
      {"status", to_string(r.status)},
      {"iterations", r.iterations},
      {"residual", r.trace.empty() ? json(nullptr) : json(r.trace.back())},
      {"eigenvalue", dual_quaternion_to_json(r.eigenvalue)},
      {"class_rep", class_rep},
      {"rate", rate},
      {"wall_time", r.wall_time},
      {"trace", trace_path},
      {"eigenvector", vector_to_json(r.eigenvector)},
  };
  if (o.result) write_atomic(indexed_path(*o.result, index, o.repeat), dump(summary));
  return {std::move(summary), r.status};
}

int run_solver(const RunOptions& o, std::ostream& out) {
  if (o.repeat < 1) throw InputError("--repeat must be at least 1");
  const MatrixFile m = matrix_from_json(read_json(o.matrix));

  std::vector<std::future<Trial>> jobs;
  for (int i = 0; i < o.repeat; ++i) {
    jobs.push_back(std::async(std::launch::async, run_trial, std::cref(o), std::cref(m),
                              o.seed + static_cast<std::uint64_t>(i), i));
  }
  json all = json::array();
  int code = kOk;
  for (auto& job : jobs) {
    Trial t = job.get();
    code = std::max(code, status_code(t.status));
    all.push_back(std::move(t.summary));
  }
  out << dump(o.repeat == 1 ? all[0] : all);
  return code;
}

// --- verify / spectrum / plotdata ------------------------------------------

int verify(const std::string& matrix, const std::string& result, double tol, std::ostream& out) {
  const MatrixFile m = matrix_from_json(read_json(matrix));
  const json r = read_json(result);
  if (!r.is_object() || !r.contains("eigenvalue") || !r.contains("eigenvector")) {
    throw InputError("result file: needs 'eigenvalue' and 'eigenvector'");
  }
  const DualQuaternion lambda = dual_quaternion_from_json(r["eigenvalue"]);
  const DQVector v = vector_from_json(r["eigenvector"]);
  if (v.size() != m.matrix.rows()) throw InputError("result eigenvector length does not match the matrix");
  const EigenpairVerdict verdict = verify_eigenpair(m.matrix, v, lambda, tol);
  out << dump({{"ok", verdict.ok},
               {"tol", tol},
               {"relative_residual", verdict.relative_residual},
               {"standard_residual", verdict.standard_residual},
               {"dual_residual", verdict.dual_residual}});
  return verdict.ok ? kOk : kFailed;
}

json report_to_json(const SpectrumReport& rep) {
  json eigs = json::array();
  for (Complex z : rep.standard_eigs) eigs.push_back(complex_to_json(z));
  return {{"standard_eigs", eigs},
          {"dominant", complex_to_json(rep.dominant)},
          {"gap_ratio", rep.gap_ratio},
          {"dominant_simple", rep.dominant_simple},
          {"alg_mult", rep.alg_mult},
          {"geo_mult", rep.geo_mult},
          {"assumption1", rep.assumption1},
          {"assumption2i", rep.assumption2i},
          {"assumption2ii", rep.assumption2ii},
          {"dual_conditions_checked", rep.dual_conditions_checked}};
}

std::string plot_lines(const TraceFile& t) {
  std::ostringstream os;
  os << std::setprecision(17);
  for (const TraceRow& r : t.rows) {
    os << r.iter << ' ';
    if (r.res > 0.0) {
      os << std::log10(r.res);
    } else {
      os << "-inf";
    }
    os << '\n';
  }
  return os.str();
}

std::string error_json(const char* type, const std::string& message) {
  return json{{"error", {{"type", type}, {"message", message}}}}.dump() + "\n";
}

int dispatch(const std::vector<std::string>& args, std::ostream& out) {
  CLI::App app{"Power iteration for dual quaternion matrices", "dqeig"};
  app.require_subcommand(1);
  int code = kOk;

  GenOptions gen_opts;
  add_gen(app, gen_opts, out);

  RunOptions run_opts;
  auto* run_cmd = app.add_subcommand("run", "Run PM or DCAM-PM on a matrix file");
  run_cmd->add_option("algorithm", run_opts.algorithm, "pm or dcam-pm")
      ->required()
      ->check(CLI::IsMember({"pm", "dcam-pm"}));
  run_cmd->add_option("--matrix", run_opts.matrix, "Matrix file")->required();
  run_cmd->add_option("--seed", run_opts.seed, "Seed for the default starting vector");
  run_cmd->add_option("--v0", run_opts.v0, "Starting vector file");
  run_cmd->add_option("--kmax", run_opts.kmax, "Iteration cap")->default_val(1000);
  run_cmd->add_option("--tol", run_opts.tol, "Residual tolerance")->default_val(1e-10);
  run_cmd->add_option("--out", run_opts.trace, "Trace CSV")->required();
  run_cmd->add_option("--result", run_opts.result, "Also write the summary JSON here");
  run_cmd->add_option("--repeat", run_opts.repeat, "Independent trials with seeds S, S+1, ...")->default_val(1);
  run_cmd->callback([&] { code = run_solver(run_opts, out); });

  std::string verify_matrix, verify_result;
  double verify_tol = 1e-8;
  auto* verify_cmd = app.add_subcommand("verify", "Check an eigenpair from a result file");
  verify_cmd->add_option("--matrix", verify_matrix, "Matrix file")->required();
  verify_cmd->add_option("--result", verify_result, "Result JSON from `run`")->required();
  verify_cmd->add_option("--tol", verify_tol, "Relative residual tolerance")->default_val(1e-8);
  verify_cmd->callback([&] { code = verify(verify_matrix, verify_result, verify_tol, out); });

  std::string spectrum_matrix;
  auto* spectrum_cmd = app.add_subcommand("spectrum", "Standard spectrum and assumption verdicts");
  spectrum_cmd->add_option("--matrix", spectrum_matrix, "Matrix file")->required();
  spectrum_cmd->callback([&] {
    const MatrixFile m = matrix_from_json(read_json(spectrum_matrix));
    out << dump(report_to_json(assumption_report(m.matrix)));
  });

  std::string plot_trace;
  std::optional<std::string> plot_out;
  auto* plot_cmd = app.add_subcommand("plotdata", "Two-column iteration / log10 residual data");
  plot_cmd->add_option("--trace", plot_trace, "Trace CSV")->required();
  plot_cmd->add_option("--out", plot_out, "Output file (default: standard output)");
  plot_cmd->callback([&] { emit(out, plot_out, plot_lines(trace_from_csv(read_text(plot_trace)))); });

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());

  run_opts.seed = default_seed();
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
  }
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return dispatch(args, out);
  } catch (const CLI::ParseError& e) {
    err << error_json("usage", e.what());
    return kInputError;
  } catch (const InputError& e) {
    err << error_json("input", e.what());
    return kInputError;
  } catch (const DomainError& e) {
    err << error_json("domain", e.what());
    return kInputError;
  } catch (const DimensionError& e) {
    err << error_json("dimension", e.what());
    return kInputError;
  } catch (const Error& e) {
    err << error_json("numerical", e.what());
    return kFailed;
  } catch (const std::exception& e) {
    err << error_json("internal", e.what());
    return kFailed;
  }
}

}  // namespace dqeig::cli
