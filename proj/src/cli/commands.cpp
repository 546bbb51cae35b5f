#include "cli/commands.hpp"

#include "cli/errors.hpp"
#include "cli/operator_file.hpp"
#include "cli/registry.hpp"
#include "cli/run_report.hpp"
#include "cli/suites.hpp"
#include "qdiv/divergence.hpp"
#include "qdiv/linalg.hpp"
#include "qdiv/preserver.hpp"
#include "qdiv/sampling.hpp"
#include "qdiv/wigner.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace qdiv::cli {

namespace {

namespace fs = std::filesystem;

std::string format(const char* fmt, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, x);
  return buf;
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("QDIV_SEED"); env && *env) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (*end != '\0' || env[0] == '-') throw UsageError("QDIV_SEED must be a non-negative integer");
    return v;
  }
  return 0;
}

std::string command_echo(int argc, char** argv) {
  std::string out;
  for (int i = 1; i < argc; ++i) {
    if (i > 1) out += ' ';
    out += argv[i];
  }
  return out;
}

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void emit_report(const RunReport& report, const std::string& path, const Stopwatch& clock) {
  if (!path.empty()) write_text_file(path, report.serialize(clock.seconds()));
}

// --- div --------------------------------------------------------------------

struct DivArgs {
  std::string tag;
  std::string file_a;
  std::string file_b;
  std::optional<double> alpha;
  std::string f;
  std::string g;
  std::string report;
};

int cmd_div(const DivArgs& a, const std::string& echo, std::ostream& out) {
  Stopwatch clock;
  const auto tag = parse_divergence_tag(a.tag);
  if (!tag) {
    throw UsageError("unknown divergence '" + a.tag +
                     "' (expected umegaki, renyi, sandwiched, sandwiched-core, fdiv or dfg)");
  }
  DivergenceSpec spec;
  spec.tag = *tag;
  const bool needs_alpha = *tag == DivergenceTag::Renyi || *tag == DivergenceTag::Sandwiched ||
                           *tag == DivergenceTag::SandwichedCore;
  if (needs_alpha) {
    if (!a.alpha) throw UsageError(a.tag + " needs --alpha");
    spec.alpha = *a.alpha;
    try {
      require_renyi_alpha(spec.alpha);
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
  }
  if (*tag == DivergenceTag::FDiv || *tag == DivergenceTag::DFG) {
    if (a.f.empty()) throw UsageError(a.tag + " needs --f");
    spec.f = lookup_function(a.f);
  }
  if (*tag == DivergenceTag::DFG) {
    if (a.g.empty()) throw UsageError("dfg needs --g");
    spec.g = lookup_function(a.g);
  }

  const OperatorFile fa = load_operator(a.file_a);
  const OperatorFile fb = load_operator(a.file_b);
  if (fa.matrix.rows() != fb.matrix.rows()) {
    throw InputError("operators have different dimensions (" + std::to_string(fa.matrix.rows()) +
                     " vs " + std::to_string(fb.matrix.rows()) + ")");
  }
  const bool density_only = *tag == DivergenceTag::Umegaki || *tag == DivergenceTag::Renyi;
  const char* role = density_only ? "density" : "positive";
  validate_role(fa.matrix, role, a.file_a);
  validate_role(fb.matrix, role, a.file_b);

  ExtendedReal value;
  if (density_only) {
    value = spec.evaluate(DensityOperator(fa.matrix), DensityOperator(fb.matrix));
  } else {
    const PositiveOperator A(fa.matrix), B(fb.matrix);
    switch (*tag) {
      case DivergenceTag::Sandwiched: value = sandwiched_renyi(A, B, spec.alpha); break;
      case DivergenceTag::SandwichedCore: value = sandwiched_core(A, B, spec.alpha); break;
      case DivergenceTag::FDiv: value = f_divergence(A, B, *spec.f); break;
      default: value = d_fg(A, B, *spec.f, *spec.g); break;
    }
  }
  out << value.to_fixed(12) << "\n";

  RunReport report(echo);
  report.parameters()["divergence"] = spec.describe();
  report.parameters()["A"] = a.file_a;
  report.parameters()["B"] = a.file_b;
  report.results()["value"] = json_value(value);
  emit_report(report, a.report, clock);
  return kExitOk;
}

// --- check ------------------------------------------------------------------

struct CheckArgs {
  std::string suite;
  SuiteOptions options;
  std::optional<std::uint64_t> seed;
  std::string report;
};

int cmd_check(CheckArgs a, const std::string& echo, std::ostream& out) {
  Stopwatch clock;
  if (!is_suite(a.suite)) {
    throw UsageError("unknown suite '" + a.suite +
                     "' (expected invariance, lemmas, prop1, prop2-limits, thm4 or wigner)");
  }
  a.options.seed = resolve_seed(a.seed);
  RunReport report(echo);
  auto& p = report.parameters();
  p["suite"] = a.suite;
  p["dim"] = a.options.dim;
  p["samples"] = a.options.samples;
  p["seed"] = a.options.seed;
  p["tol"] = a.options.tol;
  p["alpha"] = a.options.alpha;
  p["map"] = a.options.map;
  try {
    run_suite(a.suite, a.options, report);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }

  for (const auto& d : report.deviations()) {
    const std::string measured =
        d["measured"].is_string() ? d["measured"].get<std::string>()
                                  : format("%.6g", d["measured"].get<double>());
    const std::string threshold =
        d["threshold"].is_string() ? d["threshold"].get<std::string>()
                                   : format("%.6g", d["threshold"].get<double>());
    out << (d["passed"].get<bool>() ? "PASS " : "FAIL ") << d["assertion"].get<std::string>()
        << ": " << measured << " " << d["relation"].get<std::string>() << " " << threshold << "\n";
  }
  if (report.results().contains("witness")) out << "witness: " << report.results()["witness"].dump() << "\n";
  out << (report.passed() ? "suite passed" : "suite FAILED") << "\n";
  emit_report(report, a.report, clock);
  return report.passed() ? kExitOk : kExitFailure;
}

// --- reconstruct ------------------------------------------------------------

struct ReconstructArgs {
  std::string unitary_file;
  bool anti = false;
  std::string simulate;
  std::string images_dir;
  int dim = 3;
  std::optional<std::uint64_t> seed;
  std::string dump_dir;
  std::string out_file;
  std::string report;
};

std::vector<LabeledProjection> load_images(const std::string& dir) {
  const fs::path first = fs::path(dir) / "E1.json";
  if (!fs::exists(first)) throw InputError(dir + ": missing E1.json");
  const int n = static_cast<int>(load_operator(first.string()).matrix.rows());
  std::vector<LabeledProjection> images = wigner_probe_inputs(n);
  for (auto& img : images) {
    const std::string path = (fs::path(dir) / (img.label + ".json")).string();
    if (!fs::exists(path)) throw InputError(dir + ": missing " + img.label + ".json");
    const OperatorFile file = load_operator(path);
    validate_role(file.matrix, "projection", path);
    img.projection = file.matrix;
  }
  return images;
}

int cmd_reconstruct(const ReconstructArgs& a, const std::string& echo, std::ostream& out) {
  Stopwatch clock;
  const int sources = !a.unitary_file.empty() + !a.simulate.empty() + !a.images_dir.empty();
  if (sources != 1) throw UsageError("give exactly one of --unitary, --simulate, --images");
  if (a.dim < 1) throw UsageError("--dim must be >= 1");

  RunReport report(echo);
  std::vector<LabeledProjection> images;
  std::optional<StateMap> map;
  if (!a.unitary_file.empty()) {
    const OperatorFile f = load_operator(a.unitary_file);
    validate_role(f.matrix, "unitary", a.unitary_file);
    map = a.anti ? StateMap::antiunitary(f.matrix) : StateMap::unitary(f.matrix);
    report.parameters()["unitary"] = a.unitary_file;
    report.parameters()["antiunitary"] = a.anti;
  } else if (!a.simulate.empty()) {
    const std::uint64_t seed = resolve_seed(a.seed);
    if (a.simulate == "haar") {
      SeededRng rng(seed);
      map = StateMap::unitary(haar_unitary(a.dim, rng));
    } else if (a.simulate == "transpose") {
      map = StateMap::transpose(a.dim);
    } else if (a.simulate == "identity") {
      map = StateMap::identity(a.dim);
    } else {
      throw UsageError("unknown --simulate '" + a.simulate + "' (expected haar, transpose or identity)");
    }
    report.parameters()["simulate"] = a.simulate;
    report.parameters()["dim"] = a.dim;
    report.parameters()["seed"] = seed;
  } else {
    images = load_images(a.images_dir);
    report.parameters()["images"] = a.images_dir;
  }
  if (map) images = wigner_images(*map);

  if (!a.dump_dir.empty()) {
    fs::create_directories(a.dump_dir);
    for (const auto& img : images) {
      write_operator((fs::path(a.dump_dir) / (img.label + ".json")).string(), img.projection,
                     "projection");
    }
  }

  WignerReconstruction rec;
  try {
    rec = wigner_reconstruct(images);
  } catch (const NoRepresentationError& e) {
    report.add_assertion("transition probabilities preserved", INFINITY, "<=", 1e-8);
    Json w = Json::object();
    w["first"] = e.first();
    w["second"] = e.second();
    w["message"] = e.what();
    report.add_witness(std::move(w));
    emit_report(report, a.report, clock);
    throw;
  }
  const char* kind = rec.antiunitary ? "antiunitary" : "unitary";
  out << "kind: " << kind << "\n" << "residual: " << format("%.3e", rec.residual) << "\n";
  report.results()["kind"] = kind;
  report.results()["residual"] = rec.residual;
  report.add_assertion("reconstruction residual", rec.residual, "<=", 1e-8);
  if (!a.out_file.empty()) {
    write_operator(a.out_file, rec.unitary, "unitary");
    report.results()["unitary_file"] = a.out_file;
  }
  emit_report(report, a.report, clock);
  return report.passed() ? kExitOk : kExitFailure;
}

// --- sample -----------------------------------------------------------------

struct SampleArgs {
  std::string kind;
  int dim = 2;
  std::optional<int> rank;
  double kappa = 10.0;
  std::optional<std::uint64_t> seed;
  std::string out_file;
  std::string report;
};

int cmd_sample(const SampleArgs& a, const std::string& echo, std::ostream& out) {
  Stopwatch clock;
  if (a.dim < 1) throw UsageError("--dim must be >= 1");
  const int rank = a.rank.value_or(a.dim);
  const std::uint64_t seed = resolve_seed(a.seed);
  SeededRng rng(seed);
  ComplexMatrix M;
  std::string role;
  if (a.kind == "density") {
    if (rank < 1 || rank > a.dim) throw UsageError("--rank must be in [1, --dim]");
    M = random_density(a.dim, rank, rng).matrix();
    role = "density";
  } else if (a.kind == "pd") {
    if (!(a.kappa >= 1.0) || !std::isfinite(a.kappa)) throw UsageError("--kappa must be >= 1");
    M = random_positive_definite(a.dim, a.kappa, rng).matrix();
    role = "positive";
  } else if (a.kind == "unitary") {
    M = haar_unitary(a.dim, rng);
    role = "unitary";
  } else {
    throw UsageError("unknown sample kind '" + a.kind + "' (expected density, pd or unitary)");
  }
  const std::string text = serialize_operator(M, role);
  if (a.out_file.empty()) {
    out << text;
  } else {
    write_text_file(a.out_file, text);
  }
  RunReport report(echo);
  report.parameters()["kind"] = a.kind;
  report.parameters()["dim"] = a.dim;
  report.parameters()["rank"] = rank;
  report.parameters()["kappa"] = a.kappa;
  report.parameters()["seed"] = seed;
  report.results()["out"] = a.out_file.empty() ? "-" : a.out_file;
  emit_report(report, a.report, clock);
  return kExitOk;
}

}  // namespace

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"qdiv: quantum divergences, preserver checks and Wigner reconstruction"};
  app.require_subcommand(1);

  DivArgs div;
  auto* div_cmd = app.add_subcommand("div", "Compute a divergence between two operator files");
  div_cmd->add_option("tag", div.tag, "umegaki | renyi | sandwiched | sandwiched-core | fdiv | dfg")
      ->required();
  div_cmd->add_option("A", div.file_a, "first operator file")->required();
  div_cmd->add_option("B", div.file_b, "second operator file")->required();
  div_cmd->add_option("--alpha", div.alpha, "order alpha in (0,1) U (1,inf)");
  div_cmd->add_option("--f", div.f, "function f (power:P, xlogx, linear:C, ratio)");
  div_cmd->add_option("--g", div.g, "function g for dfg");
  div_cmd->add_option("--report", div.report, "write a JSON run report");

  CheckArgs check;
  auto* check_cmd = app.add_subcommand("check", "Run a property suite");
  check_cmd->add_option("suite", check.suite, "invariance | lemmas | prop1 | prop2-limits | thm4 | wigner")
      ->required();
  check_cmd->add_option("--dim", check.options.dim, "Hilbert space dimension");
  check_cmd->add_option("--samples", check.options.samples, "number of random samples");
  check_cmd->add_option("--seed", check.seed, "RNG seed (default: $QDIV_SEED or 0)");
  check_cmd->add_option("--tol", check.options.tol, "tolerance for invariance checks");
  check_cmd->add_option("--alpha", check.options.alpha, "Renyi order");
  check_cmd->add_option("--map", check.options.map,
                        "invariance map: conjugations | haar | antiunitary | identity | "
                        "transpose | depolarizing:P");
  check_cmd->add_option("--report", check.report, "write a JSON run report");

  ReconstructArgs rec;
  auto* rec_cmd = app.add_subcommand("reconstruct", "Recover U from rank-one projection images");
  rec_cmd->add_option("--unitary", rec.unitary_file, "simulate conjugation by this unitary file");
  rec_cmd->add_flag("--anti", rec.anti, "with --unitary: use A -> U conj(A) U*");
  rec_cmd->add_option("--simulate", rec.simulate, "haar | transpose | identity");
  rec_cmd->add_option("--images", rec.images_dir, "directory of image files E1.json, F2.json, G.json, ...");
  rec_cmd->add_option("--dim", rec.dim, "dimension for --simulate");
  rec_cmd->add_option("--seed", rec.seed, "RNG seed for --simulate haar");
  rec_cmd->add_option("--dump-images", rec.dump_dir, "write the image files to this directory");
  rec_cmd->add_option("--out", rec.out_file, "write the recovered U");
  rec_cmd->add_option("--report", rec.report, "write a JSON run report");

  SampleArgs sample;
  auto* sample_cmd = app.add_subcommand("sample", "Write a random operator file");
  sample_cmd->add_option("kind", sample.kind, "density | pd | unitary")->required();
  sample_cmd->add_option("--dim", sample.dim, "dimension");
  sample_cmd->add_option("--rank", sample.rank, "rank for density (default: dim)");
  sample_cmd->add_option("--kappa", sample.kappa, "condition cap for pd");
  sample_cmd->add_option("--seed", sample.seed, "RNG seed (default: $QDIV_SEED or 0)");
  sample_cmd->add_option("--out", sample.out_file, "output path (default: stdout)");
  sample_cmd->add_option("--report", sample.report, "write a JSON run report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "qdiv: " << e.what() << "\n";
    return kExitUsage;
  }

  const std::string echo = command_echo(argc, argv);
  try {
    if (div_cmd->parsed()) return cmd_div(div, echo, out);
    if (check_cmd->parsed()) return cmd_check(check, echo, out);
    if (rec_cmd->parsed()) return cmd_reconstruct(rec, echo, out);
    if (sample_cmd->parsed()) return cmd_sample(sample, echo, out);
  } catch (const UsageError& e) {
    err << "qdiv: usage: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InputError& e) {
    err << "qdiv: invalid input: " << e.what() << "\n";
    return kExitInput;
  } catch (const NoRepresentationError& e) {
    err << "qdiv: no Wigner representation: " << e.what() << "\n";
    return kExitFailure;
  } catch (const DomainError& e) {
    err << "qdiv: usage: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ValidationError& e) {
    err << "qdiv: invalid input: " << e.what() << "\n";
    return kExitInput;
  } catch (const DimensionError& e) {
    err << "qdiv: invalid input: " << e.what() << "\n";
    return kExitInput;
  } catch (const Error& e) {
    err << "qdiv: " << e.what() << "\n";
    return kExitFailure;
  } catch (const fs::filesystem_error& e) {
    err << "qdiv: invalid input: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitUsage;
}

}  // namespace qdiv::cli
