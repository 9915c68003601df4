// Command-line experiment runner: eta spectra, the Bell-difference
// distinguisher, brute-force stabilizer fidelity, closed-form bounds, and
// circuit-format tooling, all seeded and reproducible.

#include <atomic>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "stabscope/bounds.hpp"
#include "stabscope/circuit.hpp"
#include "stabscope/errors.hpp"
#include "stabscope/limits.hpp"
#include "stabscope/sampler.hpp"
#include "stabscope/spectra.hpp"
#include "stabscope/stabset.hpp"
#include "stabscope/state.hpp"
#include "stabscope/version.hpp"

namespace {

using namespace stabscope;

constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitCap = 3;

struct InputSpec {
  std::string circuit_path;
  std::string amps_path;
  std::string builtin;  // haar | magic | stabilizer
  bool normalize = false;
};

int count_sources(const InputSpec& in) {
  return (!in.circuit_path.empty() ? 1 : 0) + (!in.amps_path.empty() ? 1 : 0) +
         (!in.builtin.empty() ? 1 : 0);
}

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream buf;
  buf << f.rdbuf();
  return buf.str();
}

struct ResolvedInput {
  StateVector state;
  std::optional<int> t_count;  // known for circuit and builtin sources
};

ResolvedInput resolve_input(const InputSpec& in, int n, std::uint64_t seed) {
  if (count_sources(in) != 1) {
    throw CLI::ValidationError("exactly one of --circuit, --amps, --builtin required");
  }
  if (!in.circuit_path.empty()) {
    Circuit c = parse_circuit(read_file(in.circuit_path));
    return {simulate(c), c.t_count};
  }
  if (!in.amps_path.empty()) {
    return {load_amplitudes(in.amps_path, in.normalize), std::nullopt};
  }
  Rng rng(seed);
  if (in.builtin == "haar") {
    return {haar_random(n, rng), std::nullopt};
  }
  if (in.builtin == "magic") {
    return {t_magic_state_power(n), n};
  }
  if (in.builtin == "stabilizer") {
    Circuit c = random_clifford_t(n, 0, 4 * n, rng);
    return {simulate(c), 0};
  }
  throw CLI::ValidationError("unknown builtin \"" + in.builtin + "\"");
}

void add_input_flags(CLI::App* cmd, InputSpec& in) {
  cmd->add_option("--circuit", in.circuit_path, "Clifford+T circuit file (.qct)");
  cmd->add_option("--amps", in.amps_path, "amplitude file");
  cmd->add_option("--builtin", in.builtin, "builtin source: haar | magic | stabilizer");
  cmd->add_flag("--normalize", in.normalize, "normalize a loaded amplitude file");
}

void emit(const std::string& line, std::ostream& out) { out << line << "\n"; }

std::ostream& open_output(std::ofstream& file, const std::string& path) {
  if (path.empty()) return std::cout;
  file.open(path);
  if (!file) throw std::runtime_error("cannot open output file: " + path);
  return file;
}

void dump_table_csv(const DistributionTable& table, std::ostream& out) {
  out << "index,p_value\n";
  out.precision(17);
  for (std::uint64_t x = 0; x < table.values.size(); ++x) {
    out << x << "," << table.values[x] << "\n";
  }
}

int run_eta(const InputSpec& in, int n, std::uint64_t seed,
            const std::string& dump_path, const std::string& output_path) {
  ResolvedInput input = resolve_input(in, n, seed);
  EtaBreakdown eta = eta_paths(input.state);
  DistributionTable p = characteristic_table_fast(input.state);
  DistributionTable q = weyl_distribution(p);

  double p_max = 0.0, q_max = 0.0;
  for (double v : p.values) p_max = std::max(p_max, v);
  for (double v : q.values) q_max = std::max(q_max, v);

  nlohmann::ordered_json j;
  j["n"] = input.state.qubits();
  j["seed"] = seed;
  j["version"] = kVersion;
  j["eta"] = eta.from_tables;
  j["eta_paths"] = {{"tables", eta.from_tables},
                    {"fourier", eta.from_fourier},
                    {"expectation", eta.from_expectation}};
  j["p_max"] = p_max;
  j["q_max"] = q_max;

  std::ofstream file;
  std::ostream& out = open_output(file, output_path);
  emit(j.dump(), out);

  if (!dump_path.empty()) {
    std::ofstream dump(dump_path);
    if (!dump) throw std::runtime_error("cannot open dump file: " + dump_path);
    dump_table_csv(p, dump);
  }
  return 0;
}

int run_distinguish(const InputSpec& in, int n, std::uint64_t seed, int trials,
                    double k, double delta, std::optional<std::int64_t> m_override,
                    int repeats, int jobs, const std::string& format,
                    const std::string& output_path) {
  std::vector<ExperimentReport> reports(static_cast<std::size_t>(trials));
  std::vector<Verdict> verdicts(static_cast<std::size_t>(trials));

  Rng base(seed);
  std::atomic<int> next_trial{0};
  auto worker = [&] {
    for (;;) {
      int trial = next_trial.fetch_add(1);
      if (trial >= trials) return;
      Rng trial_rng = base.derive(static_cast<std::uint64_t>(trial));
      std::uint64_t trial_seed = trial_rng.next_u64();
      ResolvedInput input = resolve_input(in, n, trial_seed);

      // Majority vote over `repeats` independent runs; the report kept is the
      // first repeat's.
      int low = 0;
      for (int r = 0; r < repeats; ++r) {
        std::uint64_t run_seed = trial_rng.next_u64();
        ExperimentReport rep =
            distinguish(input.state, k, delta, run_seed, m_override);
        if (r == 0) reports[trial] = rep;
        if (rep.verdict == Verdict::LowComplexity) ++low;
      }
      verdicts[trial] =
          2 * low > repeats ? Verdict::LowComplexity : Verdict::HaarLike;
    }
  };

  int workers = std::max(1, std::min(jobs, trials));
  std::vector<std::thread> pool;
  for (int i = 1; i < workers; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::ofstream file;
  std::ostream& out = open_output(file, output_path);
  if (format == "csv") {
    emit(ExperimentReport::csv_header() + ",version", out);
  }
  int correct = 0;
  bool have_truth = !in.builtin.empty();
  Verdict truth =
      in.builtin == "haar" ? Verdict::HaarLike : Verdict::LowComplexity;
  for (int trial = 0; trial < trials; ++trial) {
    ExperimentReport rep = reports[trial];
    rep.verdict = verdicts[trial];
    if (format == "csv") {
      emit(rep.to_csv_row() + "," + std::string(kVersion), out);
    } else {
      nlohmann::ordered_json j = nlohmann::ordered_json::parse(rep.to_json());
      j["version"] = kVersion;
      emit(j.dump(), out);
    }
    if (have_truth && rep.verdict == truth) ++correct;
  }
  if (have_truth) {
    std::cerr << "accuracy: " << correct << "/" << trials << " correct ("
              << verdict_name(truth) << " expected)\n";
  }
  return 0;
}

int run_fidelity(const InputSpec& in, int n, std::uint64_t seed, int enum_cap,
                 const std::string& output_path) {
  ResolvedInput input = resolve_input(in, n, seed);
  FidelityWitness w = stabilizer_fidelity_witness(input.state, enum_cap);

  nlohmann::ordered_json j;
  j["n"] = input.state.qubits();
  j["seed"] = seed;
  j["version"] = kVersion;
  j["stabilizer_fidelity"] = w.fidelity;
  j["inverse_fidelity"] = 1.0 / w.fidelity;
  if (input.t_count) {
    j["t_count"] = *input.t_count;
    j["extent_upper_bound"] = extent_upper_bound_clifford_t(*input.t_count);
  }
  j["closest_state_index"] = w.index;
  nlohmann::json amps = nlohmann::json::array();
  for (const auto& a : w.closest_state.amplitudes()) {
    amps.push_back({a.real(), a.imag()});
  }
  j["closest_state_amplitudes"] = amps;

  std::ofstream file;
  std::ostream& out = open_output(file, output_path);
  emit(j.dump(), out);
  return 0;
}

int run_bounds(const std::string& name, int n, double n_dim, double lipschitz,
               double eps, double eta, const std::string& output_path) {
  BoundReport report;
  report.name = name;
  if (name == "levy") {
    report.inputs = {{"N", n_dim}, {"L", lipschitz}, {"eps", eps}};
    report.value = levy_bound(n_dim, lipschitz, eps);
  } else if (name == "haar-single-weyl") {
    report.inputs = {{"n", double(n)}, {"eps", eps}};
    report.value = haar_single_weyl_bound(n, eps);
  } else if (name == "haar-all-weyl") {
    report.inputs = {{"n", double(n)}, {"eps", eps}};
    report.value = haar_all_weyl_bound(n, eps);
  } else if (name == "haar-eta-failure") {
    bool out_of_regime = false;
    report.inputs = {{"n", double(n)}};
    report.value = haar_eta_failure_probability(n, &out_of_regime);
    if (out_of_regime) {
      std::cerr << "warning: the eta <= 2^{-n/2} guarantee requires n >= 33\n";
    }
  } else if (name == "qae-queries") {
    report.inputs = {{"eta", eta}, {"eps", eps}};
    report.value = qae_query_count(eta, eps);
  } else if (name == "tgate-exponent") {
    report.value = pseudorandom_tgate_exponent();
  } else if (name == "tightness") {
    report.value = tightness_constant();
  } else {
    throw CLI::ValidationError("unknown bound \"" + name + "\"");
  }

  std::ofstream file;
  std::ostream& out = open_output(file, output_path);
  emit(report.to_json(), out);
  return 0;
}

int run_parse_check(const std::string& path) {
  try {
    Circuit c = parse_circuit(read_file(path));
    std::cout << "ok: " << c.n << " qubits, " << c.gates.size() << " gates, "
              << c.t_count << " T gates\n";
    return 0;
  } catch (const ParseError& e) {
    std::cerr << path << ": " << e.what() << "\n";
    return kExitParse;
  }
}

int run_dump_tables(const InputSpec& in, int n, std::uint64_t seed,
                    const std::string& which, const std::string& output_path) {
  ResolvedInput input = resolve_input(in, n, seed);
  DistributionTable p = characteristic_table_fast(input.state);
  DistributionTable table = p;
  if (which == "q") {
    table = weyl_distribution(p);
  } else if (which == "fourier") {
    table = fourier_table(p);
  } else if (which != "p") {
    throw CLI::ValidationError("unknown table \"" + which + "\" (p | q | fourier)");
  }
  std::ofstream file;
  std::ostream& out = open_output(file, output_path);
  dump_table_csv(table, out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"stabscope: Bell-difference-sampling distinguisher toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));

  InputSpec input;
  int n = 1;
  std::uint64_t seed = 0;
  int trials = 1;
  double k = 1.0;
  double delta = 1.0 / 3.0;
  std::int64_t m_override_raw = -1;
  int repeats = 1;
  int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  int enum_cap = kDefaultEnumerationCap;
  std::string format = "json";
  std::string output_path;
  std::string dump_path;
  std::string bound_name;
  double bound_dim = 1.0, bound_lipschitz = 2.0, bound_eps = 0.01,
         bound_eta = 0.5;
  std::string table_which = "p";
  std::string check_path;

  auto* eta_cmd = app.add_subcommand("eta", "exact eta via all three spectral routes");
  add_input_flags(eta_cmd, input);
  eta_cmd->add_option("--n", n, "qubit count for builtin sources");
  eta_cmd->add_option("--seed", seed, "RNG seed");
  eta_cmd->add_option("--dump-csv", dump_path, "dump the p table as CSV");
  eta_cmd->add_option("--output", output_path, "output path (default stdout)");

  auto* dist_cmd = app.add_subcommand("distinguish", "run the distinguisher");
  add_input_flags(dist_cmd, input);
  dist_cmd->add_option("--n", n, "qubit count for builtin sources");
  dist_cmd->add_option("--seed", seed, "RNG seed");
  dist_cmd->add_option("--trials", trials, "independent trials");
  dist_cmd->add_option("--k", k, "fidelity parameter k")->required();
  dist_cmd->add_option("--delta", delta, "failure budget delta");
  dist_cmd->add_option("--m-override", m_override_raw,
                       "sample count override (default 60 k^12 ln(1/delta))");
  dist_cmd->add_option("--repeats", repeats, "majority-vote repetitions per trial");
  dist_cmd->add_option("--jobs", jobs, "worker threads");
  dist_cmd->add_option("--format", format, "json | csv");
  dist_cmd->add_option("--output", output_path, "output path (default stdout)");

  auto* fid_cmd = app.add_subcommand("fidelity", "brute-force stabilizer fidelity");
  add_input_flags(fid_cmd, input);
  fid_cmd->add_option("--n", n, "qubit count for builtin sources");
  fid_cmd->add_option("--seed", seed, "RNG seed");
  fid_cmd->add_option("--max-enum-n", enum_cap, "enumeration cap (default 4)");
  fid_cmd->add_option("--output", output_path, "output path (default stdout)");

  auto* bounds_cmd = app.add_subcommand("bounds", "evaluate a named closed-form bound");
  bounds_cmd->add_option("--name", bound_name, "levy | haar-single-weyl | haar-all-weyl | haar-eta-failure | qae-queries | tgate-exponent | tightness")->required();
  bounds_cmd->add_option("--n", n, "qubit count parameter");
  bounds_cmd->add_option("--N", bound_dim, "dimension N (levy)");
  bounds_cmd->add_option("--L", bound_lipschitz, "Lipschitz constant (levy)");
  bounds_cmd->add_option("--eps", bound_eps, "epsilon");
  bounds_cmd->add_option("--eta", bound_eta, "eta (qae-queries)");
  bounds_cmd->add_option("--output", output_path, "output path (default stdout)");

  auto* check_cmd = app.add_subcommand("parse-check", "validate a circuit file");
  check_cmd->add_option("--circuit", check_path, "circuit file")->required();

  auto* dump_cmd = app.add_subcommand("dump-tables", "dump p/q/fourier tables as CSV");
  add_input_flags(dump_cmd, input);
  dump_cmd->add_option("--n", n, "qubit count for builtin sources");
  dump_cmd->add_option("--seed", seed, "RNG seed");
  dump_cmd->add_option("--table", table_which, "p | q | fourier");
  dump_cmd->add_option("--output", output_path, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    std::optional<std::int64_t> m_override;
    if (m_override_raw >= 0) m_override = m_override_raw;

    if (eta_cmd->parsed()) {
      return run_eta(input, n, seed, dump_path, output_path);
    }
    if (dist_cmd->parsed()) {
      return run_distinguish(input, n, seed, trials, k, delta, m_override,
                             repeats, jobs, format, output_path);
    }
    if (fid_cmd->parsed()) {
      return run_fidelity(input, n, seed, enum_cap, output_path);
    }
    if (bounds_cmd->parsed()) {
      return run_bounds(bound_name, n, bound_dim, bound_lipschitz, bound_eps,
                        bound_eta, output_path);
    }
    if (check_cmd->parsed()) {
      return run_parse_check(check_path);
    }
    if (dump_cmd->parsed()) {
      return run_dump_tables(input, n, seed, table_which, output_path);
    }
    return kExitUsage;
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
