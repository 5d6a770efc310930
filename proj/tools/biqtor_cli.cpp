// Batch front end: check | tor | ktheory | enlarge over JSON problem specs.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "biqtor/problem.hpp"

namespace fs = std::filesystem;

namespace {

struct JobOutcome {
  int exit_code = 0;
  std::string report;
  std::string error;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open spec file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

JobOutcome run_one(biqtor::Command cmd, const std::string& path,
                   const std::function<void(biqtor::BiquotientSpec&)>& apply_overrides) {
  JobOutcome out;
  try {
    biqtor::BiquotientSpec spec = biqtor::parse_spec(slurp(path));
    apply_overrides(spec);
    biqtor::RunResult result = biqtor::run_command(cmd, spec);
    out.exit_code = result.exit_code;
    out.report = std::move(result.report_json);
  } catch (const biqtor::BudgetError& e) {
    out.exit_code = 2;
    out.error = std::string("budget exceeded: ") + e.what();
  } catch (const std::invalid_argument& e) {
    out.exit_code = 1;
    out.error = e.what();
  } catch (const std::logic_error& e) {
    out.exit_code = 3;
    out.error = std::string("internal inconsistency: ") + e.what();
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact biquotient conditions, Tor of representation rings, and K-theory"};
  app.require_subcommand(1);

  std::vector<std::string> spec_files;
  std::string field_text;
  std::uint64_t seed = 0;
  bool seed_set = false;
  std::uint64_t max_spairs = 0;
  std::int64_t max_degree = 0;
  unsigned jobs = 1;
  std::string out_path;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("specfile", spec_files, "JSON problem spec file(s)")
        ->required()
        ->check(CLI::ExistingFile);
    sub->add_option("--field", field_text, "coefficient field: q or fp:<p>");
    sub->add_option("--seed", seed, "seed for randomized constructions")
        ->each([&](const std::string&) { seed_set = true; });
    sub->add_option("--max-spairs", max_spairs, "S-pair budget for Groebner runs");
    sub->add_option("--max-degree", max_degree, "total-degree budget for Groebner runs");
    sub->add_option("--jobs", jobs, "process independent spec files in parallel")
        ->check(CLI::PositiveNumber);
    sub->add_option("--out", out_path, "output file (one spec) or directory (several)");
  };

  CLI::App* cmd_check = app.add_subcommand("check", "classify the pair and compute ranks");
  CLI::App* cmd_tor = app.add_subcommand("tor", "compute Tor and verify the vanishing bound");
  CLI::App* cmd_ktheory = app.add_subcommand("ktheory", "K-theory of the biquotient");
  CLI::App* cmd_enlarge = app.add_subcommand("enlarge", "enlarge S1 to maximal rank");
  for (auto* sub : {cmd_check, cmd_tor, cmd_ktheory, cmd_enlarge}) add_common(sub);

  CLI11_PARSE(app, argc, argv);

  biqtor::Command cmd = biqtor::Command::Check;
  if (cmd_tor->parsed()) cmd = biqtor::Command::Tor;
  if (cmd_ktheory->parsed()) cmd = biqtor::Command::KTheory;
  if (cmd_enlarge->parsed()) cmd = biqtor::Command::Enlarge;

  auto apply_overrides = [&](biqtor::BiquotientSpec& spec) {
    if (!field_text.empty()) spec.options.field = biqtor::FieldTag::parse(field_text);
    if (seed_set) spec.options.seed = seed;
    if (max_spairs > 0) spec.options.budget.max_spairs = max_spairs;
    if (max_degree > 0) spec.options.budget.max_degree = max_degree;
  };

  const auto started = std::chrono::steady_clock::now();
  std::vector<JobOutcome> outcomes(spec_files.size());
  if (jobs <= 1 || spec_files.size() <= 1) {
    for (std::size_t i = 0; i < spec_files.size(); ++i)
      outcomes[i] = run_one(cmd, spec_files[i], apply_overrides);
  } else {
    std::mutex next_mutex;
    std::size_t next = 0;
    auto worker = [&]() {
      for (;;) {
        std::size_t i;
        {
          std::lock_guard<std::mutex> lock(next_mutex);
          if (next >= spec_files.size()) return;
          i = next++;
        }
        outcomes[i] = run_one(cmd, spec_files[i], apply_overrides);
      }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < std::min<std::size_t>(jobs, spec_files.size()); ++t)
      pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  int exit_code = 0;
  for (std::size_t i = 0; i < spec_files.size(); ++i) {
    const JobOutcome& o = outcomes[i];
    exit_code = std::max(exit_code, o.exit_code);
    if (!o.error.empty()) {
      std::cerr << spec_files[i] << ": " << o.error << "\n";
      continue;
    }
    if (out_path.empty()) {
      std::cout << o.report;
    } else if (spec_files.size() == 1) {
      std::ofstream out(out_path, std::ios::binary);
      out << o.report;
    } else {
      fs::create_directories(out_path);
      fs::path target = fs::path(out_path) / fs::path(spec_files[i]).filename();
      target.replace_extension(".report.json");
      std::ofstream out(target, std::ios::binary);
      out << o.report;
    }
  }
  const auto elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started);
  std::cerr << "elapsed: " << elapsed.count() << " ms\n";
  return exit_code;
}
