// artin-comm: runs the verification pipelines and prints a report.
// Exit status: 0 unless some step is falsified (1); 2 on usage errors.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "artin/pipelines.hpp"

namespace {

std::vector<artin::CoxeterSpec> parse_types(std::string const& list) {
  std::vector<artin::CoxeterSpec> out;
  std::string item;
  // I2(m) contains no comma, so a plain split is enough
  std::istringstream in(list);
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(artin::CoxeterSpec::parse(item));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification of commensurability and torsion facts for spherical Artin groups"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string budget, json_path, types, table_override;
  unsigned threads = 1;
  app.add_option("--budget", budget, "wall-clock budget, e.g. 30s, 500ms, 10m");
  app.add_option("--json", json_path, "write the report as JSON to this path");
  app.add_option("--threads", threads, "worker threads (ARTIN_COMM_THREADS overrides)")->check(CLI::PositiveNumber);

  auto* torsion = app.add_subcommand("verify-torsion", "check the torsion table rows");
  torsion->add_option("--types", types, "comma-separated types, e.g. F4,H4,I2(5)");
  torsion->add_option("--table-override", table_override, "JSON file replacing table rows")
      ->check(CLI::ExistingFile);
  auto* h4 = app.add_subcommand("prove-h4", "A[H4] and A[D4] are not commensurable");
  auto* f4 = app.add_subcommand("prove-f4", "A[F4] and A[D4] are not commensurable");
  auto* ex13 = app.add_subcommand("verify-example13", "the homomorphism A[F4] -> A[D4] x| S3");
  auto* all = app.add_subcommand("run-all", "every pipeline");
  all->add_option("--table-override", table_override, "JSON file replacing table rows")
      ->check(CLI::ExistingFile);

  CLI11_PARSE(app, argc, argv);

  artin::PipelineOptions opts;
  try {
    if (char const* env = std::getenv("ARTIN_COMM_THREADS")) {
      threads = static_cast<unsigned>(std::stoul(env));
      if (threads == 0) throw std::invalid_argument("ARTIN_COMM_THREADS must be positive");
    }
    opts.threads = threads;
    if (!budget.empty()) opts.deadline = artin::Deadline(artin::parse_duration(budget));
    if (!types.empty()) opts.specs = parse_types(types);
    if (!table_override.empty()) opts.table_rows = artin::load_table_override(table_override);
  } catch (std::exception const& e) {
    std::cerr << "artin-comm: " << e.what() << "\n";
    return 2;
  }

  artin::VerificationReport report;
  try {
    if (*torsion) report = artin::cmd_verify_torsion(opts);
    else if (*h4) report = artin::cmd_prove_h4(opts);
    else if (*f4) report = artin::cmd_prove_f4(opts);
    else if (*ex13) report = artin::cmd_verify_example13(opts);
    else report = artin::cmd_run_all(opts);
  } catch (std::invalid_argument const& e) {
    std::cerr << "artin-comm: " << e.what() << "\n";
    return 2;
  }

  artin::print_table(std::cout, report);
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) {
      std::cerr << "artin-comm: cannot write " << json_path << "\n";
      return 2;
    }
    out << artin::to_json(report).dump(2) << "\n";
  }
  return report.falsified() ? 1 : 0;
}
