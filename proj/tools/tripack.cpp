// tripack: packings of three copies of a 2-factor.
//
// Exit codes: 0 success, 1 verify found an invalid packing, 2 usage, parse
// or I/O error, 3 no packing exists for the shape, 4 budget exhausted.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "tripack/circulant.hpp"
#include "tripack/construct.hpp"
#include "tripack/enumerate.hpp"
#include "tripack/error.hpp"
#include "tripack/io.hpp"
#include "tripack/report.hpp"

using namespace tripack;

namespace {

constexpr int kExitInvalid = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNoPacking = 3;
constexpr int kExitBudget = 4;

struct Options {
  std::string shape;
  std::string file;
  std::string format = "json";
  std::string gens;
  int n = 0;
  double budget_seconds = 0;
  int max_n = kDefaultEnumerationMaxN;
};

Deadline deadline_of(const Options& o) {
  return o.budget_seconds > 0 ? Deadline::seconds(o.budget_seconds) : Deadline{};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Parse, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void print_packing(const TriplePacking& p, const std::string& format) {
  if (format == "dot")
    std::cout << to_dot(p);
  else if (format == "edgelist")
    std::cout << to_edge_list(p);
  else
    std::cout << to_json(p).dump() << '\n';
}

int run_pack(const Options& o) {
  const auto shape = TwoFactorShape::parse(o.shape);
  if (expected_class(shape) == OutcomeClass::NonExistent) {
    std::cerr << "no packing of three copies of " << shape.to_string() << " exists\n";
    return kExitNoPacking;
  }
  print_packing(any_packing(shape, deadline_of(o)), o.format);
  return 0;
}

int run_verify(const Options& o) {
  const std::string text = read_file(o.file);
  TriplePacking p;
  try {
    p = read_packing(text);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::InvalidPacking) throw;
    Json j{{"valid", false}, {"violations", Json::array({Json{{"kind", "Malformed"},
                                                             {"copies", Json::array()},
                                                             {"detail", e.what()}}})}};
    std::cout << j.dump() << '\n';
    return kExitInvalid;
  }
  const auto report = validate_packing(p);
  std::cout << validation_to_json(report).dump() << '\n';
  return report.ok() ? 0 : kExitInvalid;
}

int run_distinct(const Options& o) {
  const auto shape = TwoFactorShape::parse(o.shape);
  ConstructOptions options;
  options.deadline = deadline_of(o);
  const auto outcome = distinct_packings(shape, options);
  std::cout << outcome_to_json(outcome).dump() << '\n';
  if (const auto* none = std::get_if<NonExistent>(&outcome)) {
    std::cerr << none->reason << '\n';
    return kExitNoPacking;
  }
  return 0;
}

int run_enumerate(const Options& o) {
  const auto shape = TwoFactorShape::parse(o.shape);
  const auto result = enumerate_unions(shape, o.max_n, deadline_of(o));
  std::cout << enumeration_to_json(result).dump() << '\n';
  return result.exhaustive ? 0 : kExitBudget;
}

int run_circulant(const Options& o) {
  CirculantSpec spec{o.n, {}};
  std::vector<int> gens;
  std::stringstream in(o.gens);
  for (std::string tok; std::getline(in, tok, ',');) {
    try {
      gens.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw Error(ErrorCode::Parse, "cannot parse generators '" + o.gens + "'");
    }
  }
  if (gens.size() != 3) throw Error(ErrorCode::Parse, "--gens needs exactly three values");
  std::copy(gens.begin(), gens.end(), spec.generators.begin());
  const Deadline d = o.budget_seconds > 0 ? Deadline::seconds(o.budget_seconds) : Deadline::seconds(60);
  print_packing(hamiltonian_decomposition(spec, d), o.format);
  return 0;
}

int run_export(const Options& o) {
  print_packing(read_packing(read_file(o.file)), o.format);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Packings of three copies of a 2-factor"};
  app.require_subcommand(1);
  Options o;
  const auto formats = CLI::IsMember({"json", "dot", "edgelist"});

  auto* pack = app.add_subcommand("pack", "Print one packing of three copies of the shape");
  pack->add_option("--shape", o.shape, "Cycle lengths, e.g. 3,3,5")->required();
  pack->add_option("--format", o.format, "json, dot or edgelist")->check(formats);
  pack->add_option("--budget-seconds", o.budget_seconds, "Search budget");

  auto* verify = app.add_subcommand("verify", "Validate a packing file (JSON or edge list)");
  verify->add_option("file", o.file)->required();

  auto* distinct = app.add_subcommand("distinct", "Classify a shape and print witnesses");
  distinct->add_option("--shape", o.shape, "Cycle lengths")->required();
  distinct->add_option("--budget-seconds", o.budget_seconds, "Search budget");

  auto* enumerate = app.add_subcommand("enumerate", "Count union isomorphism classes exhaustively");
  enumerate->add_option("--shape", o.shape, "Cycle lengths")->required();
  enumerate->add_option("--max-n", o.max_n, "Largest order accepted");
  enumerate->add_option("--budget-seconds", o.budget_seconds, "Enumeration budget");

  auto* circulant = app.add_subcommand("circulant", "Hamiltonian decomposition of C_n(a,b,c)");
  circulant->add_option("--n", o.n, "Order")->required();
  circulant->add_option("--gens", o.gens, "Generators a,b,c")->required();
  circulant->add_option("--format", o.format, "json, dot or edgelist")->check(formats);
  circulant->add_option("--budget-seconds", o.budget_seconds, "Search budget (default 60)");

  auto* exp = app.add_subcommand("export", "Convert a packing file");
  exp->add_option("file", o.file)->required();
  exp->add_option("--format", o.format, "json, dot or edgelist")->check(formats)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*pack) return run_pack(o);
    if (*verify) return run_verify(o);
    if (*distinct) return run_distinct(o);
    if (*enumerate) return run_enumerate(o);
    if (*circulant) return run_circulant(o);
    return run_export(o);
  } catch (const Error& e) {
    std::cerr << "tripack: " << e.what() << '\n';
    const bool budget = e.code() == ErrorCode::Timeout || e.code() == ErrorCode::Incomplete;
    return budget ? kExitBudget : kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "tripack: " << e.what() << '\n';
    return kExitUsage;
  }
}
