// polycode: stabilizer codes from face-3-colored polyhedra.
//
// Exit codes: 0 success, 1 domain error (invalid input), 2 usage error.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "polycode/codegen.hpp"
#include "polycode/decoder.hpp"
#include "polycode/error.hpp"
#include "polycode/noisesim.hpp"
#include "polycode/polyhedron.hpp"
#include "polycode/reference.hpp"
#include "polycode/stabcode.hpp"

namespace {

using namespace polycode;

constexpr int kDomainError = 1;
constexpr int kUsageError = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Polyhedron load(const std::string& input) {
  const auto names = builtin_names();
  if (std::find(names.begin(), names.end(), input) != names.end()) return builtin(input);
  std::ifstream in(input);
  if (!in) throw Error("cannot open '" + input + "' (not a file or builtin name)");
  return read_polyhedron(in);
}

std::string color_string(const Polyhedron& p) {
  std::string out;
  for (const Face& f : p.faces()) out += f.color ? to_char(*f.color) : '-';
  return out;
}

// Validated and fully colored; uncolored input gets the first commuting
// coloring, reported on stderr.
Polyhedron load_colored(const std::string& input) {
  Polyhedron p = load(input);
  validate(p);
  if (!p.fully_colored()) {
    auto [colored, tried] = color_commuting(p.without_colors());
    std::cerr << "coloring " << color_string(colored) << " (after " << tried << " candidate(s))\n";
    p = std::move(colored);
  }
  return p;
}

StabilizerCode load_code(const std::string& input) {
  const Polyhedron p = load_colored(input);
  return StabilizerCode::build(p.num_vertices(), checks_from_polyhedron(p));
}

void emit(const Polyhedron& p, const std::string& path) {
  if (path.empty()) {
    write_polyhedron(std::cout, p);
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  write_polyhedron(out, p);
}

std::size_t resolve_max_weight(std::size_t requested, std::size_t n) {
  const std::size_t w = requested == 0 ? n : requested;
  const std::uint64_t cost = distance_scan_cost(n, w);
  if (cost > 1'000'000'000ull) {
    std::cerr << "warning: distance scan may visit up to " << cost << " Paulis\n";
  }
  return w;
}

std::string index_list(const std::vector<std::size_t>& idx, const char* prefix) {
  std::string out;
  for (std::size_t i : idx) out += (out.empty() ? "" : ",") + std::string(prefix) + std::to_string(i + 1);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stabilizer codes from face-3-colored polyhedra"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "Serialization format")->check(CLI::IsMember({"text"}));

  std::string input;
  std::string output;
  std::size_t max_weight = 0;
  unsigned threads = 0;
  bool golden = false;
  bool reduce = false;
  std::string syndrome_bits;
  std::string error_text;
  bool dump_table = false;
  std::vector<double> ps;
  std::uint64_t shots = 100000;
  std::uint64_t seed = 1;

  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("input", input, "Polyhedron file or builtin name (" +
                                        [] {
                                          std::string s;
                                          for (const auto& n : builtin_names()) s += (s.empty() ? "" : ", ") + n;
                                          return s;
                                        }() +
                                        ")")
        ->required();
  };

  auto* validate_cmd = app.add_subcommand("validate", "Check sphere invariants and print counts");
  add_input(validate_cmd);

  auto* color_cmd = app.add_subcommand("color", "3-color the faces so the checks commute");
  add_input(color_cmd);
  color_cmd->add_option("-o,--output", output, "Output file (default stdout)");

  auto* rhombify_cmd = app.add_subcommand("rhombify", "Glue a pyramid onto every face");
  add_input(rhombify_cmd);
  rhombify_cmd->add_option("-o,--output", output, "Output file (default stdout)");

  auto* checks_cmd = app.add_subcommand("checks", "Print one check per face");
  add_input(checks_cmd);

  auto* logicals_cmd = app.add_subcommand("logicals", "Print a canonical logical basis");
  add_input(logicals_cmd);
  logicals_cmd->add_flag("--golden", golden, "Verify the reference rhombic-dodecahedron logicals");
  logicals_cmd->add_flag("--reduce", reduce, "Greedily lower representative weights");

  auto* params_cmd = app.add_subcommand("params", "Print [[n,k,d]], CSS flag and twist-predicted k");
  add_input(params_cmd);
  params_cmd->add_option("--max-weight", max_weight, "Distance scan limit (default n)");
  params_cmd->add_option("--threads", threads, "Worker threads (0 = all cores)");

  auto* distance_cmd = app.add_subcommand("distance", "Exhaustive minimum-distance scan");
  add_input(distance_cmd);
  distance_cmd->add_option("--max-weight", max_weight, "Distance scan limit (default n)");
  distance_cmd->add_option("--threads", threads, "Worker threads (0 = all cores)");

  auto* decode_cmd = app.add_subcommand("decode", "Look up the minimum-weight correction");
  add_input(decode_cmd);
  auto* syn_opt = decode_cmd->add_option("--syndrome", syndrome_bits, "Syndrome bits, bit 0 first");
  auto* err_opt = decode_cmd->add_option("--error", error_text, "Error as a Pauli string");
  auto* dump_opt = decode_cmd->add_flag("--dump-table", dump_table, "Print the whole decoder table");
  syn_opt->excludes(err_opt)->excludes(dump_opt);
  err_opt->excludes(dump_opt);

  auto* simulate_cmd = app.add_subcommand("simulate", "Depolarizing-noise Monte Carlo");
  add_input(simulate_cmd);
  simulate_cmd->add_option("--p", ps, "Depolarizing probability (repeatable)")->required();
  simulate_cmd->add_option("--shots", shots, "Shots per p");
  simulate_cmd->add_option("--seed", seed, "RNG seed");
  simulate_cmd->add_option("--threads", threads, "Worker threads (0 = all cores)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    if (*validate_cmd) {
      const PolyStats s = validate(load(input));
      std::cout << "V=" << s.vertices << " E=" << s.edges << " F=" << s.faces << " twists=" << s.twist_count
                << '\n';
      std::cout << "degrees";
      for (const auto& [deg, count] : s.degree_histogram) std::cout << ' ' << deg << ':' << count;
      std::cout << "\neuler=" << s.euler_characteristic << '\n';
    } else if (*color_cmd) {
      const Polyhedron p = load(input);
      validate(p);
      auto [colored, tried] = color_commuting(p.without_colors());
      std::cerr << "tried " << tried << " coloring(s)\n";
      emit(colored, output);
    } else if (*rhombify_cmd) {
      emit(rhombify(load(input)), output);
    } else if (*checks_cmd) {
      for (const auto& c : checks_from_polyhedron(load_colored(input))) std::cout << c.str() << '\n';
    } else if (*logicals_cmd) {
      StabilizerCode code = load_code(input);
      if (golden) {
        if (code.n() != 14 || code.k() != 3) {
          throw Error("--golden needs the rhombic-dodecahedron code ([[14,3,*]])");
        }
        const LogicalReport report =
            verify_golden_logicals(code, reference::rhombic_xbars(), reference::rhombic_zbars());
        for (const auto& item : report.items) {
          std::cout << "check " << item.name << ' ' << (item.passed ? "PASS" : "FAIL") << ' ' << item.detail
                    << '\n';
        }
        if (!report.all_passed()) return kDomainError;
        code = code.with_logicals(reference::rhombic_xbars(), reference::rhombic_zbars());
      } else if (reduce) {
        code = code.with_reduced_logicals();
      }
      for (std::size_t i = 0; i < code.k(); ++i) std::cout << "xbar" << i + 1 << ' ' << code.logical_x()[i].str() << '\n';
      for (std::size_t i = 0; i < code.k(); ++i) std::cout << "zbar" << i + 1 << ' ' << code.logical_z()[i].str() << '\n';
    } else if (*params_cmd) {
      const Polyhedron p = load_colored(input);
      const PolyStats stats = validate(p);
      const auto checks = checks_from_polyhedron(p);
      const StabilizerCode code = StabilizerCode::build(p.num_vertices(), checks);
      const CodeParams cp = params(code, resolve_max_weight(max_weight, code.n()), threads);
      std::cout << cp.str() << ' ' << (is_css(checks) ? "CSS" : "non-CSS");
      if (stats.twist_count % 2 == 0) {
        std::cout << ", twist-predicted k=" << predict_k_from_twists(stats.twist_count);
      } else {
        std::cout << ", twist-predicted k=undefined (odd twist count " << stats.twist_count << ")";
      }
      std::cout << '\n';
    } else if (*distance_cmd) {
      const StabilizerCode code = load_code(input);
      const DistanceResult dr = distance(code, resolve_max_weight(max_weight, code.n()), threads);
      if (dr.d) {
        std::cout << "d=" << *dr.d << " witness=" << dr.witness->str() << '\n';
      } else {
        std::cout << "d>" << dr.max_weight << '\n';
      }
    } else if (*decode_cmd) {
      const StabilizerCode code = load_code(input);
      const DecoderTable table = build_table(code);
      if (dump_table) {
        table.write(std::cout);
      } else if (!error_text.empty()) {
        const PauliOperator e = parse_pauli(error_text);
        const Syndrome s = syndrome_of(code, e);
        const PauliOperator c = decode(table, s);
        const ResidualReport r = classify_residual(code, e, c);
        std::cout << "syndrome " << s.str() << "\ncorrection " << c.str() << "\nresult " << to_string(r.outcome)
                  << '\n';
        if (r.outcome == DecodeOutcome::logical_failure) {
          std::cout << "detected_by " << index_list(r.detected_by_xbar, "xbar")
                    << (r.detected_by_xbar.empty() || r.detected_by_zbar.empty() ? "" : ",")
                    << index_list(r.detected_by_zbar, "zbar") << '\n';
        }
      } else if (!syndrome_bits.empty()) {
        const Syndrome s{BitVec::from_string(syndrome_bits)};
        std::cout << "syndrome " << s.str() << "\ncorrection " << decode(table, s).str() << '\n';
      } else {
        throw UsageError("decode needs one of --syndrome, --error or --dump-table");
      }
    } else if (*simulate_cmd) {
      const StabilizerCode code = load_code(input);
      const DecoderTable table = build_table(code);
      std::vector<SimReport> reports;
      for (double p : ps) reports.push_back(run(code, table, NoiseModel{p}, shots, seed, threads));
      std::istringstream table_text(format_report_table(reports));
      for (std::string line; std::getline(table_text, line);) std::cout << "# " << line << '\n';
      for (const auto& r : reports) std::cout << format_report_line(r) << '\n';
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDomainError;
  }
  return 0;
}
