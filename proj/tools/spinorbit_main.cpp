// Command-line front end: verification suites, table reproduction, and
// diagram emission.  Exit status: 0 all checks pass, 1 check failure,
// 2 usage error, 3 internal consistency error.
#include <cstdint>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "spinorbit/e8.hpp"
#include "spinorbit/invariants.hpp"
#include "spinorbit/orbit.hpp"
#include "spinorbit/reflgroup.hpp"
#include "spinorbit/report.hpp"
#include "spinorbit/spinor.hpp"
#include "spinorbit/tables.hpp"

namespace {

using namespace spinorbit;

constexpr std::uint64_t kDefaultSeed = 20260815;

int finish(const Report& rep, const std::string& json_path) {
  std::cout << rep.text();
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) {
      std::cerr << "cannot write " << json_path << "\n";
      return 3;
    }
    out << rep.json_str() << "\n";
  }
  return rep.all_ok() ? 0 : 1;
}

LieElement parse_element_arg(const std::string& text) {
  auto parsed = parse_spinor(text);
  if (!parsed) throw CLI::ValidationError("--element", "text does not parse");
  if (parsed->is_zero())
    throw CLI::ValidationError("--element", "element is zero");
  return G1Dictionary::get().map(*parsed);
}

int run_verify_all(std::uint64_t seed, const std::string& json_path) {
  std::vector<std::pair<std::string, std::function<Report()>>> tasks;
  tasks.emplace_back("grading", [] { return verify_grading(); });
  tasks.emplace_back("spin model", [] { return verify_spin_model(); });
  tasks.emplace_back("weight dictionary",
                     [] { return verify_weight_dictionary(); });
  tasks.emplace_back("cartan subspace",
                     [] { return verify_cartan_subspace(); });
  tasks.emplace_back("subgroup table", [] { return verify_table1(); });
  tasks.emplace_back("quotient generators",
                     [] { return verify_gamma_generators(); });
  tasks.emplace_back("presentation", [] { return verify_presentation(); });
  for (int i = 1; i <= 5; ++i)
    tasks.emplace_back("stratum polynomials " + std::to_string(i),
                       [i, seed] { return verify_stratum_polynomials(i, seed); });
  tasks.emplace_back("stabilizer properties", [seed] {
    return verify_stabilizer_properties(1000, seed);
  });
  tasks.emplace_back("invariant identities", [] { return verify_identities(); });
  tasks.emplace_back("action tables", [] { return verify_action_tables(); });
  tasks.emplace_back("z forms", [] { return verify_z_forms(); });
  tasks.emplace_back("invariant independence",
                     [seed] { return verify_invariant_independence(seed); });
  for (int i = 2; i <= 8; ++i)
    tasks.emplace_back("mixed table " + std::to_string(i),
                       [i] { return verify_mixed_table(i); });
  tasks.emplace_back("jordan round-trip",
                     [seed] { return verify_jordan_random(200, seed); });
  tasks.emplace_back("characteristic properties", [seed] {
    return verify_characteristic_properties(40, seed);
  });

  // the shared singletons are built once up front so that the parallel
  // tasks do not all block on the same first-use construction
  E8::get();
  G1Dictionary::get();
  W0Group::get();

  std::vector<std::future<Report>> futures;
  futures.reserve(tasks.size());
  for (auto& [name, fn] : tasks)
    futures.push_back(std::async(std::launch::async, fn));

  Report master("complete verification");
  for (size_t t = 0; t < tasks.size(); ++t) {
    try {
      Report sub = futures[t].get();
      master.merge(sub);
      master.check(tasks[t].first + " suite", sub.all_ok());
    } catch (const std::exception& ex) {
      master.check(tasks[t].first + " suite", false, ex.what());
    }
  }
  return finish(master, json_path);
}

int run_mixed_table(int index, const std::string& json_path) {
  const MixedTable& table = mixed_table(index);
  std::ostringstream os;
  os << "nilpotent parts of mixed elements over stratum " << index
     << " (base point " << table.base_text << ")\n";
  for (size_t r = 0; r < table.rows.size(); ++r) {
    const MixedRow& row = table.rows[r];
    os << "  row " << (r + 1) << ": element " << row.element << " | dim "
       << row.dim << " | signature " << row.signature;
    if (!row.char_quadruple.empty())
      os << " | characteristic (" << row.char_quadruple << ","
         << row.char_center << ")";
    os << "\n";
  }
  std::cout << os.str();
  Report rep = verify_mixed_table(index);
  return finish(rep, json_path);
}

int run_invariants(const std::string& json_path) {
  const auto& cat = invariant_catalog();
  std::ostringstream os;
  for (int i = 0; i < 10; ++i)
    os << "Q" << (i + 1) << " = " << cat.Q[static_cast<size_t>(i)].str()
       << "\n";
  for (int i = 0; i < 6; ++i)
    os << "A" << (i + 1) << " = " << cat.A[static_cast<size_t>(i)].str()
       << "\n";
  os << "F8 = " << cat.F8.str() << "\n";
  os << "F12 = " << cat.F12.str() << "\n";
  os << "F20 = " << cat.F20.str() << "\n";
  os << "F24 = " << cat.F24.str() << "\n";
  os << "Pi20 = " << cat.Pi20.str() << "\n";
  os << "Pi24 = " << cat.Pi24.str() << "\n";
  std::cout << os.str();
  Report master("invariant ring");
  for (const Report& r : {verify_action_tables(), verify_identities(),
                          verify_z_forms(), verify_invariant_independence()}) {
    std::cout << r.text();
    master.merge(r);
  }
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) {
      std::cerr << "cannot write " << json_path << "\n";
      return 3;
    }
    out << master.json_str() << "\n";
  }
  return master.all_ok() ? 0 : 1;
}

int run_dynkin_scheme(const std::string& element, const std::string& dot_path) {
  auto parsed = parse_spinor(element);
  if (!parsed || parsed->is_zero())
    throw CLI::ValidationError("--element", "text does not parse to a nonzero element");
  DynkinScheme scheme = dynkin_scheme(*parsed);
  const auto& labels = all_labels();
  std::cout << "nodes (" << scheme.nodes.size() << "):";
  for (int n : scheme.nodes)
    std::cout << " " << labels[static_cast<size_t>(n)].str();
  std::cout << "\nedges (" << scheme.edges.size() << "):\n";
  for (const auto& e : scheme.edges)
    std::cout << "  " << labels[static_cast<size_t>(e.a)].str() << " "
              << (e.dashed ? "- -" : "---") << " "
              << labels[static_cast<size_t>(e.b)].str() << "\n";
  if (!dot_path.empty()) {
    std::ofstream out(dot_path);
    if (!out) {
      std::cerr << "cannot write " << dot_path << "\n";
      return 3;
    }
    out << scheme.dot();
    std::cout << "dot graph written to " << dot_path << "\n";
  }
  return 0;
}

int run_jordan(const std::string& element) {
  LieElement x = parse_element_arg(element);
  JordanParts jp = jordan_g1(x);
  const G1Dictionary& dict = G1Dictionary::get();
  auto show = [&dict](const char* name, const LieElement& part) {
    if (part.is_zero()) {
      std::cout << name << " = 0\n";
      return;
    }
    auto t = dict.unmap(part);
    if (!t) throw std::runtime_error("jordan: part is not of degree 1");
    std::cout << name << " = " << t->str() << "\n";
  };
  show("semisimple part", jp.s);
  show("nilpotent part", jp.n);
  return 0;
}

int run_characteristic(const std::string& element,
                       const std::string& relative_to) {
  LieElement e = parse_element_arg(element);
  if (!is_nilpotent(e))
    throw CLI::ValidationError("--element",
                               "characteristic needs a nilpotent element");
  if (relative_to.empty()) {
    Sl2Triple triple = sl2_complete(e);
    std::array<GaussRat, 8> ch = characteristic(triple.h);
    std::cout << "characteristic (";
    for (int k = 0; k < 8; ++k)
      std::cout << (k ? "," : "") << to_string(ch[static_cast<size_t>(k)]);
    std::cout << ")\n";
    return 0;
  }
  if (relative_to != "p1")
    throw CLI::ValidationError("--relative-to",
                               "the frame is anchored at p1 only");
  const RelativeFrame& frame = RelativeFrame::get();
  LieElement p1 = frame.p1();
  if (!bracket(p1, e).is_zero())
    throw CLI::ValidationError(
        "--element", "element does not commute with the anchor point");
  std::vector<LieElement> z3 =
      centralizer_in(p1, E8::get().component(3));
  Sl2Triple triple = sl2_complete_in(e, z3);
  std::array<GaussRat, 5> raw = frame.raw_characteristic(triple.h);
  std::cout << "relative characteristic slots (";
  for (int k = 0; k < 5; ++k)
    std::cout << (k ? "," : "") << to_string(raw[static_cast<size_t>(k)]);
  std::cout << ")\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact verification toolkit for the order-4 graded E8 orbit "
      "classification"};
  app.require_subcommand(1);

  std::uint64_t seed = kDefaultSeed;
  std::string json_path, dot_path, element, relative_to;
  int table_index = 2;

  CLI::App* verify = app.add_subcommand("verify-all", "run every suite");
  verify->add_option("--seed", seed, "seed for randomized property suites");
  verify->add_option("--json", json_path, "mirror the report as JSON");

  app.add_subcommand("table1", "print the subgroup table");

  CLI::App* inv = app.add_subcommand(
      "invariants", "print the invariant catalog and identity verdicts");
  inv->add_option("--json", json_path, "mirror the report as JSON");

  CLI::App* mixed =
      app.add_subcommand("mixed-table", "verify a printed mixed-element table");
  mixed->add_option("index", table_index, "stratum index")
      ->required()
      ->check(CLI::Range(2, 8));
  mixed->add_option("--json", json_path, "mirror the report as JSON");

  CLI::App* dynkin =
      app.add_subcommand("dynkin-scheme", "print the scheme of an element");
  dynkin->add_option("--element", element, "spinor text")->required();
  dynkin->add_option("--dot", dot_path, "write a DOT graph to this path");

  CLI::App* jordan =
      app.add_subcommand("jordan", "split an element into its two parts");
  jordan->add_option("--element", element, "spinor text")->required();

  CLI::App* charac = app.add_subcommand(
      "characteristic", "dominant characteristic of a nilpotent element");
  charac->add_option("--element", element, "spinor text")->required();
  charac->add_option("--relative-to", relative_to,
                     "compute inside the centralizer frame of this point");

  app.add_subcommand("dump-grading",
                     "print the degree of every root and the degree-0 "
                     "simple roots");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (verify->parsed()) return run_verify_all(seed, json_path);
    if (app.got_subcommand("table1")) {
      std::cout << table1_text();
      return 0;
    }
    if (inv->parsed()) return run_invariants(json_path);
    if (mixed->parsed()) return run_mixed_table(table_index, json_path);
    if (dynkin->parsed()) return run_dynkin_scheme(element, dot_path);
    if (jordan->parsed()) return run_jordan(element);
    if (charac->parsed()) return run_characteristic(element, relative_to);
    if (app.got_subcommand("dump-grading")) {
      std::cout << grading_dump();
      return 0;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const GradingViolation& ex) {
    std::cerr << "internal consistency error: " << ex.what() << "\n";
    return 3;
  } catch (const std::exception& ex) {
    std::cerr << "internal error: " << ex.what() << "\n";
    return 3;
  }
  return 2;
}
