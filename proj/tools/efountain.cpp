// efountain: analyze, export and verify finite E-Fountain semigroups.
//
// Exit codes: 0 when every checked condition holds, 1 when one fails, 2 on
// input errors.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "efountain/acceptance.hpp"
#include "efountain/algebra.hpp"
#include "efountain/category.hpp"
#include "efountain/corpus.hpp"
#include "efountain/families.hpp"
#include "efountain/sweep.hpp"
#include "report.hpp"

#ifndef EFOUNTAIN_DATA_DIR
#define EFOUNTAIN_DATA_DIR "tests/data"
#endif

namespace {

  using namespace efountain;
  using report::json;

  struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
  };

  struct SourceOptions {
    std::string family;
    std::string table;
    std::string E;
  };

  struct Loaded {
    json                descriptor;
    FiniteSemigroup     semigroup;
    std::vector<size_t> E;
  };

  std::vector<size_t> read_e(std::string const& text) {
    try {
      return parse_index_list(text);
    } catch (Exception const&) {
    }
    std::ifstream in(text);
    if (!in) {
      throw InputError("--E '" + text + "' is neither an index list nor a readable file");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    std::string body;
    for (std::string line; std::getline(buffer, line);) {
      if (line.find('#') != std::string::npos) {
        line.erase(line.find('#'));
      }
      body += line + ' ';
    }
    return parse_index_list(body);
  }

  Loaded load(SourceOptions const& src) {
    if (src.family.empty() == src.table.empty()) {
      throw InputError("give exactly one of --family and --table");
    }
    Loaded out;
    if (!src.family.empty()) {
      auto const F     = build_family(src.family);
      out.descriptor   = json::object({{"family", F.name()}});
      out.semigroup    = F.semigroup();
      out.E            = src.E.empty() || src.E == "auto-of" ? F.es.E() : read_e(src.E);
      return out;
    }
    if (src.E == "auto-of") {
      throw InputError("--E auto-of needs --family");
    }
    std::ifstream in(src.table);
    if (!in) {
      throw Exception(ErrorCode::io_error, "cannot open " + src.table);
    }
    out.descriptor = json::object(
        {{"table", std::filesystem::path(src.table).filename().string()}});
    out.semigroup  = read_table(in);
    out.E          = src.E.empty() ? idempotents(out.semigroup) : read_e(src.E);
    return out;
  }

  void write_output(std::string const& path, std::string const& text) {
    if (path.empty() || path == "-") {
      std::cout << text;
      return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) {
      throw Exception(ErrorCode::io_error, "cannot write " + path);
    }
  }

  int cmd_analyze(SourceOptions const& src, std::string const& out, size_t budget,
                  bool timing) {
    auto  loaded = load(src);
    auto  result = report::analyze({loaded.descriptor, loaded.semigroup, loaded.E,
                                    budget, timing});
    write_output(out, result.report.dump(2) + "\n");
    return result.all_hold ? 0 : 1;
  }

  int cmd_export(SourceOptions const& src, std::string const& what,
                 std::string const& out) {
    auto const loaded = load(src);
    auto const& S     = loaded.semigroup;
    if (what == "table") {
      write_output(out, format_table(S));
    } else if (what == "dot-eggbox") {
      write_output(out, export_dot(S, green_classes(S)));
    } else if (what == "dot-category" || what == "phi-matrix") {
      EStructure ES(S, loaded.E);
      if (what == "dot-category") {
        write_output(out, export_dot(associated_category(ES)));
      } else {
        write_output(out, report::linear_map_json(phi(ES)).dump(2) + "\n");
      }
    } else {
      throw InputError("unknown --what '" + what
                       + "', expected dot-category, dot-eggbox, table or phi-matrix");
    }
    return 0;
  }

  int cmd_verify(std::string const& suite, std::string const& only,
                 AcceptanceOptions const& opt, bool timing) {
    if (suite != "paper" && suite != "corpus") {
      throw InputError("unknown --suite '" + suite + "', expected paper or corpus");
    }
    std::vector<Criterion const*> chosen;
    for (auto const& c : criteria()) {
      bool const in_suite = suite == "paper" || c.id == "theorem-sweep";
      if (in_suite && (only.empty() || only == c.id)) {
        chosen.push_back(&c);
      }
    }
    if (chosen.empty()) {
      throw InputError("no criterion '" + only + "' in suite " + suite);
    }
    bool all = true;
    for (auto const* c : chosen) {
      auto const r = run_criterion(*c, opt);
      all          = all && r.pass;
      std::cout << (r.pass ? "PASS" : "FAIL") << ' ' << r.number << ' ' << r.id
                << ": " << r.detail;
      if (timing) {
        std::cout << " (" << r.seconds << " s)";
      }
      std::cout << '\n';
    }
    return all ? 0 : 1;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite E-Fountain semigroups: structure, categories and algebras"};
  app.require_subcommand(1);

  SourceOptions     src;
  std::string       out, what, suite = "paper", only;
  size_t            jobs   = 1;
  size_t            budget = default_enumeration_budget;
  bool              timing = false;
  AcceptanceOptions acc{std::string(EFOUNTAIN_DATA_DIR) + "/corpus.txt", 6};

  auto add_source = [&](CLI::App* sub) {
    sub->add_option("--family", src.family, "of:n, catalan:n, io:n or ic:n");
    sub->add_option("--table", src.table, "multiplication table file");
    sub->add_option("--E", src.E,
                    "E as indices (\"0,2\"), a file of indices, or auto-of");
  };
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--jobs", jobs, "worker threads for exhaustive sweeps");
    sub->add_flag("--timing", timing, "include timings in the output");
  };

  auto* analyze = app.add_subcommand("analyze", "run the full analysis, JSON to stdout");
  add_source(analyze);
  add_common(analyze);
  analyze->add_option("--out", out, "write the report here instead of stdout");
  analyze->add_option("--budget", budget, "limit on enumerated partial maps");

  auto* exp = app.add_subcommand("export", "write one artifact");
  add_source(exp);
  add_common(exp);
  exp->add_option("--what", what, "dot-category, dot-eggbox, table or phi-matrix")
      ->required();
  exp->add_option("--out", out, "output file (stdout if omitted)");

  auto* verify = app.add_subcommand("verify", "run the acceptance criteria");
  add_common(verify);
  verify->add_option("--suite", suite, "paper or corpus");
  verify->add_option("--only", only, "run a single criterion by id");
  verify->add_option("--max-order", acc.max_order, "skip larger corpus entries");
  verify->add_option("--corpus", acc.corpus_path, "corpus file");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  set_jobs(jobs);
  try {
    if (*analyze) {
      return cmd_analyze(src, out, budget, timing);
    }
    if (*exp) {
      return cmd_export(src, what, out);
    }
    return cmd_verify(suite, only, acc, timing);
  } catch (InputError const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (Exception const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
