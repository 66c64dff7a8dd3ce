// tdecomp command-line front end. Talks to the library through the C API only.
#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "tdecomp/tdecomp.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Freer {
  void operator()(tdc_tournament* t) const { tdc_tournament_free(t); }
  void operator()(tdc_list* l) const { tdc_list_free(l); }
  void operator()(char* s) const { tdc_string_free(s); }
};
using TournamentPtr = std::unique_ptr<tdc_tournament, Freer>;
using ListPtr = std::unique_ptr<tdc_list, Freer>;
using StringPtr = std::unique_ptr<char, Freer>;

int report_error(tdc_status status, const std::string& context = {}) {
  std::cerr << "tdecomp: " << (context.empty() ? "" : context + ": ") << tdc_status_name(status) << ": "
            << tdc_last_error() << "\n";
  return kExitUsage;
}

int default_jobs() {
  if (const char* env = std::getenv("TDECOMP_JOBS")) {
    const int jobs = std::atoi(env);
    if (jobs > 0) return jobs;
  }
  return 1;
}

int print_record(const tdc_tournament* t) {
  char* raw = nullptr;
  const tdc_status status = tdc_format(t, &raw);
  if (status != TDC_OK) return report_error(status);
  StringPtr record(raw);
  std::cout << record.get() << "\n";
  return kExitOk;
}

struct GenArgs {
  std::string named;
  int size = 0;
  std::string family;
  std::vector<int> components;
  std::vector<int> h_explicit;
};

int run_gen(const GenArgs& a) {
  const int chosen = !a.named.empty() + !a.family.empty() + !a.h_explicit.empty();
  if (chosen != 1) {
    std::cerr << "tdecomp gen: give exactly one of --named, --family, --h-explicit\n";
    return kExitUsage;
  }
  tdc_tournament* raw = nullptr;
  tdc_status status;
  if (!a.named.empty()) {
    status = tdc_gen_named(a.named.c_str(), a.size, &raw);
  } else if (!a.family.empty()) {
    status = tdc_gen_family(a.family.c_str(), a.components.data(), a.components.size(), &raw);
  } else {
    if (a.h_explicit.size() != 2) {
      std::cerr << "tdecomp gen: --h-explicit takes K,N\n";
      return kExitUsage;
    }
    status = tdc_gen_h_explicit(a.h_explicit[0], a.h_explicit[1], &raw);
  }
  if (status != TDC_OK) return report_error(status, "gen");
  TournamentPtr t(raw);
  return print_record(t.get());
}

struct AnalyzeArgs {
  bool json = false;
  bool dot = false;
  std::vector<std::string> files;
};

int analyze_stream(std::istream& in, const std::string& source, tdc_report_format format) {
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    tdc_tournament* raw = nullptr;
    tdc_status status = tdc_parse(line.c_str(), &raw);
    if (status != TDC_OK) return report_error(status, source + ":" + std::to_string(number));
    TournamentPtr t(raw);
    char* out = nullptr;
    status = tdc_analyze(t.get(), format, &out);
    if (status != TDC_OK) return report_error(status, source + ":" + std::to_string(number));
    StringPtr text(out);
    std::cout << text.get();
    if (format != TDC_REPORT_DOT) std::cout << "\n";
  }
  return kExitOk;
}

int run_analyze(const AnalyzeArgs& a) {
  const tdc_report_format format = a.json ? TDC_REPORT_JSON : a.dot ? TDC_REPORT_DOT : TDC_REPORT_TEXT;
  if (a.files.empty()) return analyze_stream(std::cin, "<stdin>", format);
  for (const auto& path : a.files) {
    if (path == "-") {
      if (int rc = analyze_stream(std::cin, "<stdin>", format)) return rc;
      continue;
    }
    std::ifstream in(path);
    if (!in) {
      std::cerr << "tdecomp analyze: cannot open " << path << "\n";
      return kExitUsage;
    }
    if (int rc = analyze_stream(in, path, format)) return rc;
  }
  return kExitOk;
}

struct EnumerateArgs {
  int n = 0;
  std::vector<std::string> filters;
  bool indec = false;
  int jobs = 1;
  bool force = false;
};

int run_enumerate(const EnumerateArgs& a) {
  unsigned mask = a.indec ? static_cast<unsigned>(TDC_FILTER_INDECOMPOSABLE) : 0u;
  for (const auto& f : a.filters) {
    if (f == "all") continue;
    if (f == "indec") mask |= TDC_FILTER_INDECOMPOSABLE;
    else if (f == "family-t") mask |= TDC_FILTER_FAMILY_T;
    else if (f == "omits-w5") mask |= TDC_FILTER_OMITS_W5;
  }
  tdc_list* raw = nullptr;
  const tdc_status status = tdc_enumerate(a.n, mask, a.jobs, a.force ? 1 : 0, &raw);
  if (status != TDC_OK) return report_error(status, "enumerate");
  ListPtr list(raw);
  const std::size_t count = tdc_list_size(list.get());
  for (std::size_t i = 0; i < count; ++i) {
    if (int rc = print_record(tdc_list_at(list.get(), i))) return rc;
  }
  std::cout << "# count=" << count << "\n";
  return kExitOk;
}

struct VerifyArgs {
  std::string theorem;
  int n = 0;
  int max_n = 0;
  int jobs = 1;
  bool force = false;
};

int run_verify(const VerifyArgs& a) {
  tdc_theorem theorem;
  int size;
  if (a.theorem == "latka" || a.theorem == "main") {
    theorem = a.theorem == "latka" ? TDC_THEOREM_LATKA : TDC_THEOREM_MAIN;
    size = a.n;
    if (size <= 0) {
      std::cerr << "tdecomp verify: --theorem " << a.theorem << " needs --n\n";
      return kExitUsage;
    }
  } else {
    theorem = a.theorem == "hik" ? TDC_THEOREM_HIK : TDC_THEOREM_LEMMAS;
    size = a.max_n;
    if (size <= 0) {
      std::cerr << "tdecomp verify: --theorem " << a.theorem << " needs --max-n\n";
      return kExitUsage;
    }
  }
  int passed = 0;
  char* raw = nullptr;
  const tdc_status status = tdc_verify(theorem, size, a.jobs, a.force ? 1 : 0, &passed, &raw);
  if (status != TDC_OK) return report_error(status, "verify");
  StringPtr report(raw);
  std::cout << report.get();
  return passed ? kExitOk : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Indecomposable tournaments: generation, analysis, census and verification"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Print one generated tournament as a record");
  gen_cmd->add_option("--named", gen.named, "C3, P7, B6, T, U, W or TOTAL");
  gen_cmd->add_option("--size", gen.size, "Vertex count for T, U, W (odd >= 5) and TOTAL");
  gen_cmd->add_option("--family", gen.family, "H, I, J, J*, K, K*, L or L*");
  gen_cmd->add_option("--components", gen.components, "Component half-sizes, e.g. 1,2")->delimiter(',');
  gen_cmd->add_option("--h-explicit", gen.h_explicit, "K,N of the explicit H member on 2N+1 vertices")->delimiter(',');

  AnalyzeArgs analyze;
  auto* analyze_cmd = app.add_subcommand("analyze", "Analyze records from files or standard input");
  auto* json_flag = analyze_cmd->add_flag("--json", analyze.json, "One JSON object per line");
  analyze_cmd->add_flag("--dot", analyze.dot, "DOT digraph per tournament")->excludes(json_flag);
  analyze_cmd->add_option("files", analyze.files, "Record files ('-' for standard input)");

  EnumerateArgs enumerate;
  enumerate.jobs = default_jobs();
  auto* enumerate_cmd = app.add_subcommand("enumerate", "One record per isomorphism class, sorted by canonical code");
  enumerate_cmd->add_option("--n", enumerate.n, "Vertex count")->required();
  enumerate_cmd->add_option("--filter", enumerate.filters, "all, indec, family-t, omits-w5 (repeatable)")
      ->delimiter(',')
      ->check(CLI::IsMember({"all", "indec", "family-t", "omits-w5"}));
  enumerate_cmd->add_flag("--indec", enumerate.indec, "Same as --filter indec");
  enumerate_cmd->add_option("--jobs", enumerate.jobs, "Worker threads (default $TDECOMP_JOBS or 1)")
      ->check(CLI::PositiveNumber);
  enumerate_cmd->add_flag("--force", enumerate.force, "Allow sizes above the enumeration budget");

  VerifyArgs verify;
  verify.jobs = default_jobs();
  auto* verify_cmd = app.add_subcommand("verify", "Check a theorem against the census");
  verify_cmd->add_option("--theorem", verify.theorem, "latka, hik, main or lemmas")
      ->required()
      ->check(CLI::IsMember({"latka", "hik", "main", "lemmas"}));
  verify_cmd->add_option("--n", verify.n, "Vertex count (latka, main)");
  verify_cmd->add_option("--max-n", verify.max_n, "Largest vertex count (hik, lemmas)");
  verify_cmd->add_option("--jobs", verify.jobs, "Worker threads (default $TDECOMP_JOBS or 1)")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_flag("--force", verify.force, "Allow sizes above the enumeration budget");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (*gen_cmd) return run_gen(gen);
  if (*analyze_cmd) return run_analyze(analyze);
  if (*enumerate_cmd) return run_enumerate(enumerate);
  return run_verify(verify);
}
