#include "tdecomp/tdecomp.h"

#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include "tdecomp/error.hpp"
#include "tdecomp/generators.hpp"
#include "tdecomp/io.hpp"
#include "tdecomp/verification.hpp"
#include "tdecomp/w5.hpp"

struct tdc_tournament {
  tdecomp::Tournament value;
};

struct tdc_list {
  std::vector<tdc_tournament> items;
};

namespace {

thread_local std::string g_last_error;

tdc_status to_status(tdecomp::ErrorCode code) {
  using tdecomp::ErrorCode;
  switch (code) {
    case ErrorCode::MissingPair: return TDC_MISSING_PAIR;
    case ErrorCode::ConflictingPair: return TDC_CONFLICTING_PAIR;
    case ErrorCode::SelfArc: return TDC_SELF_ARC;
    case ErrorCode::VertexOutOfRange: return TDC_VERTEX_OUT_OF_RANGE;
    case ErrorCode::NotIndecomposable: return TDC_NOT_INDECOMPOSABLE;
    case ErrorCode::CoreNotIndecomposable: return TDC_CORE_NOT_INDECOMPOSABLE;
    case ErrorCode::CoreTooSmall: return TDC_CORE_TOO_SMALL;
    case ErrorCode::NotTransitive: return TDC_NOT_TRANSITIVE;
    case ErrorCode::BadSize: return TDC_BAD_SIZE;
    case ErrorCode::BadParameters: return TDC_BAD_PARAMETERS;
    case ErrorCode::InfeasibleSpec: return TDC_INFEASIBLE_SPEC;
    case ErrorCode::AmbiguousSpec: return TDC_AMBIGUOUS_SPEC;
    case ErrorCode::NotFamilyT: return TDC_NOT_FAMILY_T;
    case ErrorCode::NoEligibleVertex: return TDC_NO_ELIGIBLE_VERTEX;
    case ErrorCode::BudgetExceeded: return TDC_BUDGET_EXCEEDED;
    case ErrorCode::ParseError: return TDC_PARSE_ERROR;
  }
  return TDC_INTERNAL;
}

// Runs body, translating exceptions into status codes and the thread's
// last-error message.
template <typename Body>
tdc_status guarded(Body&& body) {
  g_last_error.clear();
  try {
    body();
    return TDC_OK;
  } catch (const tdecomp::Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return TDC_INTERNAL;
  } catch (...) {
    g_last_error = "unknown failure";
    return TDC_INTERNAL;
  }
}

tdc_status null_argument(const char* what) {
  g_last_error = std::string("null argument: ") + what;
  return TDC_NULL_ARGUMENT;
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

tdecomp::Tournament named(const std::string& name, int size) {
  using namespace tdecomp;
  if (name == "C3") return gen_c3();
  if (name == "P7") return gen_paley7();
  if (name == "B6") return gen_b6();
  if (name == "T") return gen_critical(CriticalFamily::T, size);
  if (name == "U") return gen_critical(CriticalFamily::U, size);
  if (name == "W") return gen_critical(CriticalFamily::W, size);
  if (name == "TOTAL") return gen_total_order(size);
  throw Error(ErrorCode::BadParameters, "unknown generator '" + name + "'");
}

}  // namespace

extern "C" {

const char* tdc_version(void) { return "0.1.0"; }

const char* tdc_status_name(tdc_status status) {
  switch (status) {
    case TDC_OK: return "Ok";
    case TDC_NULL_ARGUMENT: return "NullArgument";
    case TDC_INTERNAL: return "Internal";
    default: break;
  }
  if (status > TDC_OK && status < TDC_NULL_ARGUMENT) {
    return tdecomp::error_code_name(static_cast<tdecomp::ErrorCode>(status - 1));
  }
  return "Unknown";
}

const char* tdc_last_error(void) { return g_last_error.c_str(); }

void tdc_string_free(char* s) { std::free(s); }

tdc_status tdc_parse(const char* record, tdc_tournament** out) {
  if (!record) return null_argument("record");
  if (!out) return null_argument("out");
  return guarded([&] { *out = new tdc_tournament{tdecomp::parse_record(record)}; });
}

tdc_status tdc_format(const tdc_tournament* t, char** out) {
  if (!t) return null_argument("tournament");
  if (!out) return null_argument("out");
  return guarded([&] { *out = copy_string(tdecomp::format_record(t->value)); });
}

tdc_status tdc_clone(const tdc_tournament* t, tdc_tournament** out) {
  if (!t) return null_argument("tournament");
  if (!out) return null_argument("out");
  return guarded([&] { *out = new tdc_tournament{t->value}; });
}

void tdc_tournament_free(tdc_tournament* t) { delete t; }

int tdc_size(const tdc_tournament* t) { return t ? t->value.size() : -1; }

int tdc_arc(const tdc_tournament* t, int x, int y) {
  if (!t || x < 0 || y < 0 || x >= t->value.size() || y >= t->value.size() || x == y) return -1;
  return t->value.arc(x, y) ? 1 : 0;
}

tdc_status tdc_gen_named(const char* name, int size, tdc_tournament** out) {
  if (!name) return null_argument("name");
  if (!out) return null_argument("out");
  return guarded([&] { *out = new tdc_tournament{named(name, size)}; });
}

tdc_status tdc_gen_family(const char* family, const int* component_sizes, size_t count, tdc_tournament** out) {
  if (!family) return null_argument("family");
  if (!component_sizes && count > 0) return null_argument("component_sizes");
  if (!out) return null_argument("out");
  return guarded([&] {
    tdecomp::FamilySpec spec;
    spec.family = tdecomp::parse_family(family);
    spec.component_sizes.assign(component_sizes, component_sizes + count);
    *out = new tdc_tournament{tdecomp::assemble_family(spec)};
  });
}

tdc_status tdc_gen_h_explicit(int k, int n, tdc_tournament** out) {
  if (!out) return null_argument("out");
  return guarded([&] { *out = new tdc_tournament{tdecomp::gen_h_figure3(k, n)}; });
}

tdc_status tdc_analyze(const tdc_tournament* t, tdc_report_format format, char** out) {
  if (!t) return null_argument("tournament");
  if (!out) return null_argument("out");
  return guarded([&] {
    switch (format) {
      case TDC_REPORT_TEXT: *out = copy_string(tdecomp::render_text(tdecomp::analyze(t->value))); return;
      case TDC_REPORT_JSON: *out = copy_string(tdecomp::render_json(tdecomp::analyze(t->value))); return;
      case TDC_REPORT_DOT: *out = copy_string(tdecomp::to_dot(t->value)); return;
    }
    throw tdecomp::Error(tdecomp::ErrorCode::BadParameters, "unknown report format");
  });
}

tdc_status tdc_enumerate(int n, unsigned filter, int jobs, int force, tdc_list** out) {
  if (!out) return null_argument("out");
  return guarded([&] {
    using namespace tdecomp;
    if (filter & ~7u) throw Error(ErrorCode::BadParameters, "unknown filter bits");
    TournamentFilter keep;
    if (filter != 0) {
      keep = [filter](const Tournament& t) {
        if ((filter & (TDC_FILTER_INDECOMPOSABLE | TDC_FILTER_FAMILY_T)) && !(t.size() >= 3 && is_indecomposable(t))) {
          return false;
        }
        if ((filter & TDC_FILTER_OMITS_W5) && !w5_vertices(t).empty()) return false;
        if ((filter & TDC_FILTER_FAMILY_T) && !is_family_t_member(t)) return false;
        return true;
      };
    }
    EnumerationOptions options;
    options.jobs = jobs < 1 ? 1 : jobs;
    options.force = force != 0;
    auto list = new tdc_list;
    for (auto& t : enumerate_tournaments(n, keep, options)) list->items.push_back(tdc_tournament{std::move(t)});
    *out = list;
  });
}

size_t tdc_list_size(const tdc_list* list) { return list ? list->items.size() : 0; }

const tdc_tournament* tdc_list_at(const tdc_list* list, size_t index) {
  if (!list || index >= list->items.size()) return nullptr;
  return &list->items[index];
}

void tdc_list_free(tdc_list* list) { delete list; }

tdc_status tdc_verify(tdc_theorem theorem, int n, int jobs, int force, int* passed, char** report) {
  if (!passed) return null_argument("passed");
  if (!report) return null_argument("report");
  return guarded([&] {
    using namespace tdecomp;
    EnumerationOptions options;
    options.jobs = jobs < 1 ? 1 : jobs;
    options.force = force != 0;
    VerdictReport verdict;
    switch (theorem) {
      case TDC_THEOREM_LATKA: verdict = verify_latka(n, options); break;
      case TDC_THEOREM_HIK: verdict = verify_hik(n, options); break;
      case TDC_THEOREM_MAIN: verdict = verify_main(n, options); break;
      case TDC_THEOREM_LEMMAS: verdict = verify_lemma_suite(n, options); break;
      default: throw Error(ErrorCode::BadParameters, "unknown theorem");
    }
    *passed = verdict.passed ? 1 : 0;
    *report = copy_string(render_verdict(verdict));
  });
}

}  // extern "C"
