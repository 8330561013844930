#include "spectralign/spectralign.h"

#include <cstring>
#include <new>
#include <string>
#include <utility>
#include <vector>

#include "core/align.hpp"
#include "core/allocator.hpp"
#include "core/codec.hpp"
#include "core/error.hpp"
#include "core/sequence.hpp"
#include "core/simulate.hpp"

namespace {

thread_local std::string g_last_error;

sa_status to_status(spectralign::ErrorKind kind) {
  using spectralign::ErrorKind;
  switch (kind) {
    case ErrorKind::InvalidArgument:
      return SA_ERR_INVALID_ARGUMENT;
    case ErrorKind::BadSequence:
      return SA_ERR_BAD_SEQUENCE;
    case ErrorKind::TooLong:
      return SA_ERR_TOO_LONG;
    case ErrorKind::PowerRange:
      return SA_ERR_POWER_RANGE;
    case ErrorKind::BadScenario:
      return SA_ERR_BAD_SCENARIO;
    case ErrorKind::Malformed:
      return SA_ERR_MALFORMED;
  }
  return SA_ERR_INTERNAL;
}

sa_status set_error(sa_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

// Runs f under the standard exception-to-status translation.
template <typename F>
sa_status guarded(F&& f) {
  try {
    return std::forward<F>(f)();
  } catch (const spectralign::Error& e) {
    return set_error(to_status(e.kind()), e.what());
  } catch (const std::exception& e) {
    return set_error(SA_ERR_INTERNAL, e.what());
  }
}

sa_status require(const void* p, const char* what) {
  if (p) return SA_OK;
  return set_error(SA_ERR_INVALID_ARGUMENT,
                   std::string(what) + " must not be null");
}

spectralign::Scoring to_scoring(const sa_scoring* scoring) {
  if (!scoring) return {};
  return {scoring->match, scoring->mismatch, scoring->gap};
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

struct sa_matrix {
  spectralign::ScoreMatrix matrix;
};

struct sa_alignment {
  spectralign::Alignment alignment;
  std::string top;
  std::string bottom;
};

struct sa_allocation {
  spectralign::AllocationResult result;
};

struct sa_scenario {
  spectralign::Scenario scenario;
};

struct sa_run {
  std::vector<spectralign::StepRecord> records;
  std::vector<std::string> sequences;  // cached pu strings, one per step
};

namespace {

sa_alignment* wrap_alignment(spectralign::Alignment alignment) {
  auto* out = new sa_alignment{std::move(alignment), {}, {}};
  out->top = out->alignment.top_string();
  out->bottom = out->alignment.bottom_string();
  return out;
}

}  // namespace

extern "C" {

const char* sa_status_name(sa_status status) {
  switch (status) {
    case SA_OK:
      return "ok";
    case SA_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case SA_ERR_BAD_SEQUENCE:
      return "bad sequence";
    case SA_ERR_TOO_LONG:
      return "too long";
    case SA_ERR_POWER_RANGE:
      return "power out of range";
    case SA_ERR_BAD_SCENARIO:
      return "bad scenario";
    case SA_ERR_MALFORMED:
      return "malformed alignment";
    case SA_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown";
}

const char* sa_last_error(void) { return g_last_error.c_str(); }

const char* sa_version(void) { return "0.1.0"; }

void sa_string_free(char* s) { delete[] s; }

sa_scoring sa_scoring_default(void) {
  const spectralign::Scoring s;
  return {s.match, s.mismatch, s.gap};
}

/* ----- alignment ----- */

sa_status sa_matrix_build(const char* seq1, const char* seq2,
                          const sa_scoring* scoring, sa_matrix** out) {
  if (auto st = require(seq1, "seq1"); st != SA_OK) return st;
  if (auto st = require(seq2, "seq2"); st != SA_OK) return st;
  if (auto st = require(out, "out"); st != SA_OK) return st;
  return guarded([&] {
    auto matrix = spectralign::build_matrix(spectralign::Sequence::parse(seq1),
                                            spectralign::Sequence::parse(seq2),
                                            to_scoring(scoring));
    *out = new sa_matrix{std::move(matrix)};
    return SA_OK;
  });
}

void sa_matrix_free(sa_matrix* matrix) { delete matrix; }

size_t sa_matrix_rows(const sa_matrix* matrix) {
  return matrix ? matrix->matrix.rows() : 0;
}

size_t sa_matrix_cols(const sa_matrix* matrix) {
  return matrix ? matrix->matrix.cols() : 0;
}

sa_status sa_matrix_cell(const sa_matrix* matrix, size_t i, size_t j,
                         int64_t* out) {
  if (auto st = require(matrix, "matrix"); st != SA_OK) return st;
  if (auto st = require(out, "out"); st != SA_OK) return st;
  if (i >= matrix->matrix.rows() || j >= matrix->matrix.cols())
    return set_error(SA_ERR_INVALID_ARGUMENT, "cell index out of range");
  *out = matrix->matrix.score_at(i, j);
  return SA_OK;
}

sa_status sa_matrix_dirs(const sa_matrix* matrix, size_t i, size_t j,
                         unsigned* out) {
  if (auto st = require(matrix, "matrix"); st != SA_OK) return st;
  if (auto st = require(out, "out"); st != SA_OK) return st;
  if (i >= matrix->matrix.rows() || j >= matrix->matrix.cols())
    return set_error(SA_ERR_INVALID_ARGUMENT, "cell index out of range");
  *out = matrix->matrix.directions_at(i, j);
  return SA_OK;
}

int64_t sa_matrix_score(const sa_matrix* matrix) {
  return matrix ? matrix->matrix.final_score() : 0;
}

sa_status sa_matrix_traceback(const sa_matrix* matrix, sa_alignment** out) {
  if (auto st = require(matrix, "matrix"); st != SA_OK) return st;
  if (auto st = require(out, "out"); st != SA_OK) return st;
  return guarded([&] {
    *out = wrap_alignment(spectralign::traceback(matrix->matrix));
    return SA_OK;
  });
}

sa_status sa_matrix_has_path(const sa_matrix* matrix, const char* top,
                             const char* bottom, int* out) {
  if (auto st = require(matrix, "matrix"); st != SA_OK) return st;
  if (auto st = require(top, "top"); st != SA_OK) return st;
  if (auto st = require(bottom, "bottom"); st != SA_OK) return st;
  if (auto st = require(out, "out"); st != SA_OK) return st;
  return guarded([&] {
    const auto alignment = spectralign::alignment_from_rows(top, bottom);
    *out = spectralign::matrix_contains_path(matrix->matrix, alignment) ? 1 : 0;
    return SA_OK;
  });
}

sa_status sa_align(const char* seq1, const char* seq2,
                   const sa_scoring* scoring, sa_alignment** out) {
  if (auto st = require(seq1, "seq1"); st != SA_OK) return st;
  if (auto st = require(seq2, "seq2"); st != SA_OK) return st;
  if (auto st = require(out, "out"); st != SA_OK) return st;
  return guarded([&] {
    auto alignment = spectralign::align(spectralign::Sequence::parse(seq1),
                                        spectralign::Sequence::parse(seq2),
                                        to_scoring(scoring));
    *out = wrap_alignment(std::move(alignment));
    return SA_OK;
  });
}

void sa_alignment_free(sa_alignment* alignment) { delete alignment; }

int64_t sa_alignment_score(const sa_alignment* alignment) {
  return alignment ? alignment->alignment.score : 0;
}

size_t sa_alignment_columns(const sa_alignment* alignment) {
  return alignment ? alignment->alignment.columns.size() : 0;
}

const char* sa_alignment_top(const sa_alignment* alignment) {
  return alignment ? alignment->top.c_str() : "";
}

const char* sa_alignment_bottom(const sa_alignment* alignment) {
  return alignment ? alignment->bottom.c_str() : "";
}

sa_status sa_rescore(const char* top, const char* bottom,
                     const sa_scoring* scoring, int64_t* out) {
  if (auto st = require(top, "top"); st != SA_OK) return st;
  if (auto st = require(bottom, "bottom"); st != SA_OK) return st;
  if (auto st = require(out, "out"); st != SA_OK) return st;
  return guarded([&] {
    *out = spectralign::alignment_score(
        spectralign::alignment_from_rows(top, bottom), to_scoring(scoring));
    return SA_OK;
  });
}

sa_status sa_brute_force_score(const char* seq1, const char* seq2,
                               const sa_scoring* scoring, int64_t* out) {
  if (auto st = require(seq1, "seq1"); st != SA_OK) return st;
  if (auto st = require(seq2, "seq2"); st != SA_OK) return st;
  if (auto st = require(out, "out"); st != SA_OK) return st;
  return guarded([&] {
    *out = spectralign::brute_force_align(spectralign::Sequence::parse(seq1),
                                          spectralign::Sequence::parse(seq2),
                                          to_scoring(scoring));
    return SA_OK;
  });
}

/* ----- power encoding ----- */

sa_status sa_encode_power(double power, char* out_symbol) {
  if (auto st = require(out_symbol, "out_symbol"); st != SA_OK) return st;
  return guarded([&] {
    *out_symbol = spectralign::to_char(spectralign::encode_power(power));
    return SA_OK;
  });
}

sa_status sa_encode_powers(const double* powers, size_t count, char* out,
                           size_t capacity) {
  if (auto st = require(powers, "powers"); st != SA_OK) return st;
  if (auto st = require(out, "out"); st != SA_OK) return st;
  if (capacity < count + 1)
    return set_error(SA_ERR_INVALID_ARGUMENT,
                     "output buffer smaller than count + 1");
  return guarded([&] {
    const auto seq =
        spectralign::encode_snapshot(std::vector<double>(powers, powers + count));
    const std::string text = seq.str();
    std::memcpy(out, text.c_str(), text.size() + 1);
    return SA_OK;
  });
}

sa_status sa_encode_powers_csv(const char* csv, char** out) {
  if (auto st = require(csv, "csv"); st != SA_OK) return st;
  if (auto st = require(out, "out"); st != SA_OK) return st;
  return guarded([&] {
    const auto seq =
        spectralign::encode_snapshot(spectralign::parse_power_csv(csv));
    *out = copy_string(seq.str());
    return SA_OK;
  });
}

sa_status sa_sequence_canonical(const char* text, char** out) {
  if (auto st = require(text, "text"); st != SA_OK) return st;
  if (auto st = require(out, "out"); st != SA_OK) return st;
  return guarded([&] {
    *out = copy_string(spectralign::Sequence::parse(text).str());
    return SA_OK;
  });
}

/* ----- allocation ----- */

sa_status sa_allocate(const char* pu, const char* su, const sa_scoring* scoring,
                      sa_allocation** out) {
  if (auto st = require(pu, "pu"); st != SA_OK) return st;
  if (auto st = require(su, "su"); st != SA_OK) return st;
  if (auto st = require(out, "out"); st != SA_OK) return st;
  return guarded([&] {
    auto result = spectralign::allocate(spectralign::Sequence::parse(pu),
                                        spectralign::Sequence::parse(su),
                                        to_scoring(scoring));
    *out = new sa_allocation{std::move(result)};
    return SA_OK;
  });
}

void sa_allocation_free(sa_allocation* allocation) { delete allocation; }

size_t sa_allocation_users(const sa_allocation* allocation) {
  return allocation ? allocation->result.assignments.size() : 0;
}

sa_status sa_allocation_channel(const sa_allocation* allocation, size_t user,
                                int* out_channel) {
  if (auto st = require(allocation, "allocation"); st != SA_OK) return st;
  if (auto st = require(out_channel, "out_channel"); st != SA_OK) return st;
  if (user >= allocation->result.assignments.size())
    return set_error(SA_ERR_INVALID_ARGUMENT, "user index out of range");
  *out_channel = allocation->result.assignments[user].value_or(0);
  return SA_OK;
}

int64_t sa_allocation_score(const sa_allocation* allocation) {
  return allocation ? allocation->result.score : 0;
}

size_t sa_allocation_idle_count(const sa_allocation* allocation) {
  return allocation ? allocation->result.idle.size() : 0;
}

sa_status sa_allocation_idle(const sa_allocation* allocation, size_t k,
                             int* out_channel) {
  if (auto st = require(allocation, "allocation"); st != SA_OK) return st;
  if (auto st = require(out_channel, "out_channel"); st != SA_OK) return st;
  if (k >= allocation->result.idle.size())
    return set_error(SA_ERR_INVALID_ARGUMENT, "idle index out of range");
  *out_channel = allocation->result.idle[k];
  return SA_OK;
}

sa_status sa_allocation_diff(const sa_allocation* prev,
                             const sa_allocation* next,
                             sa_transition* transitions, sa_realloc_diff* out) {
  if (auto st = require(prev, "prev"); st != SA_OK) return st;
  if (auto st = require(next, "next"); st != SA_OK) return st;
  if (auto st = require(out, "out"); st != SA_OK) return st;
  return guarded([&] {
    const auto d = spectralign::diff(prev->result, next->result);
    out->stable = d.stable;
    out->moved = d.moved;
    out->evicted = d.evicted;
    out->admitted = d.admitted;
    if (transitions) {
      for (size_t i = 0; i < d.transitions.size(); ++i)
        transitions[i] = static_cast<sa_transition>(d.transitions[i]);
    }
    return SA_OK;
  });
}

/* ----- simulation ----- */

sa_status sa_scenario_parse(const char* text, sa_scenario** out) {
  if (auto st = require(text, "text"); st != SA_OK) return st;
  if (auto st = require(out, "out"); st != SA_OK) return st;
  return guarded([&] {
    *out = new sa_scenario{spectralign::parse_scenario(text)};
    return SA_OK;
  });
}

void sa_scenario_free(sa_scenario* scenario) { delete scenario; }

size_t sa_scenario_steps(const sa_scenario* scenario) {
  return scenario ? scenario->scenario.steps.size() : 0;
}

const char* sa_scenario_name(const sa_scenario* scenario) {
  return scenario ? scenario->scenario.name.c_str() : "";
}

sa_status sa_scenario_run(const sa_scenario* scenario, sa_run** out) {
  if (auto st = require(scenario, "scenario"); st != SA_OK) return st;
  if (auto st = require(out, "out"); st != SA_OK) return st;
  return guarded([&] {
    auto records = spectralign::run(scenario->scenario);
    auto* run = new sa_run{std::move(records), {}};
    run->sequences.reserve(run->records.size());
    for (const auto& r : run->records)
      run->sequences.push_back(r.pu_sequence.str());
    *out = run;
    return SA_OK;
  });
}

void sa_run_free(sa_run* run) { delete run; }

size_t sa_run_steps(const sa_run* run) { return run ? run->records.size() : 0; }

sa_status sa_run_record(const sa_run* run, size_t step, sa_step_record* out) {
  if (auto st = require(run, "run"); st != SA_OK) return st;
  if (auto st = require(out, "out"); st != SA_OK) return st;
  if (step >= run->records.size())
    return set_error(SA_ERR_INVALID_ARGUMENT, "step index out of range");
  const auto& r = run->records[step];
  out->step = r.step;
  out->idle_count = r.idle_count;
  out->allocated_count = r.allocated_count;
  out->waiting_count = r.waiting_count;
  out->moved = r.moved;
  out->evicted = r.evicted;
  out->admitted = r.admitted;
  out->alignment_score = r.alignment_score;
  return SA_OK;
}

const char* sa_run_step_sequence(const sa_run* run, size_t step) {
  if (!run || step >= run->sequences.size()) return "";
  return run->sequences[step].c_str();
}

sa_status sa_run_channel(const sa_run* run, size_t step, size_t user,
                         int* out_channel) {
  if (auto st = require(run, "run"); st != SA_OK) return st;
  if (auto st = require(out_channel, "out_channel"); st != SA_OK) return st;
  if (step >= run->records.size())
    return set_error(SA_ERR_INVALID_ARGUMENT, "step index out of range");
  const auto& assignments = run->records[step].assignments;
  if (user >= assignments.size())
    return set_error(SA_ERR_INVALID_ARGUMENT, "user index out of range");
  *out_channel = assignments[user].value_or(0);
  return SA_OK;
}

sa_status sa_run_emit_csv(const sa_run* run, char** out) {
  if (auto st = require(run, "run"); st != SA_OK) return st;
  if (auto st = require(out, "out"); st != SA_OK) return st;
  return guarded([&] {
    *out = copy_string(spectralign::emit_csv(run->records));
    return SA_OK;
  });
}

sa_status sa_run_emit_text(const sa_run* run, char** out) {
  if (auto st = require(run, "run"); st != SA_OK) return st;
  if (auto st = require(out, "out"); st != SA_OK) return st;
  return guarded([&] {
    *out = copy_string(spectralign::emit_text(run->records));
    return SA_OK;
  });
}

} /* extern "C" */
