/*
 * spectralign - channel allocation for cognitive-radio networks via global
 * sequence alignment.
 *
 * Channel occupancy is written as a four-letter sequence (A idle, C/G/T
 * increasingly busy), the secondary-user demand as another, and the two are
 * globally aligned with a match/mismatch/linear-gap scheme. Columns that
 * pair an idle channel with a demand symbol become channel assignments.
 *
 * Conventions:
 *   - Functions returning sa_status report SA_OK (0) on success. On
 *     failure a human-readable message is available from sa_last_error()
 *     until the next failing call on the same thread.
 *   - Objects returned through sa_*_new/parse/build out-parameters are
 *     owned by the caller and released with the matching sa_*_free.
 *     Handles are immutable once created and safe to share across threads.
 *   - const char* returns point into the handle and stay valid until it is
 *     freed. char** out-parameters are heap copies; release them with
 *     sa_string_free.
 *   - Sequences are strings over ACGT (case-insensitive on input); gapped
 *     alignment rows additionally use '-'.
 */

#ifndef SPECTRALIGN_H
#define SPECTRALIGN_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(SPECTRALIGN_BUILD)
#define SA_API __declspec(dllexport)
#else
#define SA_API __declspec(dllimport)
#endif
#else
#define SA_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sa_status {
  SA_OK = 0,
  SA_ERR_INVALID_ARGUMENT, /* null pointer, bad index, user-count mismatch */
  SA_ERR_BAD_SEQUENCE,     /* character outside ACGT, or empty where required */
  SA_ERR_TOO_LONG,         /* sequence beyond the 4096 guard (8 for the oracle) */
  SA_ERR_POWER_RANGE,      /* power outside [0, 4] */
  SA_ERR_BAD_SCENARIO,     /* scenario text rejected; message carries the line */
  SA_ERR_MALFORMED,        /* malformed alignment rows */
  SA_ERR_INTERNAL
} sa_status;

SA_API const char* sa_status_name(sa_status status);

/* Message for the most recent failure on this thread ("" if none yet). */
SA_API const char* sa_last_error(void);

SA_API const char* sa_version(void);

SA_API void sa_string_free(char* s);

/* ------------------------------------------------------------------ */
/* Scoring                                                            */
/* ------------------------------------------------------------------ */

typedef struct sa_scoring {
  int64_t match;
  int64_t mismatch;
  int64_t gap;
} sa_scoring;

/* +5 / -3 / -4 */
SA_API sa_scoring sa_scoring_default(void);

/* ------------------------------------------------------------------ */
/* Global alignment                                                   */
/* ------------------------------------------------------------------ */

typedef struct sa_matrix sa_matrix;
typedef struct sa_alignment sa_alignment;

/* Direction bits recorded per cell of the score table. */
#define SA_DIR_DIAG 1u
#define SA_DIR_UP 2u
#define SA_DIR_LEFT 4u

/* Builds the filled (n+1) x (m+1) score table for seq1 (columns) against
 * seq2 (rows). scoring may be NULL for the defaults. */
SA_API sa_status sa_matrix_build(const char* seq1, const char* seq2,
                                 const sa_scoring* scoring, sa_matrix** out);
SA_API void sa_matrix_free(sa_matrix* matrix);

SA_API size_t sa_matrix_rows(const sa_matrix* matrix);
SA_API size_t sa_matrix_cols(const sa_matrix* matrix);
SA_API sa_status sa_matrix_cell(const sa_matrix* matrix, size_t i, size_t j,
                                int64_t* out);
SA_API sa_status sa_matrix_dirs(const sa_matrix* matrix, size_t i, size_t j,
                                unsigned* out);

/* Optimal global alignment score (the bottom-right cell). */
SA_API int64_t sa_matrix_score(const sa_matrix* matrix);

/* One optimal alignment, ties resolved Diagonal > Up > Left. */
SA_API sa_status sa_matrix_traceback(const sa_matrix* matrix,
                                     sa_alignment** out);

/* Sets *out to 1 when the gapped rows describe an alignment of the
 * matrix's sequences that follows stored pointers throughout, i.e. one of
 * the optimal alignments; 0 otherwise. */
SA_API sa_status sa_matrix_has_path(const sa_matrix* matrix, const char* top,
                                    const char* bottom, int* out);

/* sa_matrix_build + sa_matrix_traceback in one call. */
SA_API sa_status sa_align(const char* seq1, const char* seq2,
                          const sa_scoring* scoring, sa_alignment** out);
SA_API void sa_alignment_free(sa_alignment* alignment);

SA_API int64_t sa_alignment_score(const sa_alignment* alignment);
SA_API size_t sa_alignment_columns(const sa_alignment* alignment);
/* Gapped rows, e.g. "GAATTCAGTTA" over "GGA-TC-G--A". */
SA_API const char* sa_alignment_top(const sa_alignment* alignment);
SA_API const char* sa_alignment_bottom(const sa_alignment* alignment);

/* Column-wise rescoring of two gapped rows, independent of the table. */
SA_API sa_status sa_rescore(const char* top, const char* bottom,
                            const sa_scoring* scoring, int64_t* out);

/* Exhaustive-enumeration oracle; both sequences capped at length 8. */
SA_API sa_status sa_brute_force_score(const char* seq1, const char* seq2,
                                      const sa_scoring* scoring, int64_t* out);

/* ------------------------------------------------------------------ */
/* Power encoding                                                     */
/* ------------------------------------------------------------------ */

/* Maps a power on the 0-4 scale to its band symbol:
 * [0,1] -> 'A', (1,2] -> 'C', (2,3] -> 'G', (3,4] -> 'T'. */
SA_API sa_status sa_encode_power(double power, char* out_symbol);

/* Encodes one power per channel; out must hold count + 1 bytes. */
SA_API sa_status sa_encode_powers(const double* powers, size_t count,
                                  char* out, size_t capacity);

/* Parses "0.5,2.3,1.0" and encodes it; free *out with sa_string_free. */
SA_API sa_status sa_encode_powers_csv(const char* csv, char** out);

/* Validates a sequence string and returns its uppercase canonical form;
 * free *out with sa_string_free. */
SA_API sa_status sa_sequence_canonical(const char* text, char** out);

/* ------------------------------------------------------------------ */
/* Channel allocation                                                 */
/* ------------------------------------------------------------------ */

typedef struct sa_allocation sa_allocation;

typedef enum sa_transition {
  SA_TRANSITION_STABLE = 0,
  SA_TRANSITION_MOVED,
  SA_TRANSITION_EVICTED,
  SA_TRANSITION_ADMITTED,
  SA_TRANSITION_STILL_WAITING
} sa_transition;

typedef struct sa_realloc_diff {
  int stable;
  int moved;
  int evicted;
  int admitted;
} sa_realloc_diff;

/* Aligns the spectrum sequence pu against the demand sequence su and
 * derives per-user assignments. Both sequences must be non-empty. */
SA_API sa_status sa_allocate(const char* pu, const char* su,
                             const sa_scoring* scoring, sa_allocation** out);
SA_API void sa_allocation_free(sa_allocation* allocation);

/* Number of demand-side users (the length of su). */
SA_API size_t sa_allocation_users(const sa_allocation* allocation);
/* 1-based channel for the given user, or 0 while it waits. */
SA_API sa_status sa_allocation_channel(const sa_allocation* allocation,
                                       size_t user, int* out_channel);
SA_API int64_t sa_allocation_score(const sa_allocation* allocation);
SA_API size_t sa_allocation_idle_count(const sa_allocation* allocation);
/* k-th idle channel number, in increasing order. */
SA_API sa_status sa_allocation_idle(const sa_allocation* allocation, size_t k,
                                    int* out_channel);

/* Churn between two allocations over the same user count. transitions may
 * be NULL; otherwise it receives one entry per user. */
SA_API sa_status sa_allocation_diff(const sa_allocation* prev,
                                    const sa_allocation* next,
                                    sa_transition* transitions,
                                    sa_realloc_diff* out);

/* ------------------------------------------------------------------ */
/* Scenario simulation                                                */
/* ------------------------------------------------------------------ */

typedef struct sa_scenario sa_scenario;
typedef struct sa_run sa_run;

typedef struct sa_step_record {
  size_t step; /* 0-based */
  size_t idle_count;
  size_t allocated_count;
  size_t waiting_count;
  int moved;
  int evicted;
  int admitted;
  int64_t alignment_score;
} sa_step_record;

/* Parses scenario text (see the scenario file format in the README). */
SA_API sa_status sa_scenario_parse(const char* text, sa_scenario** out);
SA_API void sa_scenario_free(sa_scenario* scenario);

SA_API size_t sa_scenario_steps(const sa_scenario* scenario);
SA_API const char* sa_scenario_name(const sa_scenario* scenario);

/* Replays every step, diffing each allocation against the previous one. */
SA_API sa_status sa_scenario_run(const sa_scenario* scenario, sa_run** out);
SA_API void sa_run_free(sa_run* run);

SA_API size_t sa_run_steps(const sa_run* run);
SA_API sa_status sa_run_record(const sa_run* run, size_t step,
                               sa_step_record* out);
/* Post-encoding spectrum sequence of the given step. */
SA_API const char* sa_run_step_sequence(const sa_run* run, size_t step);
/* 1-based channel held by the given user at the given step, 0 if waiting. */
SA_API sa_status sa_run_channel(const sa_run* run, size_t step, size_t user,
                                int* out_channel);

/* Renders the whole run; free *out with sa_string_free. */
SA_API sa_status sa_run_emit_csv(const sa_run* run, char** out);
SA_API sa_status sa_run_emit_text(const sa_run* run, char** out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* SPECTRALIGN_H */
