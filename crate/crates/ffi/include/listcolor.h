#ifndef LISTCOLOR_H
#define LISTCOLOR_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum LcError {
  LC_ERROR_OK = 0,
  /**
   * A required pointer argument was NULL.
   */
  LC_ERROR_NULL = 1,
  /**
   * Input text failed to parse.
   */
  LC_ERROR_PARSE = 2,
  /**
   * Arguments were well-formed but describe an invalid instance or request.
   */
  LC_ERROR_INVALID = 3,
  LC_ERROR_UTF8 = 4,
  /**
   * The library panicked; the handle state is unchanged.
   */
  LC_ERROR_PANIC = 5,
  /**
   * The caller's output buffer is too small.
   */
  LC_ERROR_BUFFER = 6,
} LcError;

typedef enum LcSolver {
  LC_SOLVER_KGL = 0,
  LC_SOLVER_LC = 1,
  LC_SOLVER_ELC = 2,
  LC_SOLVER_DCC = 3,
  LC_SOLVER_ORACLE = 4,
} LcSolver;

typedef enum LcStatus {
  /**
   * A coloring was found; optimality not proven.
   */
  LC_STATUS_FEASIBLE = 0,
  LC_STATUS_OPTIMAL = 1,
  /**
   * The search finished without finding a coloring.
   */
  LC_STATUS_NO_SOLUTION = 2,
  /**
   * Proven that no list coloring exists.
   */
  LC_STATUS_INFEASIBLE = 3,
  LC_STATUS_TIMEOUT = 4,
  /**
   * A greedy heuristic got stuck.
   */
  LC_STATUS_HEUR_FAIL = 5,
} LcStatus;

typedef struct LcInstance LcInstance;

typedef struct LcOutcome LcOutcome;

/**
 * Limits for one solve. Obtain defaults from [`lc_limits_default`].
 */
typedef struct LcLimits {
  /**
   * Wall-clock budget in seconds; zero or negative means unlimited.
   */
  double time_limit_s;
  /**
   * Node expansions per restart; zero means uncapped.
   */
  uint64_t iteration_cap;
  /**
   * Independent k-GL runs.
   */
  uint32_t kgl_runs;
} LcLimits;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or NULL. The pointer
 * stays valid until the next call into this library on the same thread.
 */
const char *lc_last_error_message(void);

/**
 * Library version as a static NUL-terminated string.
 */
const char *lc_version(void);

struct LcLimits lc_limits_default(void);

/**
 * Builds an instance from a list file and an optional DIMACS graph text.
 * When `dimacs` is NULL the list text must carry the edges as `e` lines.
 *
 * # Safety
 * `dimacs` is NULL or a NUL-terminated string, `lists` is a NUL-terminated
 * string and `out` is writable.
 */
enum LcError lc_instance_from_text(const char *dimacs, const char *lists, struct LcInstance **out);

/**
 * Builds an instance from arrays. `edges` holds `2 * m` zero-based vertex
 * ids. Vertex `v` has colors `colors[offsets[v] .. offsets[v + 1]]`, so
 * `offsets` holds `n + 1` entries. Colors are 1-based.
 *
 * # Safety
 * Each pointer is valid for the number of elements described above; `edges`
 * may be NULL when `m == 0`, `colors` may be NULL when `offsets[n] == 0`.
 */
enum LcError lc_instance_from_arrays(size_t n,
                                     const uint32_t *edges,
                                     size_t m,
                                     const size_t *offsets,
                                     const uint32_t *colors,
                                     struct LcInstance **out);

/**
 * # Safety
 * `inst` is NULL or a handle from this library that has not been freed.
 */
void lc_instance_free(struct LcInstance *inst);

/**
 * Vertex count, or 0 for NULL.
 *
 * # Safety
 * `inst` is NULL or a live handle.
 */
size_t lc_instance_vertex_count(const struct LcInstance *inst);

/**
 * Runs one solver. `limits` may be NULL for the defaults. Every returned
 * coloring has been checked against the instance.
 *
 * # Safety
 * `inst` is a live handle, `limits` is NULL or readable, `out` is writable.
 */
enum LcError lc_solve(const struct LcInstance *inst,
                      enum LcSolver solver,
                      const struct LcLimits *limits,
                      uint64_t seed,
                      struct LcOutcome **out);

/**
 * # Safety
 * `outcome` is NULL or a handle from [`lc_solve`] that has not been freed.
 */
void lc_outcome_free(struct LcOutcome *outcome);

/**
 * # Safety
 * `outcome` is a live handle.
 */
enum LcStatus lc_outcome_status(const struct LcOutcome *outcome);

/**
 * Distinct colors of the returned coloring, or -1 when there is none.
 * For k-GL this is the best of its runs.
 *
 * # Safety
 * `outcome` is a live handle.
 */
int64_t lc_outcome_colors(const struct LcOutcome *outcome);

/**
 * Search nodes expanded, or -1 for solvers that do not count them.
 *
 * # Safety
 * `outcome` is a live handle.
 */
int64_t lc_outcome_nodes(const struct LcOutcome *outcome);

/**
 * Wall-clock time of the solve in milliseconds.
 *
 * # Safety
 * `outcome` is a live handle.
 */
double lc_outcome_elapsed_ms(const struct LcOutcome *outcome);

/**
 * Copies the coloring into `buf`, one color per vertex (0 for uncolored).
 * Writes the vertex count to `written` when it is non-NULL, even on
 * [`LcError::Buffer`], so callers can size a retry.
 *
 * # Safety
 * `outcome` is a live handle, `buf` is writable for `len` elements (or NULL
 * when `len == 0`), and `written` is NULL or writable.
 */
enum LcError lc_outcome_coloring(const struct LcOutcome *outcome,
                                 uint32_t *buf,
                                 size_t len,
                                 size_t *written);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LISTCOLOR_H */
