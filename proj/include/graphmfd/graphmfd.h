/* Public C interface of the graphmfd shared library.
 *
 * The library computes the combinatorial invariants controlling Heegaard
 * stabilization over graph manifolds decorated as multigraphs of Seifert
 * pieces: minimal separating modifications of the torus system, the
 * amalgamation genus under both boundary partitions, the genus of a
 * splitting in active position, the stabilization bound, and the tube
 * budget that converts a splitting into an amalgamation.
 *
 * All objects are opaque handles. Functions return GM_OK on success; on
 * failure *error_message (when provided) receives a malloc'd description
 * that must be released with gm_string_free. Every returned object must be
 * freed with its matching *_free function. Handles are immutable after
 * creation and may be shared across threads.
 */

#ifndef GRAPHMFD_GRAPHMFD_H
#define GRAPHMFD_GRAPHMFD_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gm_status {
  GM_OK = 0,
  GM_ERROR_PARSE = 1,       /* malformed manifest text */
  GM_ERROR_INVALID = 2,     /* violated invariant or precondition */
  GM_ERROR_UNSUPPORTED = 3, /* instance outside the exact envelope */
  GM_ERROR_INTERNAL = 4     /* cross-check failure (a bug) */
} gm_status;

typedef struct gm_manifold gm_manifold;
typedef struct gm_report gm_report;

const char* gm_version(void);

/* ----- manifolds ----- */

/* Parses and validates a JSON manifest (vertices, edges, optional
 * profile). text need not be NUL-terminated; length says how many bytes
 * to read. */
gm_status gm_manifold_parse(const char* text, size_t length,
                            gm_manifold** out, char** error_message);

/* Builders for the two bundled example families. */
gm_status gm_manifold_small_genus_family(long m, gm_manifold** out,
                                         char** error_message);
gm_status gm_manifold_large_genus_family(long p, long q, long chi_f,
                                         long base_genus, long fiber_count,
                                         gm_manifold** out,
                                         char** error_message);

long gm_manifold_vertex_count(const gm_manifold* manifold);
long gm_manifold_edge_count(const gm_manifold* manifold);
int gm_manifold_has_profile(const gm_manifold* manifold);

/* Canonical manifest serialization; free with gm_string_free. */
char* gm_manifold_to_json(const gm_manifold* manifold);

void gm_manifold_free(gm_manifold* manifold);

/* ----- reports -----
 *
 * Each runner mirrors one CLI subcommand. with_oracle != 0 additionally
 * runs brute-force cross-checks; a divergence is recorded in the report
 * rather than failing the call. bound/check require a manifest that
 * carries a profile block. */

gm_status gm_report_genus(const gm_manifold* manifold, int with_oracle,
                          gm_report** out, char** error_message);
gm_status gm_report_modify(const gm_manifold* manifold, int with_oracle,
                           gm_report** out, char** error_message);
gm_status gm_report_bound(const gm_manifold* manifold, int with_oracle,
                          gm_report** out, char** error_message);
gm_status gm_report_check(const gm_manifold* manifold, int routed,
                          int teleport, int with_oracle, gm_report** out,
                          char** error_message);
gm_status gm_report_small_genus_family(long m, int with_oracle,
                                       gm_report** out, char** error_message);
gm_status gm_report_large_genus_family(long p, long q, long chi_f,
                                       long base_genus, long fiber_count,
                                       int with_oracle, gm_report** out,
                                       char** error_message);

/* Renderings are deterministic for identical inputs and flags. The
 * returned pointers remain owned by the report. */
const char* gm_report_text(const gm_report* report);
const char* gm_report_json(const gm_report* report);

size_t gm_report_warning_count(const gm_report* report);
const char* gm_report_warning_code(const gm_report* report, size_t index);

/* 1 feasible, 0 infeasible, -1 when the report has no budget result. */
int gm_report_feasible(const gm_report* report);
/* 1 ok, 0 diverged, -1 when no oracle was requested. */
int gm_report_oracle_ok(const gm_report* report);

void gm_report_free(gm_report* report);

void gm_string_free(char* text);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* GRAPHMFD_GRAPHMFD_H */
