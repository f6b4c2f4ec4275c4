/* parttree — C interface to the partition-tree library.
 *
 * All counts are exact arbitrary-precision integers and are therefore
 * returned as malloc'd decimal strings; release them with
 * parttree_str_free().  Every fallible call returns PARTTREE_OK (0) or a
 * negative status code.  Handles are not synchronized: use one handle per
 * thread, or lock externally.
 */
#ifndef PARTTREE_H
#define PARTTREE_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define PARTTREE_OK 0        /* success */
#define PARTTREE_EINVAL (-1) /* invalid argument (n, m, level, or null out) */
#define PARTTREE_ENOMEM (-2) /* allocation failure */
#define PARTTREE_ENOSPACE (-3) /* caller buffer too small; row not consumed */
#define PARTTREE_EVERIFY (-4)  /* self-check found a mismatch */
#define PARTTREE_EINTERNAL (-5) /* unexpected internal error */

/* Library version as a static string, e.g. "1.0.0". */
const char* parttree_version(void);

/* Static human-readable name for a status code. */
const char* parttree_status_str(int status);

/* Releases a string returned by any parttree call. NULL is ignored. */
void parttree_str_free(char* s);

/* Number of partitions of n into exactly m parts, via the tree formula.
 * Requires 1 <= m <= n. */
int parttree_count_parts(uint64_t n, uint64_t m, char** out);

/* Number of partitions of n over all part counts, via the tree formula.
 * Requires n >= 1. */
int parttree_count_all(uint64_t n, char** out);

/* Number of tree nodes at the given level for the (n, m) tree.  Requires
 * that the tree exists (three or more levels) and 1 <= level < top. */
int parttree_node_count(uint64_t n, uint64_t m, uint64_t level, char** out);

/* Independent dynamic-programming counts, same contracts as above. */
int parttree_dp_count_parts(uint64_t n, uint64_t m, char** out);
int parttree_dp_count_all(uint64_t n, char** out);

/* Streaming cursor over partition rows in canonical order. */
typedef struct parttree_enum parttree_enum;

/* Cursor over the partitions of n into exactly m parts. */
int parttree_enum_new(uint64_t n, uint64_t m, parttree_enum** out);

/* Cursor over all partitions of n, ordered by part count then canonically. */
int parttree_enum_new_all(uint64_t n, parttree_enum** out);

/* Copies the next row into parts[0..cap) and stores its length in *len.
 * Returns 1 on a row, 0 at end of stream, or a negative status.  If cap is
 * too small the call returns PARTTREE_ENOSPACE with *len set to the
 * required length and the row is redelivered on the next call. */
int parttree_enum_next(parttree_enum* e, uint64_t* parts, size_t cap,
                       size_t* len);

void parttree_enum_free(parttree_enum* e);

/* Cross-checks tree counting, enumeration, and node counts against the
 * dynamic-programming recurrence for all n up to n_max.  Writes the
 * per-check report to *report (malloc'd).  Returns PARTTREE_OK when every
 * check passes and PARTTREE_EVERIFY on a mismatch; the report is written
 * in both cases. */
int parttree_verify(uint64_t n_max, char** report);

#ifdef __cplusplus
}
#endif

#endif /* PARTTREE_H */
