/*
 * pexeq — a toolkit for purely exponential Diophantine equations
 *         a^x + b^y = c^z.
 *
 * C API of the shared library. All big integers cross this boundary as
 * decimal strings; results are NUL-terminated JSON/JSONL documents or opaque
 * handles with accessors. Every function returns a pexeq_status; on any
 * failure pexeq_last_error() describes the problem for the calling thread.
 */

#ifndef PEXEQ_H
#define PEXEQ_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pexeq_status {
    PEXEQ_OK = 0,
    PEXEQ_INVALID_ARGUMENT = 1, /* bad bounds, non-coprime bases, parse errors */
    PEXEQ_VERIFY_FAILED = 2,    /* an assertion or verification step failed */
    PEXEQ_INTERNAL_ERROR = 3
} pexeq_status;

const char* pexeq_version(void);

/* Message for the last failing call on this thread; empty string if none. */
const char* pexeq_last_error(void);

/* Releases any string returned through an out-parameter below. */
void pexeq_string_free(char* s);

/*
 * Enumerates all (x, y, z) with a^x + b^y = c^z and c^z <= height.
 * height accepts a decimal value, "B^K", or "c^K" (resolved against c).
 * *out receives JSONL rows {"x":..,"y":..,"z":..,"value":".."} sorted by
 * (z, x, y).
 */
pexeq_status pexeq_solve(const char* a, const char* b, const char* c,
                         const char* height, char** out);

/* Same search, but *out receives a single row {"count":N}. */
pexeq_status pexeq_count(const char* a, const char* b, const char* c,
                         const char* height, char** out);

/*
 * Verifies that every member of the known multi-solution set (twelve
 * sporadic triples plus the family (2, 2^r-1, 2^r+1) for r = 2 and
 * 4 <= r <= r_max) has at least two solutions. height is a bound string as
 * above or "auto" for max(c^3, 10^8) with automatic doubling. *out receives
 * one JSONL row per verified entry, in the scan row schema.
 * Returns PEXEQ_VERIFY_FAILED if any member cannot be verified.
 */
pexeq_status pexeq_exceptional_verify(unsigned long r_max, const char* height,
                                      char** out);

/*
 * Exhaustive search for the system a^2 + b = c^z, a + b^2 = c^Z with the
 * given base c, a <= a_max, z <= z_max. *out receives JSONL rows
 * {"a":"..","b":"..","c":"..","z":..,"Z":..} sorted by (c^z, a).
 */
pexeq_status pexeq_system_search(const char* c, const char* a_max,
                                 unsigned long z_max, char** out);

/*
 * Runs the full case-analysis pipeline for the system above and cross-checks
 * it against the exhaustive search for every base c <= oracle_c_max.
 * *out receives a JSON certificate: the two solutions, the search cutoff,
 * and one machine-checkable trace per case.
 */
pexeq_status pexeq_certify(unsigned long r_scan, unsigned long oracle_c_max,
                           char** out);

/* ----------------------------------------------------------------------- */
/* Census scans: opaque report handles.                                    */
/* ----------------------------------------------------------------------- */

typedef struct pexeq_report pexeq_report;

/*
 * Census of all pairwise-coprime (a, b, c) within the bounds: a row is kept
 * iff the triple has at least two solutions below the height bound.
 * exclude_perfect_powers skips bases m^k (k >= 2) when nonzero.
 */
pexeq_status pexeq_scan(unsigned long a_max, unsigned long b_max,
                        unsigned long c_max, const char* height,
                        int exclude_perfect_powers, unsigned workers,
                        pexeq_report** out);

/* Same census restricted to c in [c_lo, c_hi]. */
pexeq_status pexeq_scan_shard(unsigned long a_max, unsigned long b_max,
                              unsigned long c_max, const char* height,
                              int exclude_perfect_powers, unsigned workers,
                              unsigned long c_lo, unsigned long c_hi,
                              pexeq_report** out);

/* Sorted, deduplicated union of disjoint shards of one configuration. */
pexeq_status pexeq_report_merge(const pexeq_report* const* parts, size_t n_parts,
                                pexeq_report** out);

size_t pexeq_report_row_count(const pexeq_report* report);
size_t pexeq_report_finding_count(const pexeq_report* report);

/* FNV-1a 64 over the canonical JSONL rows; stable across worker counts. */
uint64_t pexeq_report_checksum(const pexeq_report* report);

/* One JSONL row per line / TSV with a header line / sidecar metadata JSON. */
pexeq_status pexeq_report_jsonl(const pexeq_report* report, char** out);
pexeq_status pexeq_report_tsv(const pexeq_report* report, char** out);
pexeq_status pexeq_report_metadata_json(const pexeq_report* report, char** out);

void pexeq_report_free(pexeq_report* report);

#ifdef __cplusplus
}
#endif

#endif /* PEXEQ_H */
