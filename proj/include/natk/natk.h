/* natk — finite near-algebra toolkit, public C interface.
 *
 * The library validates, enumerates and cross-checks finite monoids, abelian
 * groups, near-rings, monoid modules and their quasi-kernel structure. All
 * functionality is reachable through a session handle plus the command
 * grammar of the natk CLI; results come back as report handles carrying a
 * JSON document and an exit code.
 *
 * Exit code convention (mirrored by natk_status):
 *   0  the checked property holds / the command succeeded
 *   1  the property fails; the report carries witnesses
 *   2  input or usage error
 */

#ifndef NATK_H
#define NATK_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum natk_status {
    NATK_OK = 0,
    NATK_PROPERTY_FAILED = 1,
    NATK_ERROR = 2
} natk_status;

typedef struct natk_session natk_session; /* document cache + lazily validated structures */
typedef struct natk_report natk_report;   /* one command's outcome */

/* Sessions ---------------------------------------------------------------- */

natk_session* natk_session_new(void);
void natk_session_free(natk_session* session);

/* Parses and validates every block of a .nat document; returns the number of
 * blocks, or -1 on failure (see natk_session_last_error). Loaded documents
 * stay cached for later commands on the same session. */
int natk_session_load(natk_session* session, const char* path);

/* Message for the most recent failing call on this session; empty string when
 * the last call succeeded. The pointer stays valid until the next call. */
const char* natk_session_last_error(const natk_session* session);

/* Commands ---------------------------------------------------------------- */

/* Runs one command (argv without the program name), e.g.
 *   {"check", "scalar-group", "fixtures/z9.nat:M"}
 * On return *out_report (if non-NULL) owns the outcome, even for failed
 * commands; free it with natk_report_free. The return value equals the
 * report's exit code. */
natk_status natk_run(natk_session* session, int argc, const char* const* argv,
                     natk_report** out_report);

/* Reports ------------------------------------------------------------------ */

int natk_report_ok(const natk_report* report);
int natk_report_exit_code(const natk_report* report);

/* JSON object with exactly the keys {command, ok, witnesses, details,
 * elapsed_ms}; owned by the report. */
const char* natk_report_json(const natk_report* report);

/* Human-readable one-liner (plus witnesses); owned by the report. */
const char* natk_report_text(const natk_report* report);

/* Canonical .nat text produced by emitting commands (product, quotient,
 * enumerate) when no output file was given; NULL otherwise. */
const char* natk_report_document(const natk_report* report);

/* Whether the command asked for JSON output (--json, the default) rather than
 * plain text (--no-json). */
int natk_report_wants_json(const natk_report* report);

void natk_report_free(natk_report* report);

const char* natk_version(void);

#ifdef __cplusplus
}
#endif

#endif /* NATK_H */
