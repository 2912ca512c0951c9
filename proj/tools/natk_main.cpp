// natk command line: a thin shell over the shared library's C interface.
// Prints the JSON report to stdout (default), or plain text / emitted
// documents with --no-json; the process exit code mirrors the report.

#include <natk/natk.h>

#include <cstdio>

int main(int argc, char** argv) {
    natk_session* session = natk_session_new();
    if (!session) {
        std::fprintf(stderr, "natk: out of memory\n");
        return 2;
    }

    natk_report* report = nullptr;
    natk_status status = natk_run(session, argc - 1, argv + 1, &report);

    if (report) {
        if (natk_report_wants_json(report)) {
            std::printf("%s\n", natk_report_json(report));
        } else if (const char* doc = natk_report_document(report)) {
            std::fputs(doc, stdout);
        } else {
            std::printf("%s\n", natk_report_text(report));
        }
        natk_report_free(report);
    } else {
        std::fprintf(stderr, "natk: %s\n", natk_session_last_error(session));
    }

    natk_session_free(session);
    return static_cast<int>(status);
}
