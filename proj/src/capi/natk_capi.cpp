#include "natk/natk.h"

#include <new>
#include <string>
#include <vector>

#include "natk/commands.hpp"

struct natk_session {
    natk::Session impl;
    std::string last_error;
};

struct natk_report {
    std::string json;
    std::string text;
    std::string document;
    bool has_document = false;
    bool wants_json = true;
    bool ok = false;
    int exit_code = 2;
};

extern "C" {

natk_session* natk_session_new(void) { return new (std::nothrow) natk_session(); }

void natk_session_free(natk_session* session) { delete session; }

int natk_session_load(natk_session* session, const char* path) {
    if (!session || !path) return -1;
    try {
        session->last_error.clear();
        return static_cast<int>(session->impl.load_all(path));
    } catch (const std::exception& e) {
        session->last_error = e.what();
        return -1;
    }
}

const char* natk_session_last_error(const natk_session* session) {
    return session ? session->last_error.c_str() : "null session";
}

natk_status natk_run(natk_session* session, int argc, const char* const* argv,
                     natk_report** out_report) {
    if (out_report) *out_report = nullptr;
    if (!session) return NATK_ERROR;
    session->last_error.clear();

    std::vector<std::string> args;
    args.reserve(static_cast<std::size_t>(argc > 0 ? argc : 0));
    for (int i = 0; i < argc; ++i) args.emplace_back(argv[i] ? argv[i] : "");

    natk::CommandResult result = natk::run_command(args, session->impl);

    auto* rep = new (std::nothrow) natk_report();
    if (!rep) {
        session->last_error = "allocation failure";
        return NATK_ERROR;
    }
    rep->json = result.report.to_json().dump();
    rep->text = result.report.render_text();
    if (result.document) {
        rep->document = *result.document;
        rep->has_document = true;
    }
    rep->wants_json = result.options.json;
    rep->ok = result.report.ok;
    rep->exit_code = result.report.exit_code;
    if (!result.report.ok) session->last_error = result.report.render_text();

    const int code = rep->exit_code;
    if (out_report)
        *out_report = rep;
    else
        delete rep;

    switch (code) {
        case 0:
            return NATK_OK;
        case 1:
            return NATK_PROPERTY_FAILED;
        default:
            return NATK_ERROR;
    }
}

int natk_report_ok(const natk_report* report) { return report && report->ok ? 1 : 0; }

int natk_report_exit_code(const natk_report* report) { return report ? report->exit_code : 2; }

const char* natk_report_json(const natk_report* report) {
    return report ? report->json.c_str() : "";
}

const char* natk_report_text(const natk_report* report) {
    return report ? report->text.c_str() : "";
}

const char* natk_report_document(const natk_report* report) {
    return report && report->has_document ? report->document.c_str() : nullptr;
}

int natk_report_wants_json(const natk_report* report) {
    return report && report->wants_json ? 1 : 0;
}

void natk_report_free(natk_report* report) { delete report; }

const char* natk_version(void) { return "1.0.0"; }

}  // extern "C"
