#pragma once

#include <json.hpp>

#include "natk/common.hpp"

namespace natk {

using Json = nlohmann::ordered_json;

/// Machine-readable outcome of one command. The JSON rendering carries
/// exactly the keys {command, ok, witnesses, details, elapsed_ms}.
struct Report {
    std::string command;
    bool ok = true;
    std::vector<Witness> witnesses;
    Json details = Json::object();
    double elapsed_ms = 0.0;
    int exit_code = 0;  // 0 holds, 1 fails, 2 input/usage error

    Json to_json() const;
    std::string render_text() const;
};

Json witness_json(const Witness& w);

}  // namespace natk
