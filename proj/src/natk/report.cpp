#include "natk/report.hpp"

#include <sstream>

namespace natk {

Json witness_json(const Witness& w) {
    Json j = Json::object();
    j["label"] = w.label;
    j["elements"] = w.elements;
    return j;
}

Json Report::to_json() const {
    Json j = Json::object();
    j["command"] = command;
    j["ok"] = ok;
    Json ws = Json::array();
    for (const auto& w : witnesses) ws.push_back(witness_json(w));
    j["witnesses"] = ws;
    j["details"] = details;
    j["elapsed_ms"] = elapsed_ms;
    return j;
}

std::string Report::render_text() const {
    std::ostringstream out;
    out << command << ": " << (ok ? "ok" : "FAIL");
    for (const auto& w : witnesses) {
        out << "\n  " << w.label;
        if (!w.elements.empty()) {
            out << " (";
            for (std::size_t i = 0; i < w.elements.size(); ++i) {
                if (i) out << ", ";
                out << w.elements[i];
            }
            out << ")";
        }
    }
    if (!details.empty()) out << "\n  " << details.dump();
    return out.str();
}

}  // namespace natk
