#include "cuttree/report.hpp"

#include <ostream>

#include <json.hpp>

namespace cuttree {

std::string_view status_name(Status s) {
    switch (s) {
        case Status::pass: return "PASS";
        case Status::fail: return "FAIL";
        case Status::vacuous: return "VACUOUS";
        case Status::skipped: return "SKIPPED";
    }
    return "?";
}

bool Report::passed() const { return failures() == 0; }

std::size_t Report::failures() const {
    std::size_t k = 0;
    for (const auto& f : findings) k += f.status == Status::fail;
    return k;
}

const Finding* Report::find(std::string_view check) const {
    for (const auto& f : findings)
        if (f.check == check) return &f;
    return nullptr;
}

void Report::print(std::ostream& out) const {
    for (const auto& f : findings) {
        out << status_name(f.status) << ' ' << f.check;
        if (!f.detail.empty()) out << ": " << f.detail;
        out << '\n';
    }
}

std::string Report::to_json() const {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& f : findings)
        j.push_back({{"check", f.check}, {"status", status_name(f.status)}, {"detail", f.detail}});
    return nlohmann::json{{"passed", passed()}, {"findings", j}}.dump(2);
}

}  // namespace cuttree
