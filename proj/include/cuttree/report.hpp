#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cuttree {

enum class Status { pass, fail, vacuous, skipped };

std::string_view status_name(Status s);

struct Finding {
    std::string check;
    Status status = Status::pass;
    std::string detail;
};

/// Ordered list of findings. Order is the order checks were run, which every
/// producer keeps deterministic.
struct Report {
    std::vector<Finding> findings;

    void add(std::string check, Status status, std::string detail = {}) {
        findings.push_back(Finding{std::move(check), status, std::move(detail)});
    }
    bool passed() const;
    std::size_t failures() const;
    const Finding* find(std::string_view check) const;

    /// One "STATUS check: detail" line per finding.
    void print(std::ostream& out) const;
    std::string to_json() const;
};

}  // namespace cuttree
