#pragma once

#include <string>
#include <vector>

namespace cobar {

// One named pass/fail item with an optional witness or explanation.
struct CheckItem {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct CheckReport {
    std::vector<CheckItem> items;

    void add(std::string name, bool pass, std::string detail = "") {
        items.push_back({std::move(name), pass, std::move(detail)});
    }
    bool all_pass() const {
        for (const auto& i : items)
            if (!i.pass) return false;
        return true;
    }
    std::string summary() const {
        std::string out;
        for (const auto& i : items) {
            out += i.name;
            out += i.pass ? ": pass" : ": FAIL";
            if (!i.detail.empty()) out += " (" + i.detail + ")";
            out += "\n";
        }
        return out;
    }
};

}  // namespace cobar
