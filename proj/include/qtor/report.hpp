#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace qtor {

using Json = nlohmann::ordered_json;

struct Witness {
    std::string what;
    Json detail;
};

/// Outcome of one verification check: a name, the number of cases run, and a
/// witness per failing case. Serialization is stable given identical inputs.
struct Report {
    std::string check;
    std::int64_t cases = 0;
    std::vector<Witness> witnesses;

    explicit Report(std::string name = {}) : check(std::move(name)) {}

    bool passed() const { return witnesses.empty(); }

    void fail(std::string what, Json detail = Json::object()) {
        witnesses.push_back({std::move(what), std::move(detail)});
    }

    Json to_json() const {
        Json j;
        j["check"] = check;
        j["passed"] = passed();
        j["cases"] = cases;
        Json w = Json::array();
        for (const auto& x : witnesses) {
            Json e;
            e["what"] = x.what;
            if (!x.detail.is_null() && !(x.detail.is_object() && x.detail.empty()))
                e["detail"] = x.detail;
            w.push_back(std::move(e));
        }
        j["witnesses"] = std::move(w);
        return j;
    }
};

} // namespace qtor
