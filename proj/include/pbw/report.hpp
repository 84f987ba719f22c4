#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "pbw/pk.hpp"
#include "pbw/presentation.hpp"

namespace pbw {

using Json = nlohmann::ordered_json;

inline Json report_header(const std::string& command, const std::string& input,
                          const std::string& field, int maxdeg) {
    Json j;
    j["schema"] = 1;
    j["command"] = command;
    j["input"] = input;
    j["field"] = field;
    j["max_deg"] = maxdeg;
    return j;
}

inline Json betti_json(const BettiTable& b) {
    Json arr = Json::array();
    for (const auto& [key, v] : b.b)
        if (v != 0) {
            Json e;
            e["i"] = key.first;
            e["j"] = key.second;
            e["dim"] = v;
            arr.push_back(e);
        }
    return arr;
}

template <class F>
Json resolution_json(const ResolutionData<F>& res, const Alphabet& alpha) {
    Json j;
    j["shifts"] = Json::object();
    for (int n = 0; n <= 3; ++n)
        j["shifts"]["q" + std::to_string(n)] = res.shifts[static_cast<size_t>(n)];
    j["betti"] = betti_json(res.betti);
    auto matrix = [&](const PolyMatrix<typename F::Scalar>& m) {
        Json rows = Json::array();
        for (const auto& r : m.entry) {
            Json row = Json::array();
            for (const auto& e : r)
                row.push_back(poly_str(e, alpha));
            rows.push_back(row);
        }
        return rows;
    };
    j["m1"] = matrix(res.M1);
    j["m2"] = matrix(res.M2);
    j["m3"] = matrix(res.M3);
    return j;
}

inline Json complexity_json(const Complexity& c) {
    Json j;
    j["value"] = c.value;
    j["status"] = c.exact ? "exact" : "at-least";
    j["growth_flag"] = c.growth_flag;
    j["m3m2_max_degree"] = c.m3m2_max_degree;
    j["closure_window"] = c.window;
    return j;
}

inline Json pbw_report_json(const PBWReport& report) {
    Json j;
    Json cx;
    cx["value"] = report.complexity_value;
    cx["status"] = report.complexity_exact ? "exact" : "at-least";
    j["complexity"] = cx;
    j["methods"] = Json::object();
    for (const auto& m : report.methods) {
        Json mj;
        mj["verdict"] = m.pass ? "pass" : "fail";
        mj["conditional"] = m.conditional;
        mj["window"] = m.window;
        if (m.witness)
            mj["witness"] = *m.witness;
        if (m.detail_k)
            mj["k"] = *m.detail_k;
        if (m.detail_n)
            mj["n"] = *m.detail_n;
        if (m.name == "oracle" && m.first_mismatch >= 0)
            mj["first_mismatch"] = m.first_mismatch;
        j["methods"][m.name] = mj;
    }
    if (!report.dims_A.empty()) {
        j["dims_base"] = report.dims_A;
        j["dims_gr"] = report.dims_gr;
    }
    j["pbw"] = report.verdict;
    return j;
}

/// Plain-text rendering of any report object: stable indented key/value
/// lines, arrays inline.
inline void render_text(const Json& j, std::string& out, int indent = 0) {
    std::string pad(static_cast<size_t>(indent) * 2, ' ');
    for (const auto& [key, value] : j.items()) {
        if (value.is_object()) {
            out += pad + key + ":\n";
            render_text(value, out, indent + 1);
        } else if (value.is_array() && !value.empty() && value.front().is_object()) {
            out += pad + key + ":\n";
            for (const auto& e : value) {
                std::string line = pad + "  -";
                for (const auto& [k2, v2] : e.items())
                    line += " " + k2 + "=" + v2.dump();
                out += line + "\n";
            }
        } else {
            out += pad + key + ": " + value.dump() + "\n";
        }
    }
}

inline std::string render_report(const Json& j, bool text) {
    if (!text)
        return j.dump(2) + "\n";
    std::string out;
    render_text(j, out);
    return out;
}

} // namespace pbw
