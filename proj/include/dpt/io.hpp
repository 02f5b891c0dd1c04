#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "dpt/diagram.hpp"

namespace dpt {

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

inline std::optional<Port> parse_port(const std::string& s) {
    if (s == "under_in") return Port::UnderIn;
    if (s == "under_out") return Port::UnderOut;
    if (s == "over_in") return Port::OverIn;
    if (s == "over_out") return Port::OverOut;
    return std::nullopt;
}

[[noreturn]] inline void io_fail(const std::string& path, const std::string& msg) {
    throw ParseError("at " + path + ": " + msg);
}

inline WrapVector parse_wrap(const nlohmann::json& j, const std::string& path) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
        io_fail(path, "expected an array of 2 integers");
    return {j[0].get<std::int64_t>(), j[1].get<std::int64_t>()};
}

inline std::string parse_id(const nlohmann::json& j, const std::string& path) {
    if (!j.contains("id") || !j["id"].is_string() || j["id"].get<std::string>().empty())
        io_fail(path + "/id", "expected a non-empty string");
    return j["id"].get<std::string>();
}

inline PortRef parse_port_ref(const nlohmann::json& j, const std::string& path) {
    if (!j.is_object() || !j.contains("crossing") || !j["crossing"].is_string())
        io_fail(path, "expected {\"crossing\": ..., \"port\": ...}");
    if (!j.contains("port") || !j["port"].is_string()) io_fail(path + "/port", "expected a string");
    const auto port = parse_port(j["port"].get<std::string>());
    if (!port)
        io_fail(path + "/port",
                "expected one of under_in, under_out, over_in, over_out");
    return {j["crossing"].get<std::string>(), *port};
}

} // namespace detail

inline nlohmann::ordered_json diagram_to_json(const TorusDiagram& input) {
    TorusDiagram d = input;
    std::sort(d.crossings.begin(), d.crossings.end(),
              [](const Crossing& a, const Crossing& b) { return a.id < b.id; });
    std::sort(d.edges.begin(), d.edges.end(),
              [](const Edge& a, const Edge& b) { return a.id < b.id; });
    std::sort(d.free_loops.begin(), d.free_loops.end(),
              [](const FreeLoop& a, const FreeLoop& b) { return a.id < b.id; });

    nlohmann::ordered_json j;
    j["name"] = d.name;
    if (!d.source.empty()) j["source"] = d.source;
    j["crossings"] = nlohmann::ordered_json::array();
    for (const auto& c : d.crossings) j["crossings"].push_back({{"id", c.id}, {"sign", c.sign}});
    j["edges"] = nlohmann::ordered_json::array();
    for (const auto& e : d.edges) {
        nlohmann::ordered_json je;
        je["id"] = e.id;
        je["from"] = {{"crossing", e.tail.crossing}, {"port", port_name(e.tail.port)}};
        je["to"] = {{"crossing", e.head.crossing}, {"port", port_name(e.head.port)}};
        je["wrap"] = {e.wrap.du, e.wrap.dv};
        j["edges"].push_back(std::move(je));
    }
    j["free_loops"] = nlohmann::ordered_json::array();
    for (const auto& l : d.free_loops) {
        nlohmann::ordered_json jl;
        jl["id"] = l.id;
        jl["wrap"] = {l.wrap.du, l.wrap.dv};
        if (!l.over_marks.empty()) {
            jl["over_marks"] = nlohmann::ordered_json::array();
            for (const auto& m : l.over_marks)
                jl["over_marks"].push_back({{"other", m.other},
                                            {"translate", {m.translate.du, m.translate.dv}},
                                            {"over", m.over},
                                            {"sign", m.sign}});
        }
        j["free_loops"].push_back(std::move(jl));
    }
    return j;
}

inline std::string serialize(const TorusDiagram& d) { return diagram_to_json(d).dump(2) + "\n"; }

inline TorusDiagram parse(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("syntax error: ") + e.what());
    }
    if (!j.is_object()) detail::io_fail("/", "expected a JSON object");

    TorusDiagram d;
    if (j.contains("name")) {
        if (!j["name"].is_string()) detail::io_fail("/name", "expected a string");
        d.name = j["name"].get<std::string>();
    }
    if (j.contains("source")) {
        if (!j["source"].is_string()) detail::io_fail("/source", "expected a string");
        d.source = j["source"].get<std::string>();
    }
    for (const char* key : {"crossings", "edges", "free_loops"})
        if (j.contains(key) && !j[key].is_array())
            detail::io_fail(std::string("/") + key, "expected an array");

    if (j.contains("crossings")) {
        int i = 0;
        for (const auto& jc : j["crossings"]) {
            const std::string path = "/crossings/" + std::to_string(i++);
            if (!jc.is_object()) detail::io_fail(path, "expected an object");
            Crossing c;
            c.id = detail::parse_id(jc, path);
            if (!jc.contains("sign") || !jc["sign"].is_number_integer())
                detail::io_fail(path + "/sign", "expected an integer");
            c.sign = jc["sign"].get<int>();
            if (c.sign != 1 && c.sign != -1) detail::io_fail(path + "/sign", "expected +1 or -1");
            d.crossings.push_back(std::move(c));
        }
    }
    if (j.contains("edges")) {
        int i = 0;
        for (const auto& je : j["edges"]) {
            const std::string path = "/edges/" + std::to_string(i++);
            if (!je.is_object()) detail::io_fail(path, "expected an object");
            Edge e;
            e.id = detail::parse_id(je, path);
            if (!je.contains("from")) detail::io_fail(path + "/from", "missing");
            if (!je.contains("to")) detail::io_fail(path + "/to", "missing");
            e.tail = detail::parse_port_ref(je["from"], path + "/from");
            e.head = detail::parse_port_ref(je["to"], path + "/to");
            if (!je.contains("wrap")) detail::io_fail(path + "/wrap", "missing");
            e.wrap = detail::parse_wrap(je["wrap"], path + "/wrap");
            d.edges.push_back(std::move(e));
        }
    }
    if (j.contains("free_loops")) {
        int i = 0;
        for (const auto& jl : j["free_loops"]) {
            const std::string path = "/free_loops/" + std::to_string(i++);
            if (!jl.is_object()) detail::io_fail(path, "expected an object");
            FreeLoop l;
            l.id = detail::parse_id(jl, path);
            if (!jl.contains("wrap")) detail::io_fail(path + "/wrap", "missing");
            l.wrap = detail::parse_wrap(jl["wrap"], path + "/wrap");
            if (jl.contains("over_marks")) {
                if (!jl["over_marks"].is_array())
                    detail::io_fail(path + "/over_marks", "expected an array");
                int k = 0;
                for (const auto& jm : jl["over_marks"]) {
                    const std::string mpath = path + "/over_marks/" + std::to_string(k++);
                    if (!jm.is_object()) detail::io_fail(mpath, "expected an object");
                    OverMark m;
                    if (!jm.contains("other") || !jm["other"].is_string())
                        detail::io_fail(mpath + "/other", "expected a string");
                    m.other = jm["other"].get<std::string>();
                    if (!jm.contains("translate")) detail::io_fail(mpath + "/translate", "missing");
                    m.translate = detail::parse_wrap(jm["translate"], mpath + "/translate");
                    if (jm.contains("over")) {
                        if (!jm["over"].is_boolean())
                            detail::io_fail(mpath + "/over", "expected a boolean");
                        m.over = jm["over"].get<bool>();
                    }
                    if (jm.contains("sign")) {
                        if (!jm["sign"].is_number_integer())
                            detail::io_fail(mpath + "/sign", "expected an integer");
                        m.sign = jm["sign"].get<int>();
                        if (m.sign != 1 && m.sign != -1)
                            detail::io_fail(mpath + "/sign", "expected +1 or -1");
                    }
                    l.over_marks.push_back(std::move(m));
                }
            }
            d.free_loops.push_back(std::move(l));
        }
    }
    return d;
}

} // namespace dpt
