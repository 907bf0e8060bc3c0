#pragma once

#include <fstream>

#include <json.hpp>

#include "rigweb/suites.hpp"

namespace rigweb {

using nlohmann::json;

// Artifact files are JSON: a web descriptor plus canonical (sorted)
// entry lists of (label-path, scalar-literal) pairs. Loading re-sorts
// through the map representation, so save/load is the identity on the
// canonical form.

inline json web_to_json(const WebPtr& w) {
    json out = json::array();
    if (w)
        for (auto& l : w->labels) out.push_back(l.str());
    return out;
}

inline WebPtr web_from_json(const json& j) {
    std::vector<Label> labels;
    for (auto& s : j) labels.push_back(Label::parse(s.get<std::string>()));
    return make_web(std::move(labels));
}

inline json vec_to_json(const Vec& v) {
    json entries = json::array();
    for (auto& [l, s] : v.entries) entries.push_back({l.str(), scalar_str(s)});
    return json{{"carrier", carrier_tag(v.carrier)},
                {"web", web_to_json(v.web)},
                {"entries", entries}};
}

inline Vec vec_from_json(const json& j) {
    auto carrier = carrier_from_tag(j.at("carrier").get<std::string>());
    if (!carrier) throw std::invalid_argument("vec: unknown carrier tag");
    Vec v = zero_vec(web_from_json(j.at("web")), *carrier);
    for (auto& e : j.at("entries")) {
        Label l = Label::parse(e.at(0).get<std::string>());
        if (!v.web->contains(l))
            throw std::invalid_argument("vec: entry label " + l.str() + " outside the web");
        v.set(l, scalar_parse(*carrier, e.at(1).get<std::string>()));
    }
    return v;
}

inline json mat_to_json(const Mat& m) {
    json entries = json::array();
    for (auto& [a, row] : *m.rows)
        for (auto& [b, s] : row) entries.push_back({a.str(), b.str(), scalar_str(s)});
    return json{{"carrier", carrier_tag(m.carrier)},
                {"dom", web_to_json(m.dom)},
                {"cod", web_to_json(m.cod)},
                {"entries", entries}};
}

inline Mat mat_from_json(const json& j) {
    auto carrier = carrier_from_tag(j.at("carrier").get<std::string>());
    if (!carrier) throw std::invalid_argument("mat: unknown carrier tag");
    WebPtr dom = web_from_json(j.at("dom"));
    WebPtr cod = web_from_json(j.at("cod"));
    MatBuilder b(dom, cod, *carrier);
    for (auto& e : j.at("entries")) {
        Label a = Label::parse(e.at(0).get<std::string>());
        Label c = Label::parse(e.at(1).get<std::string>());
        if (!dom->contains(a) || !cod->contains(c))
            throw std::invalid_argument("mat: entry outside the webs");
        b.set(a, c, scalar_parse(*carrier, e.at(2).get<std::string>()));
    }
    return b.build();
}

inline json space_to_json(const SpaceRepr& x) {
    json P = json::array(), Q = json::array();
    for (auto& p : x.P) P.push_back(vec_to_json(p));
    for (auto& q : x.Q) Q.push_back(vec_to_json(q));
    return json{{"model", x.model},       {"name", x.name},
                {"web", web_to_json(x.web)}, {"P", P},
                {"Q", Q},                  {"q_certified", x.q_certified}};
}

inline SpaceRepr space_from_json(const json& j) {
    SpaceRepr x;
    x.model = j.at("model").get<std::string>();
    x.pcr = model_info(x.model).positive;
    x.name = j.value("name", "");
    x.web = web_from_json(j.at("web"));
    for (auto& p : j.at("P")) {
        Vec v = vec_from_json(p);
        if (v.carrier != x.pcr.carrier)
            throw std::invalid_argument("space: generator carrier does not match the model");
        x.P.push_back(std::move(v));
    }
    for (auto& q : j.at("Q")) x.Q.push_back(vec_from_json(q));
    x.q_certified = j.at("q_certified").get<bool>();
    return x;
}

// -- scenario and report files ------------------------------------------------

inline json scenario_to_json(const Scenario& sc) {
    json edges = json::array();
    for (auto& [u, v] : sc.graph_edges) edges.push_back({u, v});
    return json{{"model", sc.model},
                {"web_sizes", sc.web_sizes},
                {"graph", edges},
                {"bang_degree", sc.cfg.bang_degree},
                {"s_bound", sc.cfg.s_bound},
                {"seed", sc.seed},
                {"cases", sc.cases},
                {"suites", sc.suites}};
}

inline Scenario scenario_from_json(const json& j) {
    Scenario sc;
    sc.model = j.value("model", std::string("pcoh"));
    model_info(sc.model); // validate the id early
    if (j.contains("web_sizes")) sc.web_sizes = j.at("web_sizes").get<std::vector<std::uint32_t>>();
    if (j.contains("graph"))
        for (auto& e : j.at("graph"))
            sc.graph_edges.push_back({e.at(0).get<std::uint32_t>(), e.at(1).get<std::uint32_t>()});
    sc.cfg.bang_degree = j.value("bang_degree", 2);
    sc.cfg.s_bound = j.value("s_bound", 2);
    if (sc.cfg.bang_degree < 0 || sc.cfg.s_bound < 1)
        throw std::invalid_argument("scenario: bounds out of range");
    sc.seed = j.value("seed", std::uint64_t(1));
    sc.cases = j.value("cases", 100);
    if (j.contains("suites")) sc.suites = j.at("suites").get<std::vector<std::string>>();
    for (auto& id : sc.suites) {
        bool known = id == "harness.demo-failure";
        for (auto& k : known_suites())
            if (k == id) known = true;
        if (!known) throw std::invalid_argument("scenario: unknown suite id " + id);
    }
    return sc;
}

inline const char* status_tag(CaseResult::Status s) {
    switch (s) {
        case CaseResult::Status::Pass: return "pass";
        case CaseResult::Status::Fail: return "fail";
        case CaseResult::Status::UndefinedSum: return "undefined-sum";
    }
    return "?";
}

inline json report_to_json(const LawReport& report, const Scenario& sc, bool with_timing) {
    json suites = json::array();
    for (auto& s : report.suites) {
        json cases = json::array();
        for (auto& c : s.cases) {
            json entry{{"id", c.id}, {"status", status_tag(c.status)}};
            if (!c.witness.empty()) entry["witness"] = c.witness;
            if (with_timing) entry["micros"] = c.micros;
            cases.push_back(std::move(entry));
        }
        suites.push_back(json{{"suite", s.suite_id},
                              {"pass", s.passed()},
                              {"fail", s.failed()},
                              {"undefined_sum", s.undefined()},
                              {"cases", cases}});
    }
    return json{{"scenario", scenario_to_json(sc)}, {"ok", report.ok()}, {"suites", suites}};
}

inline std::string report_text(const LawReport& report) {
    std::ostringstream out;
    for (auto& s : report.suites) {
        out << s.suite_id << ": " << s.passed() << " pass";
        if (s.undefined() > 0) out << ", " << s.undefined() << " undefined-sum";
        if (s.failed() > 0) out << ", " << s.failed() << " FAIL";
        out << "\n";
        for (auto& c : s.cases)
            if (c.status == CaseResult::Status::Fail)
                out << "  FAIL " << c.id << "  [" << c.witness << "]\n";
        for (auto& c : s.cases)
            if (c.status == CaseResult::Status::UndefinedSum)
                out << "  undefined-sum " << c.id << "  [" << c.witness << "]\n";
    }
    out << (report.ok() ? "all suites passed" : "FAILURES") << "\n";
    return out.str();
}

inline void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

inline json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    return json::parse(in);
}

/// Scenarios bundled with the tool, addressable by name.
inline std::optional<std::string> bundled_scenario(const std::string& name) {
    if (name == "pcoh-smoke")
        return R"({"model":"pcoh","web_sizes":[1,2],"bang_degree":2,"s_bound":2,"seed":7,"cases":60})";
    if (name == "coh-smoke")
        return R"({"model":"coh","web_sizes":[1,2,3],"bang_degree":2,"s_bound":2,"seed":7,"cases":60})";
    if (name == "kothe-taylor")
        return R"({"model":"kothe","web_sizes":[1,2],"bang_degree":3,"s_bound":3,"seed":7,"cases":60,"suites":["taylor.coalgebra","taylor.functor","taylor.series"]})";
    if (name == "demo-failure")
        return R"({"model":"pcoh","web_sizes":[1,2],"bang_degree":2,"s_bound":2,"seed":7,"cases":10,"suites":["harness.demo-failure"]})";
    return std::nullopt;
}

} // namespace rigweb
