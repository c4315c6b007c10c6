#pragma once

#include <sstream>
#include <string>

#include <json.hpp>

#include "cyclosum/congruence.hpp"
#include "cyclosum/props.hpp"

namespace cyclosum::report {

using ordered_json = nlohmann::ordered_json;

inline ordered_json achieved_json(const LambdaValuation& v) {
    if (v.at_least_cap) return ordered_json("cap");
    return ordered_json(v.value);
}

/// Stable JSON document for a congruence report. Timing is deliberately not
/// part of the document so that identical runs serialize byte-identically.
inline ordered_json to_json(const congruence::CongruenceReport& rep) {
    ordered_json j;
    j["l"] = rep.l;
    j["p"] = rep.p;
    j["r"] = rep.r;
    j["q"] = rep.q;
    j["gamma"] = rep.gamma;
    j["w"] = rep.w;
    if (!rep.modulus.empty()) j["modulus"] = rep.modulus;
    j["cases"] = ordered_json::array();
    for (const auto& c : rep.cases) {
        ordered_json cj;
        cj["n"] = c.n;
        cj["case"] = c.label;
        cj["required"] = c.required;
        cj["achieved"] = achieved_json(c.achieved);
        cj["pass"] = c.pass;
        j["cases"].push_back(std::move(cj));
    }
    j["all_pass"] = rep.all_pass;
    return j;
}

inline std::string csv_header() { return "q,gamma,w,n,case,required,achieved,pass"; }

inline void to_csv_rows(std::ostream& os, const congruence::CongruenceReport& rep) {
    for (const auto& c : rep.cases)
        os << rep.q << ',' << rep.gamma << ',' << rep.w << ',' << c.n << ',' << c.label << ','
           << c.required << ',' << c.achieved.str() << ',' << (c.pass ? "true" : "false") << '\n';
}

inline std::string to_csv(const congruence::CongruenceReport& rep) {
    std::ostringstream os;
    os << csv_header() << '\n';
    to_csv_rows(os, rep);
    return os.str();
}

inline std::string field_line(const congruence::CongruenceReport& rep) {
    std::ostringstream os;
    os << "field: q=" << rep.q << " (p=" << rep.p << ", r=" << rep.r << "), l=" << rep.l
       << ", gamma=" << rep.gamma << ", w=" << rep.w;
    if (!rep.modulus.empty()) {
        os << ", modulus=[";
        for (size_t i = 0; i < rep.modulus.size(); ++i) os << (i ? "," : "") << rep.modulus[i];
        os << "]";
    }
    return os.str();
}

inline std::string to_text(const congruence::CongruenceReport& rep, bool with_timing = true) {
    std::ostringstream os;
    os << field_line(rep) << '\n';
    for (const auto& c : rep.cases) {
        os << "  n=" << c.n;
        for (size_t pad = std::to_string(c.n).size(); pad < 3; ++pad) os << ' ';
        os << ' ' << c.label;
        for (size_t pad = c.label.size(); pad < 14; ++pad) os << ' ';
        os << " required=" << c.required << " achieved=" << c.achieved.str()
           << (c.pass ? "  pass" : "  FAIL") << '\n';
    }
    os << "all_pass: " << (rep.all_pass ? "true" : "false") << '\n';
    if (with_timing) os << "elapsed: " << rep.elapsed_ms << " ms\n";
    return os.str();
}

inline ordered_json to_json(const congruence::PropsReport& rep) {
    ordered_json j;
    j["l"] = rep.l;
    j["p"] = rep.p;
    j["r"] = rep.r;
    j["q"] = rep.q;
    j["gamma"] = rep.gamma;
    j["w"] = rep.w;
    j["checks"] = ordered_json::array();
    for (const auto& c : rep.checks) {
        ordered_json cj;
        cj["family"] = c.family;
        cj["checked"] = c.checked;
        cj["violations"] = c.violations;
        if (!c.first_witness.empty()) cj["witness"] = c.first_witness;
        j["checks"].push_back(std::move(cj));
    }
    j["all_pass"] = rep.all_pass;
    return j;
}

inline std::string to_text(const congruence::PropsReport& rep) {
    std::ostringstream os;
    os << "field: q=" << rep.q << " (p=" << rep.p << ", r=" << rep.r << "), l=" << rep.l
       << ", gamma=" << rep.gamma << ", w=" << rep.w << '\n';
    for (const auto& c : rep.checks) {
        os << "  " << c.family;
        for (size_t pad = c.family.size(); pad < 26; ++pad) os << ' ';
        os << ' ' << c.checked << " identities, " << c.violations << " violations"
           << (c.violations ? "  FAIL [" + c.first_witness + "]" : "  pass") << '\n';
    }
    os << "all_pass: " << (rep.all_pass ? "true" : "false") << '\n';
    return os.str();
}

} // namespace cyclosum::report
