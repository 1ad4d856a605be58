#include <cmath>
#include <cstdio>

#include <json.hpp>

#include "actr/experiment.hpp"

namespace actr {

double round3(double value) {
    // The nudge absorbs binary representation error so that e.g. 0.0195
    // (stored as 0.019499999...) rounds up as it would in decimal.
    const double scaled = std::floor(std::fabs(value) * 1000.0 + 0.5 + 1e-6);
    return std::copysign(scaled / 1000.0, value);
}

std::string format_utility(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", round3(value));
    std::string s = buf;
    if (s == "-0.000") s = "0.000";
    return s;
}

std::string format_count(double value) {
    std::string s = format_utility(value);
    if (auto dot = s.find('.'); dot != std::string::npos) {
        while (s.back() == '0') s.pop_back();
        if (s.back() == '.') s.pop_back();
    }
    return s;
}

namespace {

std::string row(const std::string& label, const std::array<double, 3>& u, const std::string& w,
                const std::string& d, const std::string& l) {
    return label + "," + format_utility(u[0]) + "," + format_utility(u[1]) + "," + format_utility(u[2]) + "," + w +
           "," + d + "," + l + "\n";
}

}  // namespace

std::string to_csv(const Report& report) {
    std::string out = "sample,U_r,U_p,U_s,wins,draws,defeats\n";
    for (const RunResult& r : report.results)
        out += row(r.label, r.utilities, std::to_string(r.wins), std::to_string(r.draws), std::to_string(r.defeats));
    const Averages& a = report.average;
    out += row("avg", a.utilities, format_count(a.wins), format_count(a.draws), format_count(a.defeats));
    return out;
}

std::string to_json(const Report& report) {
    using nlohmann::ordered_json;
    // Rounded values are emitted as strings-turned-numbers so the JSON and
    // CSV agree digit for digit.
    auto num = [](double v) { return ordered_json::parse(format_utility(v)); };

    ordered_json j;
    j["config"] = {
        {"strategy", std::string(to_string(report.config.kind))},
        {"alpha", report.config.alpha},
        {"goal_value", report.config.goal_value},
        {"tiebreak", std::string(to_string(report.config.tie_break))},
        {"refraction", report.config.refraction},
        {"seed", report.config.seed},
    };
    ordered_json rows = ordered_json::array();
    for (const RunResult& r : report.results) {
        rows.push_back({
            {"sample", r.sample},
            {"run", r.run + 1},
            {"label", r.label},
            {"U_r", num(r.utilities[0])},
            {"U_p", num(r.utilities[1])},
            {"U_s", num(r.utilities[2])},
            {"wins", r.wins},
            {"draws", r.draws},
            {"defeats", r.defeats},
        });
    }
    j["results"] = std::move(rows);
    const Averages& a = report.average;
    j["average"] = {
        {"U_r", num(a.utilities[0])}, {"U_p", num(a.utilities[1])}, {"U_s", num(a.utilities[2])},
        {"wins", num(a.wins)},        {"draws", num(a.draws)},      {"defeats", num(a.defeats)},
    };
    return j.dump(2) + "\n";
}

}  // namespace actr
