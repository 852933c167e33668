#include "hopfhc/config.hpp"

#include <algorithm>
#include <sstream>

namespace hopfhc {

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    auto e = s.find_last_not_of(" \t\r");
    if (b == std::string::npos) return "";
    return s.substr(b, e - b + 1);
}

bool in(const std::string& v, std::initializer_list<const char*> set) {
    return std::any_of(set.begin(), set.end(), [&](const char* s) { return v == s; });
}

} // namespace

RunConfig parse_config(const std::string& text) {
    RunConfig cfg;
    bool saw_algebra = false, saw_theory = false;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) throw ParseError(lineno, "expected key = value");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty()) throw ParseError(lineno, "empty key or value");

        try {
            if (key == "algebra") {
                cfg.algebra = value;
                saw_algebra = true;
            } else if (key == "algebra.q") {
                if (value == "symbolic") {
                    cfg.q_symbolic = true;
                    cfg.q = Scalar::q();
                } else {
                    cfg.q = Scalar::from_string(value);
                }
            } else if (key == "algebra.cap") {
                cfg.cap = std::stoi(value);
            } else if (key == "coefficient") {
                cfg.coefficient = value;
            } else if (key == "coefficient.delta") {
                cfg.delta = value;
            } else if (key == "coefficient.sigma") {
                cfg.sigma = value;
            } else if (key == "coefficient.ideal") {
                cfg.ideal.clear();
                std::istringstream parts(value);
                std::string item;
                while (std::getline(parts, item, ',')) {
                    item = trim(item);
                    if (!item.empty()) cfg.ideal.push_back(item);
                }
            } else if (key == "theory") {
                cfg.theory = value;
                saw_theory = true;
            } else if (key == "route") {
                cfg.route = value;
            } else if (key == "max_degree") {
                cfg.max_degree = std::stoi(value);
            } else if (key == "output") {
                cfg.output = value;
            } else {
                throw ValidationError(key, "unknown key: " + key);
            }
        } catch (const ValidationError&) {
            throw;
        } catch (const std::exception& ex) {
            throw ParseError(lineno, std::string("bad value for ") + key + ": " + ex.what());
        }
    }

    if (!saw_algebra) throw ValidationError("algebra", "missing required key: algebra");
    if (!saw_theory) throw ValidationError("theory", "missing required key: theory");
    if (!in(cfg.algebra, {"k", "kC2", "kS3", "sweedler4", "uq_sl2"}))
        throw ValidationError("algebra", "unknown algebra preset: " + cfg.algebra);
    if (!in(cfg.coefficient, {"trivial", "modular_pair", "coalgebra_self", "trivial_coaction"}))
        throw ValidationError("coefficient", "unknown coefficient preset: " + cfg.coefficient);
    if (!in(cfg.theory, {"check", "hochschild", "cyclic", "uq_vanishing"}))
        throw ValidationError("theory", "unknown theory: " + cfg.theory);
    if (!in(cfg.route, {"p_image", "coinvariant_quotient", "both"}))
        throw ValidationError("route", "unknown route: " + cfg.route);
    if (cfg.max_degree < 0) throw ValidationError("max_degree", "max_degree must be >= 0");
    if (cfg.theory == "uq_vanishing" && cfg.algebra != "uq_sl2")
        throw ValidationError("theory", "uq_vanishing requires algebra = uq_sl2");
    if (cfg.coefficient == "modular_pair" && cfg.sigma.empty())
        throw ValidationError("coefficient.sigma", "modular_pair needs coefficient.sigma");
    if (cfg.coefficient == "trivial_coaction" && cfg.ideal.empty())
        throw ValidationError("coefficient.ideal", "trivial_coaction needs coefficient.ideal");
    if (cfg.algebra == "uq_sl2" && cfg.cap < 1)
        throw ValidationError("algebra.cap", "uq_sl2 needs algebra.cap >= 1");
    return cfg;
}

} // namespace hopfhc
