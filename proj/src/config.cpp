#include "solcomp/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace solcomp {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double to_double(const std::string& key, const std::string& v) {
    try {
        std::size_t pos = 0;
        const double x = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        throw ConfigError("bad numeric value for " + key + ": " + v);
    }
}

long to_long(const std::string& key, const std::string& v) {
    try {
        std::size_t pos = 0;
        const long x = std::stol(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        throw ConfigError("bad integer value for " + key + ": " + v);
    }
}

} // namespace

Nonlinearity ExperimentConfig::nonlinearity() const {
    return make_nonlinearity_cubic_like(s0);
}

void ExperimentConfig::validate() const {
    lattice.validate();
    if (!(s0 > 0.0)) throw ConfigError("nonlinearity.s0 must be positive");
    if (!(coding.sigma > 0.0)) throw ConfigError("coding.sigma must be positive");
    if (coding.N < 1) throw ConfigError("coding.N must be >= 1");
    const double sq = coding.sigma * coding.sigma;
    if (std::abs(sq - macro.sigma * macro.sigma) > 1e-12)
        throw ConfigError("macro.sigma must equal coding.sigma");
    if (!(macro.alpha > std::max(s0, std::sqrt(s0))))
        throw ConfigError("macro.alpha must exceed max(s0, sqrt(s0))");
    if (!(macro.beta > 0.0) || !(macro.beta < macro.alpha - s0))
        throw ConfigError("macro.beta must lie in (0, alpha - s0)");
    if (!(macro.m < 0.0)) throw ConfigError("macro.m must be negative");
    if (!(evolution.dt > 0.0)) throw ConfigError("evolution.dt must be positive");
    if (evolution.steps_per_sample < 1)
        throw ConfigError("evolution.steps_per_sample must be >= 1");
    if (!(t_end > 0.0)) throw ConfigError("t_end must be positive");
    if (initial.kind != "sampled" && initial.kind != "file" &&
        initial.kind != "plateau")
        throw ConfigError("initial.kind must be sampled, file or plateau");
    if (initial.kind == "file" && initial.path.empty())
        throw ConfigError("initial.path required when initial.kind = file");
    if (initial.kind == "plateau" && initial.plateau_halfwidth < 0)
        throw ConfigError("initial.plateau_halfwidth must be >= 0");
    if (initial.support < 1) throw ConfigError("initial.support must be >= 1");
    if (ensemble_size < 1) throw ConfigError("theorem.ensemble_size must be >= 1");
    if (theorem_override) {
        try {
            theorem_override->validate(sq, lattice.h, nonlinearity(), macro.alpha,
                                       macro.beta);
        } catch (const std::exception& e) {
            throw ConfigError(e.what());
        }
    }
    if (!(minimize_step > 0.0)) throw ConfigError("minimize.step must be positive");
    if (minimize_max_iters < 1)
        throw ConfigError("minimize.max_iters must be >= 1");
    if (!(minimize_tol > 0.0)) throw ConfigError("minimize.tol must be positive");
    if (multistart < 1) throw ConfigError("minimize.multistart must be >= 1");
    if (axiom_corpus_size < 2)
        throw ConfigError("axioms.corpus_size must be >= 2");
    if (axiom_max_length < 2)
        throw ConfigError("axioms.max_length must be >= 2");
}

ExperimentConfig parse_config(std::istream& is) {
    ExperimentConfig cfg;
    TheoremParams tp;
    bool have_tp = false;

    std::string section;
    std::string line;
    long lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ConfigError("line " + std::to_string(lineno) +
                                  ": unterminated section header");
            section = trim(line.substr(1, line.size() - 2));
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(lineno) +
                              ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        if (val.size() >= 2 && val.front() == '"' && val.back() == '"')
            val = val.substr(1, val.size() - 2);
        const std::string full = section.empty() ? key : section + "." + key;

        if (full == "lattice.h") cfg.lattice.h = to_double(full, val);
        else if (full == "lattice.lo") cfg.lattice.lo = to_long(full, val);
        else if (full == "lattice.hi") cfg.lattice.hi = to_long(full, val);
        else if (full == "lattice.boundary") {
            if (val == "zero") cfg.lattice.boundary = Boundary::zero;
            else if (val == "periodic") cfg.lattice.boundary = Boundary::periodic;
            else throw ConfigError("lattice.boundary must be zero or periodic");
        }
        else if (full == "nonlinearity.s0") cfg.s0 = to_double(full, val);
        else if (full == "coding.sigma") cfg.coding.sigma = to_double(full, val);
        else if (full == "coding.N") cfg.coding.N = static_cast<int>(to_long(full, val));
        else if (full == "macro.alpha") cfg.macro.alpha = to_double(full, val);
        else if (full == "macro.beta") cfg.macro.beta = to_double(full, val);
        else if (full == "macro.m") cfg.macro.m = to_double(full, val);
        else if (full == "macro.sigma") cfg.macro.sigma = to_double(full, val);
        else if (full == "evolution.dt") cfg.evolution.dt = to_double(full, val);
        else if (full == "evolution.scheme") {
            if (val == "strang_split") cfg.evolution.scheme = Scheme::strang_split;
            else if (val == "implicit_midpoint")
                cfg.evolution.scheme = Scheme::implicit_midpoint;
            else throw ConfigError("evolution.scheme must be strang_split or implicit_midpoint");
        }
        else if (full == "evolution.steps_per_sample")
            cfg.evolution.steps_per_sample = to_long(full, val);
        else if (full == "evolution.t_end") cfg.t_end = to_double(full, val);
        else if (full == "initial.kind") cfg.initial.kind = val;
        else if (full == "initial.path") cfg.initial.path = val;
        else if (full == "initial.plateau_halfwidth")
            cfg.initial.plateau_halfwidth = to_long(full, val);
        else if (full == "initial.support")
            cfg.initial.support = static_cast<int>(to_long(full, val));
        else if (full == "theorem.ensemble_size")
            cfg.ensemble_size = static_cast<int>(to_long(full, val));
        else if (full == "theorem.gamma") { tp.gamma = to_double(full, val); have_tp = true; }
        else if (full == "theorem.mu") { tp.mu = to_double(full, val); have_tp = true; }
        else if (full == "theorem.N") { tp.N = static_cast<int>(to_long(full, val)); have_tp = true; }
        else if (full == "theorem.n") { tp.n = to_long(full, val); have_tp = true; }
        else if (full == "theorem.a") { tp.a = to_long(full, val); have_tp = true; }
        else if (full == "minimize.step") cfg.minimize_step = to_double(full, val);
        else if (full == "minimize.max_iters") cfg.minimize_max_iters = to_long(full, val);
        else if (full == "minimize.tol") cfg.minimize_tol = to_double(full, val);
        else if (full == "minimize.multistart")
            cfg.multistart = static_cast<int>(to_long(full, val));
        else if (full == "axioms.corpus_size")
            cfg.axiom_corpus_size = static_cast<int>(to_long(full, val));
        else if (full == "axioms.max_length")
            cfg.axiom_max_length = static_cast<int>(to_long(full, val));
        else if (full == "run.seed")
            cfg.seed = static_cast<std::uint64_t>(to_long(full, val));
        else if (full == "run.output_dir") cfg.output_dir = val;
        else
            throw ConfigError("line " + std::to_string(lineno) +
                              ": unknown key " + full);
    }
    if (have_tp) cfg.theorem_override = tp;
    cfg.validate();
    return cfg;
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw ConfigError("cannot open config file: " + path);
    return parse_config(is);
}

} // namespace solcomp
