#pragma once

#include "solcomp/coding.hpp"
#include "solcomp/evolution.hpp"
#include "solcomp/field.hpp"
#include "solcomp/macrostate.hpp"
#include "solcomp/nonlinearity.hpp"

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>

namespace solcomp {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// How the initial condition is produced for `evolve`.
struct InitialCondition {
    std::string kind = "sampled"; // sampled | file | plateau
    std::string path;             // kind = file
    long plateau_halfwidth = 4;   // kind = plateau
    int support = 64;             // kind = sampled
};

struct ExperimentConfig {
    LatticeParams lattice;
    double s0 = 0.25;
    CodingParams coding{1.0, 4};
    MacroParams macro;
    IntegratorConfig evolution;
    double t_end = 1.0;
    InitialCondition initial;

    // theorem ensemble
    int ensemble_size = 8;
    std::optional<TheoremParams> theorem_override;

    // minimize
    double minimize_step = 0.05;
    long minimize_max_iters = 20000;
    double minimize_tol = 1e-9;
    int multistart = 8;

    // axioms
    int axiom_corpus_size = 200;
    int axiom_max_length = 48;

    std::uint64_t seed = 1;
    std::string output_dir = ".";

    Nonlinearity nonlinearity() const;
    void validate() const; // throws ConfigError
};

/// Minimal flat INI/TOML-style parser: `[section]` headers, `key = value`
/// lines, `#` comments. Unknown keys are an error.
ExperimentConfig parse_config(std::istream& is);
ExperimentConfig load_config(const std::string& path);

} // namespace solcomp
