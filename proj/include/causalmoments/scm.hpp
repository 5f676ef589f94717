#ifndef CAUSALMOMENTS_SCM_HPP
#define CAUSALMOMENTS_SCM_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "causalmoments/observation_table.hpp"

namespace causalmoments {

// Exogenous noise distribution: a continuous uniform interval or a finite
// list of (value, probability) atoms.
struct NoiseLaw {
    enum class Kind { Uniform, Finite };

    Kind kind = Kind::Uniform;
    double lower = 0.0;
    double upper = 1.0;
    std::vector<std::pair<double, double>> support; // finite kind

    static NoiseLaw uniform(double lower, double upper);
    static NoiseLaw finite(std::vector<std::pair<double, double>> support);
    void validate() const;
};

// Single-outcome structural model: X drawn from arm_probabilities, U from
// the noise law, Y = response(X, U).
struct ScmSpec {
    std::string name;
    std::vector<std::pair<int, double>> arm_probabilities;
    NoiseLaw noise;
    std::function<double(int, double)> response;

    std::vector<int> arms() const;
    void validate() const;
};

// Finite-support model with outcomes tabulated per (arm, noise atom); the
// substrate for exact enumeration oracles.
struct DiscreteScm {
    std::string name;
    std::vector<int> arms;
    std::vector<double> arm_probabilities;          // same length as arms
    std::vector<std::pair<double, double>> support; // (noise value, probability)
    std::vector<std::vector<double>> outcomes;      // [arm_index][atom_index]

    std::size_t arm_index(int arm) const;
    double outcome(int arm, std::size_t atom) const;
    void validate() const;
    ScmSpec to_spec() const;
};

// n i.i.d. rows; reproducible for a fixed (spec, n, seed).
ObservationTable simulate(const ScmSpec& spec, std::int64_t n, std::uint64_t seed);
ObservationTable simulate(const DiscreteScm& scm, std::int64_t n, std::uint64_t seed);

// Replaces a continuous uniform noise law with `atoms` equally likely
// midpoint atoms; finite laws are tabulated as-is.
DiscreteScm discretize(const ScmSpec& spec, int atoms);

// Named presets: "scm-a", "scm-b", "example-1", "example-2", "example-3".
ScmSpec preset(const std::string& name);
std::vector<std::string> preset_names();

// Randomized finite-support models for property sweeps. The monotone variant
// makes every arm response monotone in the noise in one shared direction
// (flat stretches allowed); the unconstrained variant usually violates that.
DiscreteScm random_monotone_scm(std::uint64_t seed);
DiscreteScm random_scm(std::uint64_t seed);

} // namespace causalmoments

#endif
