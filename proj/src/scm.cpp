#include "causalmoments/scm.hpp"

#include <algorithm>
#include <cmath>

#include "causalmoments/errors.hpp"
#include "causalmoments/rng.hpp"

namespace causalmoments {

namespace {

constexpr double kProbabilityTolerance = 1e-12;

void check_probabilities(const std::vector<double>& probabilities, const std::string& what) {
    double total = 0.0;
    for (double p : probabilities) {
        if (p < 0.0) throw ValidationError(what + ": negative probability");
        total += p;
    }
    if (std::abs(total - 1.0) > kProbabilityTolerance) {
        throw ValidationError(what + ": probabilities sum to " + std::to_string(total) +
                              ", expected 1");
    }
}

// Inverse-CDF draw over cumulative probabilities.
template <typename Value>
const Value& categorical(const std::vector<Value>& values,
                         const std::vector<double>& probabilities, double u) {
    double cumulative = 0.0;
    for (std::size_t t = 0; t + 1 < values.size(); ++t) {
        cumulative += probabilities[t];
        if (u < cumulative) return values[t];
    }
    return values.back();
}

} // namespace

NoiseLaw NoiseLaw::uniform(double lower, double upper) {
    NoiseLaw law;
    law.kind = Kind::Uniform;
    law.lower = lower;
    law.upper = upper;
    return law;
}

NoiseLaw NoiseLaw::finite(std::vector<std::pair<double, double>> support) {
    NoiseLaw law;
    law.kind = Kind::Finite;
    law.support = std::move(support);
    return law;
}

void NoiseLaw::validate() const {
    if (kind == Kind::Uniform) {
        if (!(lower <= upper) || !std::isfinite(lower) || !std::isfinite(upper)) {
            throw ValidationError("uniform noise law needs finite lower <= upper");
        }
    } else {
        if (support.empty()) throw ValidationError("finite noise law needs >= 1 atom");
        std::vector<double> probabilities;
        probabilities.reserve(support.size());
        for (const auto& [value, p] : support) {
            if (!std::isfinite(value)) throw ValidationError("non-finite noise atom");
            probabilities.push_back(p);
        }
        check_probabilities(probabilities, "noise law");
    }
}

std::vector<int> ScmSpec::arms() const {
    std::vector<int> out;
    out.reserve(arm_probabilities.size());
    for (const auto& [arm, p] : arm_probabilities) out.push_back(arm);
    return out;
}

void ScmSpec::validate() const {
    if (arm_probabilities.empty()) throw ValidationError(name + ": no arms");
    std::vector<double> probabilities;
    probabilities.reserve(arm_probabilities.size());
    for (const auto& [arm, p] : arm_probabilities) probabilities.push_back(p);
    check_probabilities(probabilities, name + " arms");
    noise.validate();
    if (!response) throw ValidationError(name + ": missing response function");
}

std::size_t DiscreteScm::arm_index(int arm) const {
    for (std::size_t a = 0; a < arms.size(); ++a) {
        if (arms[a] == arm) return a;
    }
    throw NoDataError(name + ": unknown arm " + std::to_string(arm));
}

double DiscreteScm::outcome(int arm, std::size_t atom) const {
    return outcomes[arm_index(arm)][atom];
}

void DiscreteScm::validate() const {
    if (arms.empty() || support.empty()) {
        throw ValidationError(name + ": arms and noise support must be nonempty");
    }
    if (arm_probabilities.size() != arms.size() || outcomes.size() != arms.size()) {
        throw ValidationError(name + ": arm tables are inconsistent");
    }
    check_probabilities(arm_probabilities, name + " arms");
    std::vector<double> probabilities;
    probabilities.reserve(support.size());
    for (const auto& [value, p] : support) probabilities.push_back(p);
    check_probabilities(probabilities, name + " noise");
    for (const auto& per_arm : outcomes) {
        if (per_arm.size() != support.size()) {
            throw ValidationError(name + ": outcome table does not cover the support");
        }
        for (double y : per_arm) {
            if (!std::isfinite(y)) throw ValidationError(name + ": non-finite outcome");
        }
    }
}

ScmSpec DiscreteScm::to_spec() const {
    validate();
    ScmSpec spec;
    spec.name = name;
    for (std::size_t a = 0; a < arms.size(); ++a) {
        spec.arm_probabilities.emplace_back(arms[a], arm_probabilities[a]);
    }
    spec.noise = NoiseLaw::finite(support);
    // Atoms drawn by simulate() are exactly the stored values, so an exact
    // lookup is safe.
    spec.response = [scm = *this](int arm, double u) {
        for (std::size_t t = 0; t < scm.support.size(); ++t) {
            if (scm.support[t].first == u) return scm.outcome(arm, t);
        }
        throw ValidationError(scm.name + ": noise value off the support");
    };
    return spec;
}

ObservationTable simulate(const ScmSpec& spec, std::int64_t n, std::uint64_t seed) {
    spec.validate();
    if (n < 1) throw ValidationError("sample size must be >= 1");

    std::vector<int> arm_values;
    std::vector<double> arm_probs;
    for (const auto& [arm, p] : spec.arm_probabilities) {
        arm_values.push_back(arm);
        arm_probs.push_back(p);
    }
    std::vector<double> noise_values;
    std::vector<double> noise_probs;
    if (spec.noise.kind == NoiseLaw::Kind::Finite) {
        for (const auto& [value, p] : spec.noise.support) {
            noise_values.push_back(value);
            noise_probs.push_back(p);
        }
    }

    UniformStream arm_stream(seed, 0);
    UniformStream noise_stream(seed, 1);
    std::vector<Observation> rows;
    rows.reserve(static_cast<std::size_t>(n));
    for (std::int64_t t = 0; t < n; ++t) {
        const int x = categorical(arm_values, arm_probs, arm_stream.next());
        const double u = spec.noise.kind == NoiseLaw::Kind::Uniform
                             ? noise_stream.next(spec.noise.lower, spec.noise.upper)
                             : categorical(noise_values, noise_probs, noise_stream.next());
        rows.push_back(Observation{x, spec.response(x, u)});
    }
    return ObservationTable(std::move(rows));
}

ObservationTable simulate(const DiscreteScm& scm, std::int64_t n, std::uint64_t seed) {
    return simulate(scm.to_spec(), n, seed);
}

DiscreteScm discretize(const ScmSpec& spec, int atoms) {
    spec.validate();
    if (spec.noise.kind == NoiseLaw::Kind::Uniform && atoms < 1) {
        throw ValidationError("discretization needs >= 1 atom");
    }

    DiscreteScm scm;
    scm.name = spec.name;
    for (const auto& [arm, p] : spec.arm_probabilities) {
        scm.arms.push_back(arm);
        scm.arm_probabilities.push_back(p);
    }
    if (spec.noise.kind == NoiseLaw::Kind::Finite) {
        scm.support = spec.noise.support;
    } else {
        const double width = spec.noise.upper - spec.noise.lower;
        for (int t = 0; t < atoms; ++t) {
            const double u =
                spec.noise.lower + width * (2.0 * t + 1.0) / (2.0 * static_cast<double>(atoms));
            scm.support.emplace_back(u, 1.0 / static_cast<double>(atoms));
        }
    }
    for (int arm : scm.arms) {
        std::vector<double> per_arm;
        per_arm.reserve(scm.support.size());
        for (const auto& [u, p] : scm.support) per_arm.push_back(spec.response(arm, u));
        scm.outcomes.push_back(std::move(per_arm));
    }
    scm.validate();
    return scm;
}

ScmSpec preset(const std::string& name) {
    ScmSpec spec;
    spec.name = name;
    if (name == "scm-a") {
        spec.arm_probabilities = {{0, 0.2}, {1, 0.8}};
        spec.noise = NoiseLaw::uniform(-1.0, 1.0);
        spec.response = [](int x, double u) {
            return -(x + 1.0) * u * (x * u >= 0.0 ? 1.0 : 0.0);
        };
    } else if (name == "scm-b") {
        spec.arm_probabilities = {{-1, 1.0 / 3.0}, {0, 1.0 / 3.0}, {1, 1.0 / 3.0}};
        spec.noise = NoiseLaw::uniform(0.0, 1.0);
        spec.response = [](int x, double u) { return static_cast<double>(x * x) * u; };
    } else if (name == "example-1") {
        spec.arm_probabilities = {{-1, 1.0 / 3.0}, {0, 1.0 / 3.0}, {1, 1.0 / 3.0}};
        spec.noise = NoiseLaw::uniform(-1.0, 1.0);
        spec.response = [](int x, double u) { return x + u; };
    } else if (name == "example-2") {
        spec.arm_probabilities = {{-1, 1.0 / 3.0}, {0, 1.0 / 3.0}, {1, 1.0 / 3.0}};
        spec.noise = NoiseLaw::uniform(-1.0, 1.0);
        spec.response = [](int x, double u) { return x * (u + 1.0) + 1.0; };
    } else if (name == "example-3") {
        spec.arm_probabilities = {{-1, 1.0 / 3.0}, {0, 1.0 / 3.0}, {1, 1.0 / 3.0}};
        spec.noise = NoiseLaw::uniform(-1.0, 1.0);
        spec.response = [](int x, double u) {
            return static_cast<double>(x * x) * (u + 1.0) + 1.0;
        };
    } else {
        throw ConfigError("unknown preset '" + name +
                          "'; expected one of scm-a, scm-b, example-1, example-2, example-3");
    }
    return spec;
}

std::vector<std::string> preset_names() {
    return {"scm-a", "scm-b", "example-1", "example-2", "example-3"};
}

namespace {

DiscreteScm random_scm_impl(std::uint64_t seed, bool monotone) {
    UniformStream g(seed, 7);
    DiscreteScm scm;
    scm.name = (monotone ? "random-monotone-" : "random-") + std::to_string(seed);

    const int n_arms = g.next() < 0.5 ? 2 : 3;
    for (int a = 0; a < n_arms; ++a) scm.arms.push_back(a);
    std::vector<double> weights;
    double weight_total = 0.0;
    for (int a = 0; a < n_arms; ++a) {
        weights.push_back(0.2 + g.next());
        weight_total += weights.back();
    }
    for (double w : weights) scm.arm_probabilities.push_back(w / weight_total);
    // Nudge the last probability so the sum is exactly 1 in floating point.
    double sum_head = 0.0;
    for (std::size_t a = 0; a + 1 < scm.arm_probabilities.size(); ++a) {
        sum_head += scm.arm_probabilities[a];
    }
    scm.arm_probabilities.back() = 1.0 - sum_head;

    const int n_atoms = 2 + static_cast<int>(g.next() * 4.0); // 2..5
    std::vector<double> atoms;
    for (int t = 0; t < n_atoms; ++t) atoms.push_back(g.next(-1.0, 1.0));
    std::sort(atoms.begin(), atoms.end());
    std::vector<double> atom_probs;
    double prob_total = 0.0;
    for (int t = 0; t < n_atoms; ++t) {
        atom_probs.push_back(0.2 + g.next());
        prob_total += atom_probs.back();
    }
    double head = 0.0;
    for (int t = 0; t < n_atoms; ++t) {
        atom_probs[t] = t + 1 < n_atoms ? atom_probs[t] / prob_total : 1.0 - head;
        head += atom_probs[t];
    }
    for (int t = 0; t < n_atoms; ++t) scm.support.emplace_back(atoms[t], atom_probs[t]);

    const bool increasing = g.next() < 0.5; // shared direction in monotone mode
    for (int a = 0; a < n_arms; ++a) {
        const bool arm_increasing = monotone ? increasing : (g.next() < 0.5);
        std::vector<double> per_arm;
        double level = g.next(-2.0, 2.0);
        for (int t = 0; t < n_atoms; ++t) {
            if (t > 0) {
                const double step = g.next() < 0.3 ? 0.0 : g.next() * 1.5;
                level += arm_increasing ? step : -step;
            }
            per_arm.push_back(level);
        }
        if (!monotone && g.next() < 0.4) {
            // Scramble one arm outright.
            for (int t = 0; t < n_atoms; ++t) {
                std::swap(per_arm[static_cast<std::size_t>(g.next_index(per_arm.size()))],
                          per_arm[static_cast<std::size_t>(t)]);
            }
        }
        scm.outcomes.push_back(std::move(per_arm));
    }
    scm.validate();
    return scm;
}

} // namespace

DiscreteScm random_monotone_scm(std::uint64_t seed) { return random_scm_impl(seed, true); }

DiscreteScm random_scm(std::uint64_t seed) { return random_scm_impl(seed, false); }

} // namespace causalmoments
