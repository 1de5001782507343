#pragma once

#include <rainbow/error.hpp>
#include <rainbow/graph.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace rainbow {

/// SplitMix64 (Steele, Lea, Flood 2014): state advances by 0x9e3779b97f4a7c15
/// and is finalized with multipliers 0xbf58476d1ce4e5b9 and 0x94d049bb133111eb.
/// Used instead of std distributions so seeds reproduce across platforms.
class SplitMix64
{
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();

    /// Uniform in [0, bound) by rejection; bound > 0.
    std::uint64_t below(std::uint64_t bound);

    /// Uniform in [lo, hi].
    int between(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1)); }

    /// Uniform double in [0, 1) from the top 53 bits.
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool chance(double p) { return unit() < p; }

    /// Independent generator derived from this one's next output.
    SplitMix64 split() { return SplitMix64(next()); }

private:
    std::uint64_t state_;
};

enum class Model
{
    UniformRejection,
    HubAugmented,
    ExtremalPerturbed,
};

std::string to_string(Model m);
/// Accepts "uniform-rejection", "hub-augmented", "extremal-perturbed".
Model parse_model(const std::string & name);

struct GenModel
{
    Model model = Model::UniformRejection;
    int n = 10;
    std::uint64_t seed = 0;
    int max_attempts = 20000;
    /// extremal-perturbed only: number of extra v-w / v-v edges (default: drawn from the seed).
    std::optional<int> extra_edges;
};

class GeneratorExhausted : public Error
{
public:
    using Error::Error;
};

/// A connected, bridgeless, diameter-2 graph drawn from `model`. All three
/// properties are re-checked before returning.
///
/// - uniform-rejection: G(n, p) with p = min(0.95, 3 ln n / n), resampled
///   until eligible.
/// - hub-augmented: a star with random first/second shell sizes and random
///   edges inside and between the shells, vertex labels shuffled, resampled
///   until eligible.
/// - extremal-perturbed: G_k with k = (n - 1) / 2 plus random v_i-w_j and
///   v_i-v_j edges (these never break eligibility).
///
/// Throws PreconditionError for n < 4 and GeneratorExhausted after
/// max_attempts rejected samples.
Graph random_diam2_bridgeless(const GenModel & model);

} // namespace rainbow
