#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rcanon/instance.hpp"

namespace rcanon {

enum class Execution { Serial, Parallel };

/// Result of one batch item; failures keep the error name and message.
template <typename T>
struct Outcome {
    std::optional<T> value;
    std::string error_name;
    std::string error_message;

    bool ok() const { return value.has_value(); }
};

std::vector<Outcome<ValidationReport>> validate_batch(std::span<const MatrixPair> pairs,
                                                      Execution exec = Execution::Parallel);

std::vector<Outcome<Canonicalization>> canonicalize_batch(std::span<const MatrixPair> pairs,
                                                          Execution exec = Execution::Parallel);

/// Item i draws from its own generator seeded with (seed, i), so results do
/// not depend on scheduling.
std::vector<Outcome<GeneratedInstance>> generate_batch(std::span<const GeneratorSpec> specs, std::uint64_t seed,
                                                       Execution exec = Execution::Parallel);

std::mt19937_64 item_rng(std::uint64_t seed, std::size_t index);

/// Threads the parallel path would use (1 without OpenMP).
int batch_threads();

} // namespace rcanon
