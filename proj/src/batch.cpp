#include "rcanon/batch.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include "rcanon/errors.hpp"

namespace rcanon {

namespace {

template <typename T, typename Fn>
void run_one(Outcome<T>& slot, Fn&& fn) {
    try {
        slot.value = fn();
    } catch (const Error& e) {
        slot.error_name = e.name();
        slot.error_message = e.what();
    } catch (const std::exception& e) {
        slot.error_name = "std::exception";
        slot.error_message = e.what();
    }
}

template <typename T, typename Fn>
std::vector<Outcome<T>> map_items(std::size_t n, Execution exec, Fn fn) {
    std::vector<Outcome<T>> out(n);
    const auto count = static_cast<std::ptrdiff_t>(n);
    if (exec == Execution::Serial) {
        for (std::ptrdiff_t i = 0; i < count; ++i)
            run_one(out[i], [&] { return fn(static_cast<std::size_t>(i)); });
        return out;
    }
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < count; ++i)
        run_one(out[i], [&] { return fn(static_cast<std::size_t>(i)); });
    return out;
}

} // namespace

std::mt19937_64 item_rng(std::uint64_t seed, std::size_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    return std::mt19937_64(seq);
}

int batch_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

std::vector<Outcome<ValidationReport>> validate_batch(std::span<const MatrixPair> pairs, Execution exec) {
    return map_items<ValidationReport>(pairs.size(), exec, [&](std::size_t i) { return validate_pair(pairs[i]); });
}

std::vector<Outcome<Canonicalization>> canonicalize_batch(std::span<const MatrixPair> pairs, Execution exec) {
    return map_items<Canonicalization>(pairs.size(), exec, [&](std::size_t i) { return canonicalize(pairs[i]); });
}

std::vector<Outcome<GeneratedInstance>> generate_batch(std::span<const GeneratorSpec> specs, std::uint64_t seed,
                                                       Execution exec) {
    return map_items<GeneratedInstance>(specs.size(), exec, [&](std::size_t i) {
        auto rng = item_rng(seed, i);
        return random_instance(specs[i], rng);
    });
}

} // namespace rcanon
