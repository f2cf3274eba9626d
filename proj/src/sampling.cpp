#include "block/sampling.hpp"

#include <limits>

namespace block {

std::int64_t Sampler::uniform(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    // Rejection sampling keeps the draw unbiased.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t w = rng_();
    while (w >= limit)
        w = rng_();
    return lo + static_cast<std::int64_t>(w % span);
}

Scalar Sampler::coefficient() {
    std::int64_t p = 0;
    while (p == 0)
        p = uniform(-9, 9);
    return {p, uniform(1, 9)};
}

BasisIndex Sampler::index(std::int64_t alpha_lo, std::int64_t alpha_hi, std::int64_t i_max) {
    const auto a = uniform(alpha_lo, alpha_hi);
    return {a, uniform(0, i_max)};
}

Element Sampler::element(bool with_central) {
    Element x;
    const auto n = uniform(1, 5);
    for (std::int64_t k = 0; k < n; ++k) {
        const auto idx = index();
        x.add_term(idx, coefficient());
    }
    if (with_central && coin())
        x.add_central(coefficient());
    return x;
}

Element Sampler::witt_element() {
    Element x;
    const auto n = uniform(1, 5);
    for (std::int64_t k = 0; k < n; ++k) {
        const auto a = uniform(-6, 6);
        x.add_term({a, 0}, coefficient());
    }
    return x;
}

AutParams Sampler::aut_params() {
    Scalar mu = coefficient();
    Scalar nu = coefficient();
    return {mu, nu, coin() ? 1 : -1};
}

} // namespace block
