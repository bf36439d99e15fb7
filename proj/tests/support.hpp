#pragma once

// Small deterministic generators for the property tests.

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "regpoly/enumerate.hpp"

namespace regpoly::testing {

class Gen {
public:
    explicit Gen(unsigned long long seed = 0x5eedULL) : rng_(seed) {}

    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    bool coin() { return integer(0, 1) == 1; }
    template <class T>
    const T& pick(const std::vector<T>& xs) { return xs[static_cast<std::size_t>(integer(0, static_cast<int>(xs.size()) - 1))]; }

    Rational rational(int bound = 20) {
        int den = integer(1, bound);
        return Rational(integer(-bound, bound), den);
    }
    ExactNumber number(int radicand, int bound = 20) { return {rational(bound), rational(bound), radicand}; }

    ShapeWord word(const std::vector<Direction>& alphabet) {
        ShapeWord w;
        for (auto& s : w.symbols) s = pick(alphabet);
        return w;
    }

    std::vector<int> permutation(int n) {
        std::vector<int> p(n);
        for (int i = 0; i < n; ++i) p[i] = i;
        std::shuffle(p.begin(), p.end(), rng_);
        return p;
    }

private:
    std::mt19937_64 rng_;
};

inline double approx(const ExactNumber& x) { return static_cast<double>(x.to_long_double()); }

inline std::array<double, 3> approx(const ExactVec3& v) { return {approx(v[0]), approx(v[1]), approx(v[2])}; }

inline double distance(const std::array<double, 3>& a, const std::array<double, 3>& b) {
    double s = 0;
    for (int i = 0; i < 3; ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
    return std::sqrt(s);
}

// Every admissible (seed, lengths) configuration.
inline std::vector<std::pair<SeedKind, LengthConfig>> admissible_configs() {
    std::vector<std::pair<SeedKind, LengthConfig>> out;
    for (auto k : kAllSeedKinds)
        for (const auto& a : admissible_edge_lengths(k)) out.emplace_back(k, a.lengths);
    return out;
}

// Run once per test binary; the pipeline is deterministic.
inline const PipelineResult& pruned_result() {
    static const PipelineResult r = run_pipeline({});
    return r;
}

inline const ClassificationRecord& record(const std::string& id) {
    for (const auto& r : pruned_result().records)
        if (r.id == id) return r;
    throw std::out_of_range("no record " + id);
}

}  // namespace regpoly::testing
