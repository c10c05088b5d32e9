#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "relureg/errors.hpp"

namespace relureg {

using Vec = std::vector<double>;

// Dense row-major matrix. Small networks only; no BLAS needed.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}

    double& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    double at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
    double* row(std::size_t r) { return data.data() + r * cols; }
    const double* row(std::size_t r) const { return data.data() + r * cols; }

    bool operator==(const Matrix&) const = default;
};

inline double dot(const Vec& a, const Vec& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline double norm2(const Vec& a) {
    double s = 0.0;
    for (double x : a) s += x * x;
    return std::sqrt(s);
}

inline Vec matvec(const Matrix& m, const Vec& v) {
    Vec out(m.rows, 0.0);
    for (std::size_t r = 0; r < m.rows; ++r) {
        const double* w = m.row(r);
        double s = 0.0;
        for (std::size_t c = 0; c < m.cols; ++c) s += w[c] * v[c];
        out[r] = s;
    }
    return out;
}

// c = a * b
inline Matrix matmul(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows, b.cols);
    for (std::size_t r = 0; r < a.rows; ++r) {
        for (std::size_t k = 0; k < a.cols; ++k) {
            const double ark = a.at(r, k);
            if (ark == 0.0) continue;
            const double* brow = b.row(k);
            double* orow = out.row(r);
            for (std::size_t c = 0; c < b.cols; ++c) orow[c] += ark * brow[c];
        }
    }
    return out;
}

// y += a * x
inline void axpy(double a, const Vec& x, Vec& y) {
    for (std::size_t i = 0; i < x.size(); ++i) y[i] += a * x[i];
}

// Deterministic RNG. mt19937_64 output is pinned by the standard; the
// distribution conversions are hand-rolled so streams do not depend on the
// standard library implementation.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    // [0, 1)
    double uniform01() { return (next_u64() >> 11) * (1.0 / 9007199254740992.0); }

    double uniform(double a, double b) { return a + (b - a) * uniform01(); }

    // Standard normal via Marsaglia polar, caching the spare value.
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = 2.0 * uniform01() - 1.0;
            v = 2.0 * uniform01() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double m = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * m;
        have_spare_ = true;
        return u * m;
    }

    // Uniform index in [0, n), rejection-sampled to avoid modulo bias.
    std::size_t index(std::size_t n) {
        if (n == 0) throw ValidationError("Rng::index: n must be positive");
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do {
            x = next_u64();
        } while (x >= limit);
        return static_cast<std::size_t>(x % n);
    }

private:
    std::mt19937_64 gen_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

template <typename T>
void shuffle(std::vector<T>& v, Rng& rng) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[rng.index(i)]);
}

// splitmix64 finalizer; gives independent sub-streams from one base seed.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t tag) {
    std::uint64_t z = base + 0x9E3779B97F4A7C15ULL * (tag + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

} // namespace relureg
