#pragma once

#include <cstdint>
#include <random>

#include "orthokit/complex_matrix.hpp"

namespace orthokit {

/// Seeded random source for matrices, unit vectors and Haar-ish unitaries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    double gauss() { return normal_(gen_); }
    cplx cgauss() { return {normal_(gen_), normal_(gen_)}; }
    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(gen_);
    }
    std::uint64_t integer() { return gen_(); }

    ComplexMatrix gaussian(std::size_t rows, std::size_t cols);
    ComplexMatrix unit_vector(std::size_t dim);
    ComplexMatrix unitary(std::size_t n);

private:
    std::mt19937_64 gen_;
    std::normal_distribution<double> normal_{0.0, 1.0};
};

}  // namespace orthokit
