#include "orthokit/rng.hpp"

#include <cmath>

#include "orthokit/errors.hpp"

namespace orthokit {

ComplexMatrix Rng::gaussian(std::size_t rows, std::size_t cols) {
    ComplexMatrix m(rows, cols);
    for (auto& v : m.data()) v = cgauss();
    return m;
}

ComplexMatrix Rng::unit_vector(std::size_t dim) {
    ComplexMatrix v = gaussian(dim, 1);
    double n = vector_norm(v);
    while (n < 1e-6) {
        v = gaussian(dim, 1);
        n = vector_norm(v);
    }
    v *= cplx{1.0 / n, 0.0};
    return v;
}

ComplexMatrix Rng::unitary(std::size_t n) {
    // Gram-Schmidt on a Gaussian matrix with a re-orthogonalization pass.
    ComplexMatrix g = gaussian(n, n);
    ComplexMatrix q(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        ComplexMatrix v = g.col(j);
        for (int pass = 0; pass < 2; ++pass)
            for (std::size_t k = 0; k < j; ++k) {
                const ComplexMatrix qk = q.col(k);
                v -= inner(v, qk) * qk;
            }
        const double nrm = vector_norm(v);
        if (nrm < 1e-10) throw OrthokitError("Rng::unitary: degenerate Gaussian draw");
        v *= cplx{1.0 / nrm, 0.0};
        q.set_col(j, v);
    }
    return q;
}

}  // namespace orthokit
