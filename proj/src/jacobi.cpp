#include "asearch/kernels.hpp"
#include "asearch/linalg.hpp"

namespace asearch {

Eigensystem eigendecompose(const HermitianOperator& h)
{
    return kernels::omp::jacobi(h);
}

} // namespace asearch
