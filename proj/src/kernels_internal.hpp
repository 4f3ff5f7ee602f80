#pragma once

#include "egan/kernels.hpp"

// Variant factories.  Each returns nullptr when the variant was not compiled
// for this architecture or the CPU lacks the required features at runtime.

namespace egan::kern {

const Kernels* avx2_kernels();
const Kernels* neon_kernels();

} // namespace egan::kern
