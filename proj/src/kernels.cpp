#include "egan/kernels.hpp"

#include "kernels_internal.hpp"

#include <cstdlib>

namespace egan::kern {
namespace {

const Kernels* resolve_active() {
    const char* req = std::getenv("EGAN_VERIFY_SIMD");
    if (req != nullptr && std::string_view(req) != "auto") {
        const Kernels* k = kernels_by_name(req);
        if (k != nullptr)
            return k;
        // Unknown or unsupported request: fall back rather than abort, the
        // scalar path is always a valid answer.
        return &scalar_kernels();
    }
    if (const Kernels* k = avx2_kernels())
        return k;
    if (const Kernels* k = neon_kernels())
        return k;
    return &scalar_kernels();
}

} // namespace

const Kernels& active_kernels() {
    static const Kernels* active = resolve_active();
    return *active;
}

std::vector<const Kernels*> available_kernels() {
    std::vector<const Kernels*> out;
    out.push_back(&scalar_kernels());
    if (const Kernels* k = avx2_kernels())
        out.push_back(k);
    if (const Kernels* k = neon_kernels())
        out.push_back(k);
    return out;
}

const Kernels* kernels_by_name(std::string_view name) {
    if (name == "scalar")
        return &scalar_kernels();
    if (name == "avx2")
        return avx2_kernels();
    if (name == "neon")
        return neon_kernels();
    return nullptr;
}

} // namespace egan::kern
