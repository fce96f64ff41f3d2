#include <cstdlib>
#include <string_view>

#include "artmod/numkit/kernels.hpp"

namespace artmod::numkit {

namespace {

const KernelTable& select() noexcept {
    if (const char* forced = std::getenv("ARTMOD_SIMD"); forced && std::string_view(forced) == "scalar") {
        return scalar_kernels();
    }
    if (const KernelTable* t = avx2_kernels()) return *t;
    return scalar_kernels();
}

}  // namespace

const KernelTable& kernels() noexcept {
    static const KernelTable& active = select();
    return active;
}

}  // namespace artmod::numkit
