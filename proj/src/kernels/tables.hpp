#pragma once

#include "dmsem/kernels.hpp"

namespace dmsem::kernels {

namespace scalar {
const KernelTable& table() noexcept;
}
#if defined(DMSEM_HAVE_AVX2)
namespace avx2 {
const KernelTable& table() noexcept;
}
#endif
#if defined(DMSEM_HAVE_NEON)
namespace neon {
const KernelTable& table() noexcept;
}
#endif

}  // namespace dmsem::kernels
