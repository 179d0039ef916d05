#include "tables.hpp"

#include <cstdlib>
#include <string_view>

namespace dmsem::kernels {

const char* to_string(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
    case Isa::neon: return "neon";
  }
  return "unknown";
}

const KernelTable* table_for(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar:
      return &scalar::table();
    case Isa::avx2:
#if defined(DMSEM_HAVE_AVX2)
      if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) return &avx2::table();
#endif
      return nullptr;
    case Isa::neon:
#if defined(DMSEM_HAVE_NEON)
      return &neon::table();
#else
      return nullptr;
#endif
  }
  return nullptr;
}

std::vector<Isa> available() {
  std::vector<Isa> out;
  for (Isa isa : {Isa::scalar, Isa::avx2, Isa::neon}) {
    if (table_for(isa) != nullptr) out.push_back(isa);
  }
  return out;
}

namespace {

const KernelTable& select() noexcept {
  if (const char* forced = std::getenv("DMSEM_KERNELS")) {
    const std::string_view want(forced);
    for (Isa isa : {Isa::scalar, Isa::avx2, Isa::neon}) {
      if (want == to_string(isa)) {
        if (const KernelTable* t = table_for(isa)) return *t;
      }
    }
  }
  // Prefer the widest available.
  for (Isa isa : {Isa::avx2, Isa::neon}) {
    if (const KernelTable* t = table_for(isa)) return *t;
  }
  return scalar::table();
}

}  // namespace

const KernelTable& active() noexcept {
  static const KernelTable& t = select();
  return t;
}

}  // namespace dmsem::kernels
