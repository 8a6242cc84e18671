// Runtime backend selection for the data-parallel kernels.
#include "semigraph/kernels.hpp"

#include <cstdlib>

namespace semigraph::kernels {

#if defined(__x86_64__) || defined(__i386__)
const Ops* avx2_ops_impl();
#endif
#if defined(__aarch64__)
const Ops* neon_ops_impl();
#endif

const Ops* avx2_ops() {
#if defined(__x86_64__) || defined(__i386__)
    if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) {
        return avx2_ops_impl();
    }
#endif
    return nullptr;
}

const Ops* neon_ops() {
#if defined(__aarch64__)
    return neon_ops_impl();
#else
    return nullptr;
#endif
}

std::vector<const Ops*> available() {
    std::vector<const Ops*> out{&scalar_ops()};
    if (const Ops* simd = avx2_ops()) out.push_back(simd);
    if (const Ops* simd = neon_ops()) out.push_back(simd);
    return out;
}

namespace {

const Ops* lookup(std::string_view name) {
    if (name == "scalar") return &scalar_ops();
    if (name == "avx2") return avx2_ops();
    if (name == "neon") return neon_ops();
    return nullptr;
}

const Ops* initial_choice() {
    if (const char* env = std::getenv("SEMIGRAPH_KERNELS")) {
        if (const Ops* ops = lookup(env)) return ops;
    }
    if (const Ops* ops = avx2_ops()) return ops;
    if (const Ops* ops = neon_ops()) return ops;
    return &scalar_ops();
}

const Ops*& active_slot() {
    static const Ops* slot = initial_choice();
    return slot;
}

} // namespace

const Ops& active() { return *active_slot(); }

bool select(std::string_view name) {
    const Ops* ops = lookup(name);
    if (!ops) return false;
    active_slot() = ops;
    return true;
}

} // namespace semigraph::kernels
