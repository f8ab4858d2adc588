#include "rcq/kernels.hpp"

#include <atomic>
#include <cstdlib>

namespace rcq::kernels {

#ifdef RCQ_HAVE_AVX2_TU
const Ops* avx2_ops_table();
#endif

const Ops* avx2_ops() {
#if defined(RCQ_HAVE_AVX2_TU) && (defined(__x86_64__) || defined(_M_X64))
    if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma"))
        return avx2_ops_table();
#endif
    return nullptr;
}

namespace {

std::atomic<const Ops*> g_active{nullptr};

const Ops* choose() {
    if (const char* env = std::getenv("RCQ_KERNELS")) {
        std::string_view want(env);
        if (want == "scalar") return &scalar_ops();
        if (want == "avx2" && avx2_ops()) return avx2_ops();
    }
    if (const Ops* v = avx2_ops()) return v;
    return &scalar_ops();
}

}  // namespace

const Ops& active_ops() {
    const Ops* p = g_active.load(std::memory_order_acquire);
    if (!p) {
        p = choose();
        g_active.store(p, std::memory_order_release);
    }
    return *p;
}

bool set_active(std::string_view name) {
    if (name == "scalar") {
        g_active.store(&scalar_ops(), std::memory_order_release);
        return true;
    }
    if (name == "avx2") {
        if (const Ops* v = avx2_ops()) {
            g_active.store(v, std::memory_order_release);
            return true;
        }
        return false;
    }
    return false;
}

}  // namespace rcq::kernels
