#include <string>

#include "collatz/errors.hpp"
#include "collatz/range_kernel.hpp"

namespace collatz::kernels {

std::string_view kernel_name(KernelKind kind) {
    switch (kind) {
        case KernelKind::automatic: return "auto";
        case KernelKind::scalar: return "scalar";
        case KernelKind::avx2: return "avx2";
        case KernelKind::neon: return "neon";
    }
    return "unknown";
}

bool parse_kernel(std::string_view name, KernelKind& out) {
    for (auto k : {KernelKind::automatic, KernelKind::scalar, KernelKind::avx2, KernelKind::neon}) {
        if (kernel_name(k) == name) {
            out = k;
            return true;
        }
    }
    return false;
}

bool kernel_available(KernelKind kind) {
    switch (kind) {
        case KernelKind::automatic:
        case KernelKind::scalar:
            return true;
        case KernelKind::avx2:
#if defined(__x86_64__) || defined(_M_X64)
            return __builtin_cpu_supports("avx2") != 0;
#else
            return false;
#endif
        case KernelKind::neon:
#if defined(__aarch64__)
            return true;
#else
            return false;
#endif
    }
    return false;
}

KernelKind best_kernel() {
    if (kernel_available(KernelKind::avx2)) return KernelKind::avx2;
    if (kernel_available(KernelKind::neon)) return KernelKind::neon;
    return KernelKind::scalar;
}

std::vector<KernelKind> available_kernels() {
    std::vector<KernelKind> out;
    for (auto k : {KernelKind::scalar, KernelKind::avx2, KernelKind::neon}) {
        if (kernel_available(k)) out.push_back(k);
    }
    return out;
}

void run_orbit_kernel(KernelKind kind, std::span<const std::uint64_t> starts, std::uint64_t budget,
                      std::span<OrbitStat> out) {
    if (out.size() < starts.size()) throw DomainError("orbit kernel: output span too small");
    if (budget == 0) throw DomainError("orbit kernel: budget must be >= 1");
    for (auto s : starts) {
        if (s == 0) throw DomainError("orbit kernel: starts must be >= 1");
    }
    if (kind == KernelKind::automatic) kind = best_kernel();
    if (!kernel_available(kind)) {
        throw DomainError("orbit kernel '" + std::string(kernel_name(kind)) +
                          "' is not available on this machine");
    }
    switch (kind) {
#if defined(__x86_64__) || defined(_M_X64)
        case KernelKind::avx2: orbit_kernel_avx2(starts, budget, out); return;
#endif
#if defined(__aarch64__)
        case KernelKind::neon: orbit_kernel_neon(starts, budget, out); return;
#endif
        default: orbit_kernel_scalar(starts, budget, out); return;
    }
}

}  // namespace collatz::kernels
