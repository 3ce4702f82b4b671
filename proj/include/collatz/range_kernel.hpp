#pragma once

// Fixed-width orbit kernels for range verification.
//
// Each kernel walks a batch of 64-bit starts to 1 under the accelerated map
// and reports, per start, how many col_step applications it took and the
// largest odd value seen. Results are defined identically for every kernel,
// so they are interchangeable and tested against each other; the scalar one
// is the reference.

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace collatz::kernels {

enum class OrbitStatus : std::uint8_t {
    converged,  // reached 1 within the budget
    exhausted,  // budget spent before reaching 1
    overflow,   // an odd value above kMaxOddOperand needs 3x+1; redo in Nat
};

struct OrbitStat {
    std::uint64_t steps = 0;  // col_step applications performed
    std::uint64_t peak = 0;   // largest odd value seen (start included if odd)
    OrbitStatus status = OrbitStatus::converged;

    friend bool operator==(const OrbitStat&, const OrbitStat&) = default;
};

// Largest odd x for which 3x+1 stays below 2^63. Vector lanes compare as
// signed 64-bit, so everything kept in a lane must stay under 2^63.
inline constexpr std::uint64_t kMaxOddOperand = (std::uint64_t{1} << 61) - 1;

enum class KernelKind { automatic, scalar, avx2, neon };

[[nodiscard]] std::string_view kernel_name(KernelKind kind);
[[nodiscard]] bool parse_kernel(std::string_view name, KernelKind& out);

/// Whether `kind` was compiled in and the running CPU supports it.
[[nodiscard]] bool kernel_available(KernelKind kind);

/// The widest available kernel on this machine.
[[nodiscard]] KernelKind best_kernel();

[[nodiscard]] std::vector<KernelKind> available_kernels();

/// Fills out[i] for starts[i]. Every start must be >= 1 and budget >= 1.
/// `automatic` resolves to best_kernel(); an unavailable kind throws
/// DomainError.
void run_orbit_kernel(KernelKind kind, std::span<const std::uint64_t> starts,
                      std::uint64_t budget, std::span<OrbitStat> out);

// Individual kernels, exposed for equivalence tests and benchmarks.
void orbit_kernel_scalar(std::span<const std::uint64_t> starts, std::uint64_t budget,
                         std::span<OrbitStat> out);
#if defined(__x86_64__) || defined(_M_X64)
void orbit_kernel_avx2(std::span<const std::uint64_t> starts, std::uint64_t budget,
                       std::span<OrbitStat> out);
#endif
#if defined(__aarch64__)
void orbit_kernel_neon(std::span<const std::uint64_t> starts, std::uint64_t budget,
                       std::span<OrbitStat> out);
#endif

}  // namespace collatz::kernels
