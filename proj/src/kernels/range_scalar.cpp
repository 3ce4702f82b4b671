#include "collatz/range_kernel.hpp"

#include "lane.hpp"

namespace collatz::kernels {

void orbit_kernel_scalar(std::span<const std::uint64_t> starts, std::uint64_t budget,
                         std::span<OrbitStat> out) {
    for (std::size_t i = 0; i < starts.size(); ++i) {
        detail::Lane s{};
        if (detail::prime_lane(starts[i], budget, s, out[i])) continue;
        do {
            detail::scalar_col_step(s);
        } while (!detail::finished_at_odd(s, budget, out[i]));
    }
}

}  // namespace collatz::kernels
