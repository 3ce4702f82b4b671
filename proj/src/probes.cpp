#include "collatz/probes.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <set>
#include <thread>

#include "collatz/errors.hpp"
#include "collatz/orbit.hpp"

namespace collatz {
namespace {

// Walks `cycle` once with col_step and checks it closes.
bool certify_cycle(const std::vector<Nat>& cycle) {
    if (cycle.empty()) return false;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        const Nat& next = cycle[(i + 1) % cycle.size()];
        if (col_step(cycle[i]).value != next) return false;
    }
    return true;
}

struct NatWalk {
    bool converged;
    std::uint64_t steps;
    Nat peak;
};

NatWalk walk_to_one(const Nat& start, std::uint64_t budget) {
    NatWalk w{false, 0, start.is_odd() ? start : Nat{}};
    Nat x = start;
    while (!x.is_one() && w.steps < budget) {
        x = col_step(x).value;
        ++w.steps;
        if (x > w.peak) w.peak = x;
    }
    w.converged = x.is_one();
    return w;
}

// Running summary over starts visited in increasing order.
class RangeAccumulator {
public:
    void add(const Nat& start, bool converged, std::uint64_t steps, const Nat& peak) {
        note_convergence(start, converged, steps);
        if (!have_max_ || peak > max_) set_max(peak, start);
    }

    void add(std::uint64_t start, const kernels::OrbitStat& stat) {
        note_convergence(Nat{start}, stat.status == kernels::OrbitStatus::converged, stat.steps);
        if (!have_max_ || (max_small_ && stat.peak > max_u64_)) set_max(Nat{stat.peak}, Nat{start});
    }

    // `later` covers starts strictly above everything seen so far.
    void merge(const RangeAccumulator& later) {
        if (!later.all_converged_) {
            all_converged_ = false;
            if (!first_unconverged_) first_unconverged_ = later.first_unconverged_;
        }
        unconverged_ += later.unconverged_;
        total_steps_ += later.total_steps_;
        if (later.have_max_ && (!have_max_ || later.max_ > max_)) set_max(later.max_, later.worst_);
    }

    RangeSummary finish(const Nat& lo, const Nat& hi) const {
        return {lo, hi, all_converged_, max_, worst_, total_steps_, unconverged_, first_unconverged_};
    }

private:
    void note_convergence(const Nat& start, bool converged, std::uint64_t steps) {
        total_steps_ += steps;
        if (!converged) {
            ++unconverged_;
            if (all_converged_) first_unconverged_ = start;
            all_converged_ = false;
        }
    }

    void set_max(const Nat& peak, const Nat& start) {
        max_ = peak;
        worst_ = start;
        have_max_ = true;
        max_small_ = peak.fits_u64();
        max_u64_ = max_small_ ? peak.to_u64() : std::numeric_limits<std::uint64_t>::max();
    }

    bool all_converged_ = true;
    std::uint64_t unconverged_ = 0;
    std::uint64_t total_steps_ = 0;
    std::optional<Nat> first_unconverged_;
    bool have_max_ = false;
    bool max_small_ = true;
    std::uint64_t max_u64_ = 0;
    Nat max_;
    Nat worst_;
};

constexpr std::uint64_t kChunk = std::uint64_t{1} << 14;

RangeAccumulator run_chunk_u64(std::uint64_t first, std::uint64_t count, std::uint64_t budget,
                               kernels::KernelKind kernel) {
    std::vector<std::uint64_t> starts(count);
    for (std::uint64_t i = 0; i < count; ++i) starts[i] = first + i;
    std::vector<kernels::OrbitStat> stats(count);
    kernels::run_orbit_kernel(kernel, starts, budget, stats);

    RangeAccumulator acc;
    for (std::uint64_t i = 0; i < count; ++i) {
        if (stats[i].status == kernels::OrbitStatus::overflow) {
            const Nat start{starts[i]};
            const NatWalk w = walk_to_one(start, budget);
            acc.add(start, w.converged, w.steps, w.peak);
        } else {
            acc.add(starts[i], stats[i]);
        }
    }
    return acc;
}

RangeAccumulator run_chunk_nat(const Nat& first, std::uint64_t count, std::uint64_t budget) {
    RangeAccumulator acc;
    Nat start = first;
    for (std::uint64_t i = 0; i < count; ++i) {
        const NatWalk w = walk_to_one(start, budget);
        acc.add(start, w.converged, w.steps, w.peak);
        start += Nat{1};
    }
    return acc;
}

}  // namespace

CycleReport cycle_probe(const Nat& x1, std::uint64_t max_steps) {
    if (x1.is_zero()) throw DomainError("cycle_probe: x1 must be a positive integer (got 0)");
    if (max_steps == 0) throw DomainError("cycle_probe: max_steps must be >= 1");

    CycleReport report{x1, ProbeStatus::inconclusive, {}, false, 0};
    auto advance = [&report](const Nat& x) {
        ++report.steps;
        return col_step(x).value;
    };

    // Brent: the tortoise jumps to the hare at powers of two.
    std::uint64_t power = 1;
    std::uint64_t lambda = 1;
    Nat tortoise = x1;
    Nat hare = advance(x1);
    while (tortoise != hare && !hare.is_one()) {
        if (report.steps >= max_steps) return report;
        if (power == lambda) {
            tortoise = hare;
            power *= 2;
            lambda = 0;
        }
        hare = advance(hare);
        ++lambda;
    }

    if (hare.is_one()) {
        report.cycle_members = {Nat{1}};
    } else {
        // Cycle of length lambda; find where the orbit enters it.
        Nat lead = x1;
        Nat trail = x1;
        for (std::uint64_t i = 0; i < lambda; ++i) lead = col_step(lead).value;
        while (lead != trail) {
            lead = col_step(lead).value;
            trail = col_step(trail).value;
        }
        report.cycle_members.reserve(lambda);
        Nat x = trail;
        for (std::uint64_t i = 0; i < lambda; ++i) {
            report.cycle_members.push_back(x);
            x = col_step(x).value;
        }
    }

    if (!certify_cycle(report.cycle_members)) {
        throw VerificationFailure("cycle_probe: reported cycle does not close under col_step");
    }
    report.status = ProbeStatus::cycle_found;
    report.is_trivial = report.cycle_members.size() == 1 && report.cycle_members.front().is_one();
    return report;
}

GrowthCensus growth_census(const Nat& x1, std::uint64_t horizon) {
    if (x1.is_zero()) throw DomainError("growth_census: x1 must be a positive integer (got 0)");
    if (horizon == 0) throw DomainError("growth_census: horizon must be >= 1");

    GrowthCensus census{x1, horizon, {}, {}, 0, 0, false};
    std::set<Nat, std::less<>> distinct;
    Nat x = x1;
    for (std::uint64_t i = 1; i <= horizon; ++i) {
        if (x.is_one()) {
            census.terminated = true;
            break;
        }
        ++census.examined;
        Nat next = col_step(x).value;
        if (next > x) {
            Nat y = (x - Nat{3}) >> 2;
            census.growth_indices.push_back(i);
            distinct.insert(y);
            census.y_values.push_back(std::move(y));
        }
        x = std::move(next);
    }
    census.distinct_y = distinct.size();
    return census;
}

RangeSummary verify_range(const Nat& lo, const Nat& hi, std::uint64_t step_budget, unsigned workers,
                          kernels::KernelKind kernel) {
    if (lo.is_zero()) throw DomainError("verify_range: lo must be >= 1");
    if (lo > hi) {
        throw DomainError("verify_range: invalid range, lo (" + lo.to_string() + ") > hi (" +
                          hi.to_string() + ")");
    }
    if (step_budget == 0) throw DomainError("verify_range: step budget must be >= 1");
    if (workers == 0) throw DomainError("verify_range: workers must be >= 1");
    if (kernel == kernels::KernelKind::automatic) kernel = kernels::best_kernel();
    if (!kernels::kernel_available(kernel)) {
        throw DomainError("verify_range: kernel '" + std::string(kernels::kernel_name(kernel)) +
                          "' is not available on this machine");
    }

    const Nat span = hi - lo + Nat{1};
    if (!span.fits_u64() || span.to_u64() == std::numeric_limits<std::uint64_t>::max()) {
        throw DomainError("verify_range: range holds too many starts");
    }
    const std::uint64_t count = span.to_u64();
    const std::uint64_t chunks = (count + kChunk - 1) / kChunk;
    const bool small = hi.fits_u64();
    const std::uint64_t lo_u64 = small ? lo.to_u64() : 0;

    std::vector<RangeAccumulator> partial(chunks);
    std::atomic<std::uint64_t> cursor{0};
    auto work = [&] {
        for (std::uint64_t c = cursor++; c < chunks; c = cursor++) {
            const std::uint64_t offset = c * kChunk;
            const std::uint64_t n = std::min(kChunk, count - offset);
            partial[c] = small ? run_chunk_u64(lo_u64 + offset, n, step_budget, kernel)
                               : run_chunk_nat(lo + Nat{offset}, n, step_budget);
        }
    };

    const auto threads = static_cast<unsigned>(std::min<std::uint64_t>(workers, chunks));
    if (threads <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
    }

    RangeAccumulator total;
    for (const auto& p : partial) total.merge(p);
    return total.finish(lo, hi);
}

}  // namespace collatz
