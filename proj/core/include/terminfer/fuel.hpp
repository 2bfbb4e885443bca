#pragma once

#include <cstdint>
#include <limits>

namespace terminfer {

/// Deterministic work budget. Domain operations charge the budget of the
/// innermost active FuelScope on the current thread; with no scope active
/// the work is free.
///
/// One unit is roughly one simplex pivot, one Fourier-Motzkin combination or
/// 64 truth-table entries. The command line maps milliseconds to fuel at
/// kFuelPerMillisecond.
class FuelScope {
public:
    static constexpr std::int64_t kUnlimited = std::numeric_limits<std::int64_t>::max();

    explicit FuelScope(std::int64_t budget);
    ~FuelScope();

    FuelScope(const FuelScope &) = delete;
    FuelScope &operator=(const FuelScope &) = delete;

    std::int64_t remaining() const { return remaining_; }
    std::int64_t spent() const { return budget_ - remaining_; }

private:
    friend void charge_fuel(std::int64_t);

    std::int64_t budget_;
    std::int64_t remaining_;
    FuelScope *outer_;
};

inline constexpr std::int64_t kFuelPerMillisecond = 1000;

/// Throws BudgetExceeded when the active scope is exhausted.
void charge_fuel(std::int64_t units = 1);

} // namespace terminfer
