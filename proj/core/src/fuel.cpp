#include "terminfer/fuel.hpp"

#include "terminfer/error.hpp"

namespace terminfer {

namespace {
thread_local FuelScope *active_scope = nullptr;
}

FuelScope::FuelScope(std::int64_t budget)
    : budget_(budget), remaining_(budget), outer_(active_scope) {
    active_scope = this;
}

FuelScope::~FuelScope() { active_scope = outer_; }

void charge_fuel(std::int64_t units) {
    FuelScope *scope = active_scope;
    if (scope == nullptr || scope->budget_ == FuelScope::kUnlimited)
        return;
    scope->remaining_ -= units;
    if (scope->remaining_ < 0)
        throw BudgetExceeded("fuel exhausted");
}

} // namespace terminfer
