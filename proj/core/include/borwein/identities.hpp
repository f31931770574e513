#pragma once

#include <borwein/series.hpp>
#include <borwein/series_spec.hpp>

#include <functional>
#include <string>
#include <vector>

namespace borwein {

/// One machine-checkable q-series identity: both sides build an IntegerSeries
/// at a requested order and must agree coefficientwise.
struct IdentityRecord {
    std::string id;
    long default_order = 500;  // cubic-theta double sums default to 150
    std::function<IntegerSeries(long)> lhs;
    std::function<IntegerSeries(long)> rhs;
};

/// The fixed registry of identities used across the series apparatus.
const std::vector<IdentityRecord>& identity_registry();

struct IdentityOutcome {
    std::string id;
    long order = 0;
    bool ok = false;
    long first_mismatch = -1;
};

struct RegistryReport {
    std::vector<IdentityOutcome> outcomes;
    bool all_ok = false;
};

/// Verifies every registered identity to max(default_order, min_order).
RegistryReport run_registry(long min_order);

}  // namespace borwein
