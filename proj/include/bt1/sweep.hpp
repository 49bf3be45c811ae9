#pragma once

// Deterministic (p, d) grid sweep emitting one CSV row per curve.

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "bt1/fermat.hpp"

namespace bt1 {

enum class SweepFamily { Quotient, Fermat };

struct SweepRequest {
    std::vector<std::uint64_t> primes;
    std::uint64_t d_min = 3;
    std::uint64_t d_max = 0;
    SweepFamily family = SweepFamily::Quotient;
    std::size_t workers = 1;
    std::uint64_t budget = kDefaultEnumerationBudget;
};

inline constexpr const char* kSweepHeader =
    "p,d,family,genus,p_rank,a_number,num_orbits,self_dual,multiset_json";

/// One CSV row (no trailing newline). Cells over budget keep p, d, family and
/// genus and carry BUDGET_EXCEEDED in the multiset column.
std::string sweep_row(std::uint64_t p, std::uint64_t d, SweepFamily family, std::uint64_t budget);

/// Rows sorted by p then d, byte-identical for any worker count.
void sweep(const SweepRequest& req, std::ostream& out);

std::string csv_quote(const std::string& field);

} // namespace bt1
