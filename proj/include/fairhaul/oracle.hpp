#pragma once

#include <functional>

#include "fairhaul/budget.hpp"
#include "fairhaul/report.hpp"

namespace fairhaul {

/// Exact MMS-share by enumerating every assignment of leaves to agents (the
/// first leaf always goes to the first agent, later leaves to at most one new
/// agent at a time). The witness is the best leaf assignment completed by
/// repair_to_nonwasteful.
SolveReport brute_force_mms(const Instance& instance, const Budgets& budgets = {});

using AllocationVisitor = std::function<bool(const Allocation&)>;

/// Calls `visit` on every non-wasteful allocation: each assignment of leaves,
/// times each choice, per internal order, among the agents owning a leaf below
/// it. Stops early when `visit` returns false. Returns the number of visits.
std::int64_t enumerate_nonwasteful(const Instance& instance, const AllocationVisitor& visit,
                                   const Budgets& budgets = {});

/// Calls `visit` on all n^m allocations.
std::int64_t enumerate_allocations(const Instance& instance, const AllocationVisitor& visit,
                                   const Budgets& budgets = {});

/// min over all allocations of the maximum bundle cost.
Cost egalitarian_opt(const Instance& instance, const Budgets& budgets = {});

/// min over all allocations of the summed bundle cost, which is the total tree weight.
Cost utilitarian_opt(const Instance& instance);

/// No allocation makes every agent weakly better and one strictly better.
bool is_pareto_optimal(const Instance& instance, const Allocation& allocation, const Budgets& budgets = {});

enum class Welfare { Util, Egal };

const char* to_string(Welfare welfare);

struct PonwReport {
  Welfare benchmark = Welfare::Util;
  Cost best_nw = 0;
  Cost worst_nw = 0;
  Cost opt = 0;
  Rational optimistic_ratio;
  Rational pessimistic_ratio;
};

/// Price of non-wastefulness on one instance, by enumeration of both the
/// non-wasteful and the unrestricted allocations.
PonwReport ponw(const Instance& instance, Welfare benchmark, const Budgets& budgets = {});

}  // namespace fairhaul
