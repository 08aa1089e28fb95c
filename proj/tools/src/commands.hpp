#pragma once

#include <cstdint>

#include "report.hpp"
#include "workspace.hpp"

namespace coarsetr::cli {

/// Defaults shared by all commands; task fields override them.
struct Options {
  std::size_t max_degree = 3;
  std::uint64_t window = 16;
  std::uint64_t seed = 0;
  unsigned threads = 1;
};

/// Runs one task object such as {"op": "homology", "space": "X"}. A missing
/// entity name means every entity of that kind in the workspace.
Output run_task(Workspace const& ws, Json const& task, Options const& opt);

/// Runs the workspace's task list on up to opt.threads threads; results keep
/// declaration order.
Output run_tasks(Workspace const& ws, Options const& opt);

}  // namespace coarsetr::cli
