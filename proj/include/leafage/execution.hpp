#pragma once

namespace leafage {

/// Selects the OpenMP kernel or the serial reference path. Both produce
/// identical results; the serial path is kept for testing and benchmarking.
enum class Execution { serial, parallel };

/// Threads OpenMP would use for a parallel region (1 without OpenMP).
int max_threads() noexcept;

}  // namespace leafage
