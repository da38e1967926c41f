#pragma once

namespace rlii {

// Batch kernels (bench rows, corpus token counting) come in two flavors: a
// plain serial loop kept as the reference, and an OpenMP parallel-for. Both
// must produce identical results; the tests compare them.
enum class ExecMode { serial, parallel };

// Number of threads the parallel mode will use (1 without OpenMP).
int hardware_threads() noexcept;

}  // namespace rlii
