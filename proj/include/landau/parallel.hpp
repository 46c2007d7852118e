#pragma once

namespace landau {

// Selects the OpenMP kernel or its serial reference. Both produce identical results.
enum class Exec { Serial, Parallel };

// Threads OpenMP would use for a parallel region (1 without OpenMP).
int max_threads();

}  // namespace landau
