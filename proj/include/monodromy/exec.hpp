#pragma once

namespace monodromy {

// Sweep kernels come in two flavors: a serial reference and an OpenMP
// version.  Results are identical by construction; tests compare them and
// the bench tool times them.
enum class ExecPolicy { Serial, Parallel };

bool parallel_enabled(); // true when compiled with OpenMP

} // namespace monodromy
