#pragma once

namespace mip {

// Process-wide switch between the OpenMP kernels and the serial reference
// ones. Defaults to parallel when compiled with OpenMP. Both paths must
// produce identical results; tests compare them directly.
void set_parallel(bool on);
bool parallel_enabled();

int hardware_threads();

} // namespace mip
