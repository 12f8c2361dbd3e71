#pragma once

#include <cstddef>

namespace wskit {

/// Worker cap for the OpenMP kernels. Resolution order: explicit
/// set_max_threads() override, then the WSKIT_THREADS environment variable,
/// then the OpenMP default. A cap of 1 selects the serial reference paths.
int max_threads();
void set_max_threads(int n);

bool parallel_enabled();

}  // namespace wskit
