#pragma once

// Execution policy for the data-parallel kernels. Every kernel that has an
// OpenMP path keeps a serial reference implementation behind Exec::serial;
// tests compare the two and bench/ times them.

namespace unram {

enum class Exec { serial, parallel };

int max_threads();

}  // namespace unram
