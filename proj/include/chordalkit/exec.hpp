#pragma once

namespace chordalkit {

// Execution policy for the search kernels. Parallel variants use OpenMP and
// are required to return bit-identical results to the serial reference.
enum class Exec { serial, parallel };

} // namespace chordalkit
