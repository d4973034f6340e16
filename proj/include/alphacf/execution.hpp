#pragma once

namespace alphacf {

/// Kernels with a data-parallel loop come in two flavours: an OpenMP one
/// and the serial reference it is tested against. Both produce identical
/// results.
enum class Execution { serial, parallel };

}  // namespace alphacf
