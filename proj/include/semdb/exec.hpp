#ifndef SEMDB_EXEC_HPP
#define SEMDB_EXEC_HPP

namespace semdb {

/// Batch operations come in two flavours: a plain serial loop that serves as
/// the reference implementation, and an OpenMP kernel over independent
/// entries. Both produce identical bytes; output is always assembled in
/// input order.
enum class ExecMode {
  Serial,
  Parallel,
};

/// True when the build has OpenMP support compiled in.
bool parallel_available();

}  // namespace semdb

#endif  // SEMDB_EXEC_HPP
