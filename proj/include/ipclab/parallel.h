#ifndef IPCLAB_PARALLEL_H_
#define IPCLAB_PARALLEL_H_

#include <functional>

namespace ipclab {

// Thread count used when the caller passes 0: IPC_LAB_THREADS if set to a
// positive integer, else the hardware concurrency (at least 1).
int DefaultThreadCount();
int ResolveThreads(int requested);

// Runs body(i) for i in [0, count) on up to `threads` workers. Indices are
// handed out dynamically; callers write results into per-index slots and
// reduce afterwards, so the outcome never depends on scheduling. The first
// exception thrown by any body is rethrown after all workers stop.
void ParallelFor(int count, int threads, const std::function<void(int)>& body);

}  // namespace ipclab

#endif  // IPCLAB_PARALLEL_H_
