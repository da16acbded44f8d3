#pragma once

namespace tmf {

// Resource caps protect against runaway memory/time on the exponential-size
// levels. TM_MAX_LEVEL in the environment overrides every default cap.
int resource_cap(int default_cap);

// Worker pool size used when an operation is called with threads == 0.
// The CLI --threads flag routes through set_thread_cap().
int thread_cap();
void set_thread_cap(int n);
int resolve_threads(int requested);

}  // namespace tmf
