#pragma once

namespace cdmlstm {

// Worker-thread cap for the OpenMP kernels. 0 or negative leaves the
// system default. Kernels assign each output cell to exactly one thread
// with a fixed inner summation order, so results are bit-identical for
// any thread count.
void set_threads(int n);
int max_threads();

}  // namespace cdmlstm
