#include <benchmark/benchmark.h>

// the system benchmark_main archive is unusable here (stale LTO bytecode),
// so the entry point lives in this translation unit
BENCHMARK_MAIN();
