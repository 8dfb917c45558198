// Minimal assertion harness shared by the test binaries.
#pragma once

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>

namespace testsupport {

inline int failures = 0;
inline int checks = 0;

inline void report(bool ok, const char* expr, const char* file, int line) {
  ++checks;
  if (!ok) {
    ++failures;
    std::fprintf(stderr, "FAILED %s:%d: %s\n", file, line, expr);
  }
}

inline void report_near(double a, double b, double tol, const char* ea, const char* eb,
                        const char* file, int line) {
  ++checks;
  if (!(std::abs(a - b) <= tol)) {
    ++failures;
    std::fprintf(stderr, "FAILED %s:%d: |%s - %s| = %.17g > %.3g  (%.17g vs %.17g)\n",
                 file, line, ea, eb, std::abs(a - b), tol, a, b);
  }
}

inline int finish(const char* name) {
  if (failures == 0) {
    std::printf("%s: %d checks passed\n", name, checks);
    return 0;
  }
  std::printf("%s: %d of %d checks FAILED\n", name, failures, checks);
  return 1;
}

}  // namespace testsupport

#define REQUIRE(expr) ::testsupport::report(static_cast<bool>(expr), #expr, __FILE__, __LINE__)
#define REQUIRE_NEAR(a, b, tol) ::testsupport::report_near((a), (b), (tol), #a, #b, __FILE__, __LINE__)
#define REQUIRE_THROWS(stmt, extype)                                                   \
  do {                                                                                 \
    bool caught_ = false;                                                              \
    try {                                                                              \
      stmt;                                                                            \
    } catch (const extype&) {                                                          \
      caught_ = true;                                                                  \
    } catch (...) {                                                                    \
    }                                                                                  \
    ::testsupport::report(caught_, "throws " #extype ": " #stmt, __FILE__, __LINE__);  \
  } while (0)
#define TEST_MAIN(name)                     \
  int main() { return ::testsupport::finish(name); }
