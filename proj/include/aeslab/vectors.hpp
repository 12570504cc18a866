#pragma once

#include <string>
#include <vector>

namespace aeslab {

struct VectorResult {
  std::string name;
  bool passed = false;
  std::string detail;  // expected vs. actual on failure
};

// Published known-answer vectors: FIPS-197 Appendix C block vectors,
// SP 800-38A F.1/F.2/F.5 (ECB, CBC, CTR), SP 800-38C Appendix C examples
// 1-3 (CCM), and GCM test cases 1, 2, 4, 13 and 16.
std::vector<VectorResult> run_known_answer_suite();

}  // namespace aeslab
