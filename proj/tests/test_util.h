#ifndef JONESRT_TESTS_TEST_UTIL_H_
#define JONESRT_TESTS_TEST_UTIL_H_

#include <algorithm>
#include <filesystem>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "jonesrt/cyclotomic.h"
#include "jonesrt/diagram.h"
#include "jonesrt/diagram_io.h"

namespace jonesrt::testing {

inline std::string DataDir() { return JONESRT_TEST_DATA_DIR; }

inline LinkDiagram LoadCorpus(const std::string& name) {
  return ParseDiagram(ReadTextFile(DataDir() + "/corpus/" + name + ".json"));
}

inline std::vector<std::pair<std::string, LinkDiagram>> LoadAllCorpus() {
  std::vector<std::pair<std::string, LinkDiagram>> out;
  for (const auto& entry : std::filesystem::directory_iterator(DataDir() + "/corpus")) {
    if (entry.path().extension() != ".json") continue;
    out.emplace_back(entry.path().stem().string(),
                     ParseDiagram(ReadTextFile(entry.path().string())));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

}  // namespace jonesrt::testing

namespace jonesrt {

inline void PrintTo(const LaurentPolynomial& p, std::ostream* os) { *os << p.ToString("A"); }
inline void PrintTo(const CyclotomicValue& v, std::ostream* os) { *os << v.ToString(); }

}  // namespace jonesrt

#endif  // JONESRT_TESTS_TEST_UTIL_H_
