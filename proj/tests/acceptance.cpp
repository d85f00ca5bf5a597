// Acceptance gate: one line per criterion, exit 0 iff all requested pass.
// Usage: acceptance [criterion-numbers...]; default runs 1-6 and 8-10,
// "7" selects the long-running deep battery.
#include <cstdlib>
#include <cstring>
#include <iostream>
#include <set>
#include <string>

#include "gamma/errors.hpp"
#include "gamma/suites.hpp"

namespace {

struct Criterion {
  int number;
  const char* label;
  const char* suite;
  bool deep;
};

const Criterion kCriteria[] = {
    {1, "field suite", "field", false},
    {2, "group suite", "group", false},
    {3, "construction suite", "construction", false},
    {4, "f=1 components", "f1", false},
    {5, "f=2 components", "f2", false},
    {6, "f=3 connected graph", "f3", false},
    {7, "f=4 deep battery", "f4", true},
    {8, "f=5 classes", "f5-classes", false},
    {9, "Z_p family", "zp", false},
    {10, "determinism", "determinism", false},
};

}  // namespace

int main(int argc, char** argv) {
  std::set<int> wanted;
  for (int i = 1; i < argc; ++i) wanted.insert(std::atoi(argv[i]));
  if (wanted.empty())
    for (const Criterion& c : kCriteria)
      if (c.number != 7) wanted.insert(c.number);

  bool all_ok = true;
  for (const Criterion& c : kCriteria) {
    if (!wanted.count(c.number)) continue;
    gam::SuiteOptions opt;
    opt.deep = c.deep;
    bool ok = false;
    std::string note;
    try {
      const gam::SuiteResult r = gam::run_suite(c.suite, opt);
      ok = r.all_pass();
      if (!ok) {
        for (const gam::Claim& cl : r.claims)
          if (!cl.pass)
            note += " [" + cl.id + ": measured '" + cl.measured +
                    "', expected '" + cl.expected + "']";
      }
    } catch (const gam::Error& e) {
      note = std::string(" [") + e.what() + "]";
    }
    std::cout << "criterion " << c.number << " (" << c.label
              << "): " << (ok ? "PASS" : "FAIL") << note << std::endl;
    all_ok = all_ok && ok;
  }
  return all_ok ? 0 : 1;
}
