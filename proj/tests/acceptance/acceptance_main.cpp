// Runs the numbered acceptance criteria and prints one PASS/FAIL line each.
//
//   pzbench_acceptance              all criteria
//   pzbench_acceptance 3 7          selected criteria

#include <cstdlib>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "selftest.hpp"

int main(int argc, char** argv) {
  using namespace pzbench::selftest;
  std::vector<int> ids;
  for (int i = 1; i < argc; ++i) {
    try {
      ids.push_back(std::stoi(argv[i]));
    } catch (const std::exception&) {
      std::cerr << "usage: " << argv[0] << " [criterion id ...]\n";
      return 64;
    }
  }
  if (ids.empty()) ids = criterion_ids();

  int failed = 0;
  for (int id : ids) {
    CriterionResult r;
    try {
      r = run_criterion(id);
    } catch (const std::out_of_range&) {
      std::cerr << "unknown criterion " << id << "\n";
      return 64;
    } catch (const std::exception& e) {
      std::cout << "FAIL [" << id << "] " << criterion_name(id)
                << ": threw " << e.what() << std::endl;
      ++failed;
      continue;
    }
    std::cout << summary_line(r) << std::endl;
    if (!r.pass()) ++failed;
  }
  std::cout << (ids.size() - static_cast<std::size_t>(failed)) << "/" << ids.size()
            << " criteria passed" << std::endl;
  return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
