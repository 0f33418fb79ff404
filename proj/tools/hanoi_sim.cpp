#include <cstdio>
#include <exception>
#include <iostream>

#include "hanoi_rl/reporting/scenario.hpp"

int main(int argc, char** argv) {
  using namespace hanoi_rl::reporting;
  try {
    RunRequest req = parse_cli(argc, argv);
    auto results = run_scenario(req);
    for (const auto& r : results) {
      std::cout << r.spec.name << '\n' << format_csv(r.curve);
      std::int64_t truncated = 0;
      for (const auto& p : r.curve) truncated += p.truncated_episodes;
      if (truncated > 0) std::cerr << "warning: " << r.spec.name << " truncated " << truncated << " episodes\n";
    }
    for (const auto& f : write_outputs(req, results)) std::cout << "wrote " << (req.out_dir / f).string() << '\n';
    return 0;
  } catch (const HelpRequested& h) {
    std::cout << h.text;
    return 0;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\nRun with --help for usage.\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
