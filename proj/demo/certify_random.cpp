// Draws a random point set, builds a witness box for D* >= d/(12n) and, in low
// dimension, compares it with the exact star discrepancy.
//
//   certify_random [n] [d] [seed]

#include <cstdlib>
#include <iostream>

#include "stardisc/stardisc.hpp"

int main(int argc, char** argv) {
  const std::size_t n = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 500;
  const std::size_t d = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 2;
  const std::uint64_t seed = argc > 3 ? std::strtoull(argv[3], nullptr, 10) : 1;

  const auto ps = stardisc::gen_random(n, d, seed);
  const auto cert = stardisc::theorem1_witness(ps);
  std::cout << "case        " << stardisc::to_string(cert.case_label) << '\n'
            << "measured    " << cert.measured << " (" << stardisc::to_string(cert.side)
            << ")\n"
            << "guaranteed  " << cert.guaranteed
            << (cert.guarantee_valid ? "" : " (n < 250d, not certified)") << '\n';
  if (d <= 2) {
    const auto exact = stardisc::star_discrepancy_exact(ps);
    std::cout << "exact D*    " << exact.value << '\n';
  }
  return cert.guarantee_valid && !cert.holds() ? 1 : 0;
}
