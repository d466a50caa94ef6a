// Small tour of the library: counts, compression, threshold codes, colorings.

#include <iostream>

#include "ngclique/ngclique.hpp"

int main() {
  using namespace ngc;

  const Graph c5 = parse_graph6("Dhc");
  const auto p = ng_profile(c5);
  std::cout << "C5: k = " << p.cliques.total << ", i = " << p.independents.total << ", sigma = " << p.sigma()
            << ", pi = " << p.pi() << '\n';

  const auto trace = compress_to_threshold(c5);
  std::cout << "compressed in " << trace.pivots.size() << " pivots to code " << recognize(trace.result)->to_display()
            << ", pi = " << pi(trace.result) << '\n';

  const auto codes = extremal_codes(12, 3);
  std::cout << "n = 12, t = 3: " << codes.disjoint.to_display() << " has pi_3 = " << pi_t(build(codes.disjoint), 3) << '\n';

  const GraphFamily fam = parse_coloring("3 3\n0 1 1\n1 2 2\n0 2 3\n");
  std::cout << "rainbow triangle: sum = " << sum_clique_counts(fam) << ", product = " << product_clique_counts(fam) << '\n';
}
