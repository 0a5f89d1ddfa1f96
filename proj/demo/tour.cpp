// Small tour of the library: decomposition, word problem, a quotient order.
#include <iostream>

#include "selfsim/selfsim.hpp"

int main() {
  using namespace selfsim;
  const auto w = parse_word(4, "a1*a2");
  const auto d = decompose(w);
  std::cout << "a1*a2 in G_4: root " << to_cycle_string(d.root) << ", states";
  for (const auto& s : d.states) std::cout << " " << to_string(s);
  std::cout << "\n";

  std::cout << "a1^3 trivial: " << std::boolalpha << is_identity(parse_word(4, "a1^3")) << "\n";
  std::cout << "order of a1*a2: " << element_order(w).value_or(0) << "\n";
  std::cout << "|G_4 / Stab(2)| = " << to_string(quotient_order(4, 2)) << "\n";
  std::cout << "Hausdorff dimension of the closure of G_4: " << to_string(hausdorff_closed_form(4), 20) << "\n";
}
