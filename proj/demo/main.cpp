// Walkthrough: analyze a four-agent influence structure, compute its final
// weight distribution, synthesize a Hamiltonian cycle with loops that
// realizes the same distribution, and verify the two procedures agree.

#include <iostream>

#include <degroot/degroot.hpp>

int main() {
  using namespace degroot;

  const StochasticMatrix P = validate_stochastic(Matrix::from_rows({
      {0.9, 0.1, 0.0, 0.0},
      {0.0, 0.75, 0.25, 0.0},
      {0.25, 0.3, 0.1, 0.35},
      {0.2, 0.15, 0.0, 0.65},
  }));

  std::cout << "influence matrix (n=" << P.size() << "):\n";
  for (int i = 0; i < P.size(); ++i) {
    for (int j = 0; j < P.size(); ++j)
      std::cout << (j ? " " : "  ") << fmt_human(P(i, j));
    std::cout << '\n';
  }

  const WeightedDigraph g = digraph_from_matrix(P);
  const AnalysisReport rep = analyze(g);
  std::cout << "\ncommunication digraph: " << rep.components.size()
            << " strong component(s), nu=" << rep.nu << ", b=" << rep.b
            << (rep.regular ? ", regular" : ", not regular") << '\n';

  const ProbabilityVector pi = stationary_vector(P);
  std::cout << "final influence weights pi:";
  for (double w : pi.values()) std::cout << ' ' << fmt_human(w);
  std::cout << '\n';

  const OpinionVector s0 = {0.3, 1.0, 0.2, 0.8};
  const auto traj = iterate_opinions(P, s0, 200);
  std::cout << "opinions after 200 pooling steps:";
  for (double x : traj.back()) std::cout << ' ' << fmt_human(x);
  std::cout << "\npredicted consensus pi . s(0) = "
            << fmt_human(consensus_value(pi, s0)) << '\n';

  const CycleSpec cycle = cycle_from_pi(pi);
  std::cout << "\nsynthesized Hamiltonian cycle (beta=" << fmt_human(*cycle.beta)
            << "):\n";
  for (int k = 0; k < cycle.n; ++k)
    std::cout << "  vertex " << (k + 1) << ": entering="
              << fmt_human(cycle.entering_weight[static_cast<std::size_t>(k)])
              << " loop="
              << fmt_human(cycle.loop_weight[static_cast<std::size_t>(k)])
              << '\n';

  const StochasticMatrix ph = cycle_to_matrix(cycle);
  const EquivalenceReport eq = verify_equivalence(P, ph);
  std::cout << "equivalence check: "
            << (eq.verdict == EquivalenceReport::Verdict::equivalent
                    ? "equivalent"
                    : "NOT equivalent")
            << " (weight distance "
            << fmt_human(eq.weight_distance.value_or(-1.0)) << ")\n";

  std::cout << "\ncycle digraph in DOT form:\n"
            << to_dot(cycle_to_digraph(cycle), true);
  return 0;
}
