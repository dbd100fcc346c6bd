// Evolves a few initial states under the dipolar coupling and prints their
// measures, then streams a small sweep as CSV.

#include <iostream>

#include "mdi/mdi.hpp"

int main() {
  using namespace mdi;
  const DipoleAxis axis = DipoleAxis::z();

  // |0>|1> becomes maximally entangled at t = pi/4.
  const StateSpec product = PureProduct{0.0, kPi};
  for (double t : {0.0, kPi / 8, kPi / 4}) {
    const MeasureReport m = measure(evolve(product, axis, t).pure());
    std::cout << "pure |01>  t=" << format_double(t) << "  concurrence=" << format_double(m.concurrence)
              << "  coherence_a=" << format_double(m.coherence_a) << '\n';
  }

  // Depolarizing the partially entangled state only scales the curve down.
  for (double p : {1.0, 0.6, 0.3}) {
    const StateSpec noisy = Depolarized{0.25, p};
    const MeasureReport m = measure(evolve(noisy, axis, kPi / 4).density());
    std::cout << "depol w=0.25 p=" << format_double(p) << "  concurrence=" << format_double(m.concurrence)
              << "  purity=" << format_double(m.purity) << '\n';
  }

  // The Gibbs state's entanglement does not depend on the dipole orientation.
  for (const Vec3& n : {Vec3{0, 0, 1}, Vec3{1, 0, 0}}) {
    const ComplexMatrix rho = gibbs_state(build_hamiltonian(DipoleAxis(n)), 1.0);
    std::cout << "gibbs beta=1 axis=(" << n[0] << ',' << n[1] << ',' << n[2]
              << ")  concurrence=" << format_double(concurrence_mixed(rho)) << "  purity=" << format_double(purity(rho))
              << '\n';
  }

  // A 5x5 slice of the first preset, written as it is computed.
  SweepConfig cfg = preset("fig1");
  cfg.axes[0].count = 5;
  cfg.axes[1].count = 5;
  RecordWriter out(std::cout, columns(cfg), OutputFormat::csv);
  run_sweep(cfg, [&](const SweepRecord& r) { out.write(r); });
}
