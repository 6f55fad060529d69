// Small tour: points -> rectangle ranges -> a few nets, checked and compared.

#include <cstdio>

#include "tnet/tnet.hpp"

int main() {
  using namespace tnet;

  const auto pts = geo::staircase(8);
  const auto h = geo::compile(pts, geo::RangeKind::Rect).hyper;
  std::printf("staircase: %zu points, %zu rectangle ranges\n", h.n(), h.num_edges());

  const double eps = 0.25;
  const auto exact = min_net_exact(h, eps, 2);
  const auto rects = geo::rectangles_eps2net(pts, eps);
  const auto rnd = random_net(h, eps, 2, 1, 1.0, 4);
  const std::pair<const char*, const TSubsetFamily*> runs[] = {{"exact", &exact}, {"rects", &rects}, {"random", &rnd}};
  for (const auto& [label, net] : runs) {
    const auto rep = verify_net(h, eps, 2, *net);
    std::printf("  %-8s size %3zu  %s\n", label, rep.size, rep.valid ? "valid" : "INVALID");
  }

  const auto small = gen::intervals(12);
  std::printf("intervals(12): VC %zu, 2-VC %zu\n", vc_dimension(small), t_vc_dimension(small, 2));
  const auto iv = gen::intervals(30);
  const auto det = det_eps_net(iv, 0.2, 2);
  std::printf("  det eps=0.2 gives %zu points, valid=%d\n", det.size(), verify_net(iv, 0.2, 1, det).valid);

  const auto r = check_turan_identity(6, 3, 2);
  std::printf("Turan(6,3,2) = %zu, smallest net of K_6^3 = %zu\n", r.turan_number, r.min_net_size);
  return 0;
}
