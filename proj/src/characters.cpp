#include "toric/characters.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "toric/polyhedron.hpp"

namespace toric {

KernelCharacters kernel_characters(const ToricMorphism& phi) {
  if (phi.map.rows != phi.target.n || phi.map.cols != phi.source.n)
    throw InvalidInputError("lattice map shape does not match the fans");
  if (rational_rank(phi.map) < phi.map.rows)
    throw InvalidInputError(
        "lattice map is not surjective; the fibre torus is ill-defined");
  CokernelProjection ck = cokernel_projection(phi.map.transpose());
  KernelCharacters kc;
  kc.rank = ck.rank;
  kc.proj = ck.proj;
  kc.section = ck.section;
  return kc;
}

namespace {

// Geometry of one target chart: the dual basis of the maximal cone and the
// lattice map expressed in it.  Columns of c_sigma are the characters dual
// to the cone's rays; phi_sigma sends chart exponents to source characters.
struct ChartFrame {
  IntMatrix c_sigma;    // n_target x n_target
  IntMatrix phi_sigma;  // n_source x n_target
};

ChartFrame chart_frame(const ToricMorphism& phi, int t) {
  const Cone& sigma = phi.target.max_cones.at(std::size_t(t));
  if (int(sigma.size()) != phi.target.n)
    throw InvalidInputError("target cone is not full-dimensional");
  std::vector<IntVec> rows;
  for (int r : sigma) rows.push_back(phi.target.rays[std::size_t(r)]);
  ChartFrame frame;
  frame.c_sigma = inverse_unimodular(IntMatrix::from_rows(rows));
  frame.phi_sigma = mul(phi.map.transpose(), frame.c_sigma);
  return frame;
}

std::vector<IntVec> gamma_impl(const ToricMorphism& phi,
                               const KernelCharacters& kc, const IntVec& d,
                               int i, int t) {
  const Cone& sigma = phi.target.max_cones.at(std::size_t(t));
  const std::vector<int> rays_in = rays_into_cone(phi, sigma);
  std::set<IntVec> pts;
  for (const auto& j : restricted_neg_sets(phi, sigma, i)) {
    HPolyhedron p;
    p.dim = phi.source.n;
    std::set<int> in_j(j.begin(), j.end());
    for (int r : rays_in) {
      const IntVec& u = phi.source.rays[std::size_t(r)];
      if (in_j.count(r))
        p.cons.push_back({neg(u), Int(d[std::size_t(r)] + 1), false});
      else
        p.cons.push_back({u, Int(-d[std::size_t(r)]), false});
    }
    auto dec = decompose(p);
    if (!dec.feasible) continue;
    if (dec.has_lineality)
      throw UnboundedContributionError(
          "contributing characters over a chart contain a line");
    for (const auto& r : dec.recession_rays) {
      if (!is_zero(mul(kc.proj, r)))
        throw UnboundedContributionError(
            "contributing characters are unbounded transversally to the "
            "fibre");
    }
    for (auto& v : bounded_part_lattice_points(p)) pts.insert(std::move(v));
  }
  return std::vector<IntVec>(pts.begin(), pts.end());
}

// Divisor of the local generator over chart t (see local_divisor); gamma_t
// must be the chart's contributing characters.
IntVec local_divisor_impl(const ToricMorphism& phi,
                          const KernelCharacters& kc,
                          const std::vector<IntVec>& gamma_t, int t,
                          const IntVec& mu) {
  ChartFrame frame = chart_frame(phi, t);
  const IntVec base = mul(kc.section, mu);
  // Chart exponents of the contributing characters of fibre degree mu,
  // relative to the section representative; the zero exponent (the
  // representative itself) anchors the minimum.
  std::vector<IntVec> exponents{zero_vec(std::size_t(phi.target.n))};
  bool contributes = false;
  for (const auto& v : gamma_t) {
    if (mul(kc.proj, v) != mu) continue;
    contributes = true;
    auto f = solve_integer(frame.phi_sigma, sub(v, base));
    if (!f)
      throw std::logic_error(
          "character of trivial fibre degree is not a chart monomial");
    exponents.push_back(*f);
  }
  if (!contributes)
    throw InvalidInputError("degree does not contribute over this chart");
  IntVec f_min = exponents.front();
  for (const auto& f : exponents) f_min = comp_min(f_min, f);
  return div_char(phi.target, mul(frame.c_sigma, f_min));
}

}  // namespace

std::vector<IntVec> gamma_sigma(const ToricMorphism& phi, const IntVec& d,
                                int i, int target_max_cone) {
  if (d.size() != phi.source.rays.size())
    throw InvalidInputError("divisor length does not match ray count");
  return gamma_impl(phi, kernel_characters(phi), d, i, target_max_cone);
}

CharacterSet character_set(const ToricMorphism& phi, const IntVec& d, int i) {
  if (d.size() != phi.source.rays.size())
    throw InvalidInputError("divisor length does not match ray count");
  CharacterSet cs;
  cs.kernel = kernel_characters(phi);
  std::set<IntVec> all;
  for (std::size_t t = 0; t < phi.target.max_cones.size(); ++t) {
    cs.gamma.push_back(gamma_impl(phi, cs.kernel, d, i, int(t)));
    std::set<IntVec> proj;
    for (const auto& v : cs.gamma.back()) proj.insert(mul(cs.kernel.proj, v));
    cs.projected.emplace_back(proj.begin(), proj.end());
    all.insert(proj.begin(), proj.end());
  }
  cs.all.assign(all.begin(), all.end());
  return cs;
}

IntVec local_divisor(const ToricMorphism& phi, const IntVec& d, int i,
                     int target_max_cone, const IntVec& mu) {
  if (d.size() != phi.source.rays.size())
    throw InvalidInputError("divisor length does not match ray count");
  KernelCharacters kc = kernel_characters(phi);
  auto gamma_t = gamma_impl(phi, kc, d, i, target_max_cone);
  return local_divisor_impl(phi, kc, gamma_t, target_max_cone, mu);
}

std::vector<DivisorPair> divisor_pairs(const ToricMorphism& phi,
                                       const IntVec& d, int i) {
  CharacterSet cs = character_set(phi, d, i);
  std::vector<DivisorPair> out;
  for (const auto& mu : cs.all) {
    std::vector<int> eligible;
    std::vector<IntVec> local(phi.target.max_cones.size());
    for (std::size_t t = 0; t < phi.target.max_cones.size(); ++t) {
      if (!std::binary_search(cs.projected[t].begin(), cs.projected[t].end(),
                              mu))
        continue;
      eligible.push_back(int(t));
      local[t] = local_divisor_impl(phi, cs.kernel, cs.gamma[t], int(t), mu);
    }
    const int tau = eligible.front();
    // The charts' local generators differ by the divisors of rational
    // functions; the componentwise minimum of the differences (capped at
    // zero) is minus the effective divisor reconciling them.
    IntVec minus_e = zero_vec(phi.target.rays.size());
    for (int t : eligible)
      if (t != tau) minus_e = comp_min(minus_e, sub(local[t], local[tau]));
    DivisorPair pair;
    pair.mu = mu;
    pair.tau = tau;
    pair.e_mu = neg(minus_e);
    if (!all_nonneg(pair.e_mu))
      throw std::logic_error("chart correction divisor must be effective");
    pair.d_mu = add(add(div_char(phi.source, mul(cs.kernel.section, mu)), d),
                    pullback_divisor(phi, sub(local[std::size_t(tau)],
                                              pair.e_mu)));
    out.push_back(std::move(pair));
  }
  return out;
}

}  // namespace toric
