#include "toric/pushforward.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "toric/polyhedron.hpp"

namespace toric {

bool MonomialIdeal::is_unit() const {
  return gens.size() == 1 && toric::is_zero(gens[0]);
}

bool MonomialIdeal::contains(const IntVec& f) const {
  for (const auto& g : gens)
    if (dominates_leq(g, f)) return true;
  return false;
}

MonomialIdeal cell_ideal(const IntMatrix& pullback, const IntVec& d_mu,
                         const Cone& cell_cone, int num_target_rays) {
  HPolyhedron p;
  p.dim = num_target_rays;
  for (int r : cell_cone)
    p.cons.push_back({pullback.row(r), Int(-d_mu[std::size_t(r)]), false});
  MonomialIdeal ideal;
  ideal.gens = minimal_integer_solutions(p);
  return ideal;
}

IdealComplex build_complex(const ToricMorphism& phi, const IntVec& d, int i) {
  IdealComplex ic;
  ic.phi = phi;
  ic.i = i;
  ic.p = build_P(phi.source);
  ic.cg = class_group(phi.target);
  ic.pullback = pullback_matrix(phi);
  for (const auto& pair : divisor_pairs(phi, d, i)) {
    MuBlock b;
    b.mu = pair.mu;
    b.d_mu = pair.d_mu;
    b.e_mu = pair.e_mu;
    b.e_class = divisor_class(ic.cg, pair.e_mu);
    for (const auto& cell : ic.p.cells)
      b.ideals.push_back(
          cell_ideal(ic.pullback, b.d_mu, cell, int(phi.target.rays.size())));
    ic.blocks.push_back(std::move(b));
  }
  return ic;
}

std::vector<Int> fine_cohomology(const IdealComplex& ic, const MuBlock& b,
                                 const IntVec& f) {
  IntVec score = add(mul(ic.pullback, f), b.d_mu);
  return subcomplex_cohomology(ic.p, score_mask(ic.p, score));
}

std::vector<IntVec> monomials_of_class(const Fan& target, const ClassGroup& cg,
                                       const IntVec& class_d) {
  if (int(class_d.size()) != cg.rank)
    throw InvalidInputError("class vector length does not match the grading");
  // Any integral representative of the class; the monomials of the class
  // are its translates by principal divisors that stay effective.
  const IntVec f0 = mul(cg.section, class_d);
  HPolyhedron p;
  p.dim = target.n;
  for (std::size_t r = 0; r < target.rays.size(); ++r)
    p.cons.push_back({target.rays[r], Int(-f0[r]), false});
  auto dec = decompose(p);
  std::vector<IntVec> out;
  if (!dec.feasible) return out;
  if (dec.has_lineality || !dec.recession_rays.empty())
    throw InvalidInputError(
        "class has infinitely many monomials; the grading fan is not "
        "complete");
  for (const auto& m : bounded_part_lattice_points(p))
    out.push_back(add(div_char(target, m), f0));
  std::sort(out.begin(), out.end());
  return out;
}

Int hilbert_block_at(const IdealComplex& ic, const MuBlock& b, const IntVec& class_d) {
  Int total = 0;
  const IntVec shifted = add(class_d, b.e_class);
  for (const auto& f : monomials_of_class(ic.phi.target, ic.cg, shifted))
    total += fine_cohomology(ic, b, f)[std::size_t(ic.i)];
  return total;
}

Int hilbert_at(const IdealComplex& ic, const IntVec& class_d) {
  Int total = 0;
  for (const auto& b : ic.blocks) total += hilbert_block_at(ic, b, class_d);
  return total;
}

namespace {

// Kept cells and kernel data of one fine degree of a block's complex.
struct FineSlice {
  std::vector<int> kept;          // global indices of kept cells, dim == i
  std::map<int, int> local;       // global index -> column
  std::vector<RatVec> kernel;     // basis of ker(d^i) in local coordinates
};

class FineScanner {
 public:
  FineScanner(const IdealComplex& ic, const MuBlock& b)
      : ic_(ic), b_(b) {}

  const FineSlice& slice(const IntVec& f) {
    auto it = cache_.find(f);
    if (it != cache_.end()) return it->second;
    FineSlice s;
    IntVec score = add(mul(ic_.pullback, f), b_.d_mu);
    SubcomplexMask mask = score_mask(ic_.p, score);
    std::vector<int> kept_up;
    for (std::size_t c = 0; c < ic_.p.cells.size(); ++c) {
      if (!mask[c]) continue;
      if (ic_.p.cell_dim[c] == ic_.i) {
        s.local[int(c)] = int(s.kept.size());
        s.kept.push_back(int(c));
      } else if (ic_.p.cell_dim[c] == ic_.i + 1) {
        kept_up.push_back(int(c));
      }
    }
    if (kept_up.empty()) {
      // No differential out: the kernel is everything.
      for (std::size_t k = 0; k < s.kept.size(); ++k) {
        RatVec e(s.kept.size(), Rat(0));
        e[k] = 1;
        s.kernel.push_back(std::move(e));
      }
    } else if (!s.kept.empty()) {
      std::map<int, int> up_local;
      for (std::size_t r = 0; r < kept_up.size(); ++r)
        up_local[kept_up[r]] = int(r);
      RatMat d(kept_up.size(), RatVec(s.kept.size(), Rat(0)));
      for (std::size_t col = 0; col < s.kept.size(); ++col) {
        for (const auto& [to, sign] : ic_.p.incidence[std::size_t(s.kept[col])]) {
          auto row = up_local.find(to);
          if (row != up_local.end()) d[std::size_t(row->second)][col] = sign;
        }
      }
      s.kernel = rat_nullspace(d);
    }
    return cache_.emplace(f, std::move(s)).first->second;
  }

  // Cocycles at f spanned by coboundaries and by the coordinate
  // multiplications from one step below, as rows in local coordinates.
  std::vector<RatVec> spanned_rows(const IntVec& f) {
    const FineSlice s = slice(f);  // copy: cache may rehash below
    std::vector<RatVec> rows;
    // Coboundaries of kept cells one dimension down.
    IntVec score = add(mul(ic_.pullback, f), b_.d_mu);
    SubcomplexMask mask = score_mask(ic_.p, score);
    for (std::size_t c = 0; c < ic_.p.cells.size(); ++c) {
      if (!mask[c] || ic_.p.cell_dim[c] != ic_.i - 1) continue;
      RatVec row(s.kept.size(), Rat(0));
      bool nonzero = false;
      for (const auto& [to, sign] : ic_.p.incidence[c]) {
        auto l = s.local.find(to);
        if (l != s.local.end()) {
          row[std::size_t(l->second)] = sign;
          nonzero = true;
        }
      }
      if (nonzero) rows.push_back(std::move(row));
    }
    // Images of the kernels one exponent step down.
    for (std::size_t k = 0; k < f.size(); ++k) {
      if (f[k] <= 0) continue;
      IntVec fk = f;
      fk[k] -= 1;
      const FineSlice& lower = slice(fk);
      for (const auto& z : lower.kernel) {
        RatVec row(s.kept.size(), Rat(0));
        for (std::size_t col = 0; col < lower.kept.size(); ++col) {
          if (z[col] == 0) continue;
          // Monotone masks: cells kept below stay kept.
          row[std::size_t(s.local.at(lower.kept[col]))] = z[col];
        }
        rows.push_back(std::move(row));
      }
    }
    return rows;
  }

 private:
  const IdealComplex& ic_;
  const MuBlock& b_;
  std::map<IntVec, FineSlice> cache_;
};

}  // namespace

std::vector<std::pair<IntVec, Int>> minimal_generators(const IdealComplex& ic,
                                                       const MuBlock& b,
                                                       int box) {
  if (box < 0) throw InvalidInputError("generator box must be nonnegative");
  const std::size_t nvars = ic.phi.target.rays.size();
  FineScanner scanner(ic, b);
  std::vector<std::pair<IntVec, Int>> out;

  IntVec f = zero_vec(nvars);
  while (true) {
    Int dim_kernel = Int(scanner.slice(f).kernel.size());
    if (dim_kernel > 0) {
      auto rows = scanner.spanned_rows(f);
      Int spanned = 0;
      if (!rows.empty()) spanned = rat_rank(rows);
      Int fresh = dim_kernel - spanned;
      if (fresh > 0) out.emplace_back(f, fresh);
    }
    // Odometer over [0, box]^nvars in lexicographic order.
    std::size_t k = nvars;
    while (k > 0) {
      --k;
      if (f[k] < box) {
        f[k] += 1;
        for (std::size_t t = k + 1; t < nvars; ++t) f[t] = 0;
        break;
      }
      if (k == 0) return out;
    }
    if (nvars == 0) return out;
  }
}

}  // namespace toric
