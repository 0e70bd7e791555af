#pragma once

// Random structure-constant candidates over a finite field. Candidates are not
// guaranteed to be Dorroh pairs; callers filter them with the validators.

#include <random>

#include "support/builders.hpp"

namespace testing_support {

class PairSampler {
 public:
  PairSampler(FieldSpec f, std::uint64_t seed) : f_(f), rng_(seed) {}

  Scalar scalar() { return f_.from_int(static_cast<long>(pick(f_.characteristic()))); }

  /// Sparse random entries; density is the chance an entry is nonzero.
  Matrix random_matrix(std::size_t r, std::size_t c, double density = 0.4) {
    Matrix m(f_, r, c);
    std::bernoulli_distribution nz(density);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (nz(rng_)) m(i, j) = f_.from_int(static_cast<long>(1 + pick(f_.characteristic() - 1)));
    return m;
  }

  Algebra associative_algebra(std::size_t dim, const std::string& stem) {
    Algebra a(f_, default_labels(stem, dim));
    for (int tries = 0; tries < 400; ++tries) {
      a.mult = random_matrix(dim, dim * dim);
      if (validate_algebra(a).passed()) return a;
    }
    a.mult = Matrix(f_, dim, dim * dim);
    return a;
  }

  Coalgebra coassociative_coalgebra(std::size_t dim, const std::string& stem) {
    Coalgebra c = dual(associative_algebra(dim, stem));
    c.counit.reset();
    return c;
  }

  /// One of several families, mixing valid and invalid pairs at H, I of dimension ≤ 2.
  BialgebraPair candidate() {
    switch (pick(5)) {
      case 0: return unitization();
      case 1: return sweedler_variant();
      case 2: return kc2_characters();
      case 3: return nonunital_h();
      default: return mutate(unitization());
    }
  }

  std::mt19937_64& rng() { return rng_; }

 private:
  std::uint64_t pick(std::uint64_t n) { return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(rng_); }

  BialgebraPair unitization() {
    std::size_t di = 1 + pick(2);
    Algebra i = associative_algebra(di, "x");
    Coalgebra ic = coassociative_coalgebra(di, "x");
    ic.basis = i.basis;
    return BialgebraPair{ground(f_), i, ic, scalar_action(f_, di), scalar_coaction(f_, di)};
  }

  BialgebraPair sweedler_variant() {
    Matrix c(f_, 2, 2);
    do c = random_matrix(2, 2, 0.7);
    while (c.rank() < 2);
    Matrix hr = Matrix::from_ints(f_, {{1, 0, 0, 0}, {0, 1, 0, 0}});
    Matrix ir(f_, 2, 4);
    ir.set_block(0, 2, c);
    BialgebraPair p = split_bialgebra_extension(sweedler(f_), hr, ir);
    return pick(2) ? mutate(p) : p;
  }

  BialgebraPair kc2_characters() {
    Bialgebra h = kc2_hopf(f_);
    Algebra i(f_, {"x"});
    i.add(0, 0, 0, scalar());
    Coalgebra ic(f_, {"x"});
    ic.add(0, 0, 0, scalar());
    auto sign = [&] { return f_.from_int(pick(2) ? 1 : -1); };
    BimoduleAction act = zero_action(f_, 2, 1);
    act.left(0, 0) = act.right(0, 0) = f_.one();
    act.left(0, 1) = sign();
    act.right(0, 1) = sign();
    BicomoduleCoaction co = zero_coaction(f_, 2, 1);
    co.left(pick(2), 0) = f_.one();
    co.right(pick(2), 0) = f_.one();
    return BialgebraPair{h, i, ic, act, co};
  }

  BialgebraPair nonunital_h() {
    std::size_t dh = 1 + pick(2), di = pick(2);
    Algebra ha = associative_algebra(dh, "h");
    Coalgebra hc = coassociative_coalgebra(dh, "h");
    hc.basis = ha.basis;
    Algebra i = associative_algebra(di, "x");
    Coalgebra ic = coassociative_coalgebra(di, "x");
    ic.basis = i.basis;
    return BialgebraPair{Bialgebra(ha, hc), i, ic, zero_action(f_, dh, di), zero_coaction(f_, dh, di)};
  }

  BialgebraPair mutate(BialgebraPair p) {
    Matrix* targets[] = {&p.i_alg.mult, &p.i_coalg.comult, &p.act.left, &p.act.right, &p.coact.left, &p.coact.right};
    Matrix& m = *targets[pick(6)];
    if (m.rows() == 0 || m.cols() == 0) return p;
    m(pick(m.rows()), pick(m.cols())) += f_.one();
    return p;
  }

  FieldSpec f_;
  std::mt19937_64 rng_;
};

}  // namespace testing_support
