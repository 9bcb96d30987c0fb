#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <random>
#include <vector>

#include "isg/groupoid.hpp"

namespace isg {

using Complex = std::complex<double>;

/// An element of the convolution *-algebra: one value per arrow.
struct GroupoidFunction {
  std::shared_ptr<const FiniteGroupoid> groupoid;
  std::vector<Complex> values;

  static GroupoidFunction zero(std::shared_ptr<const FiniteGroupoid> g);
  static GroupoidFunction delta(std::shared_ptr<const FiniteGroupoid> g, Index arrow);
  double max_abs() const;
};

/// Componentwise within tol. Errors: kGroupoidMismatch.
bool approx_equal(const GroupoidFunction& f, const GroupoidFunction& g, double tol = 1e-12);
double max_abs_difference(const GroupoidFunction& f, const GroupoidFunction& g);

GroupoidFunction operator+(const GroupoidFunction& f, const GroupoidFunction& g);
GroupoidFunction operator*(Complex c, const GroupoidFunction& f);

/// (f*g)(c) = sum over ab = c of f(a) g(b). Errors: kGroupoidMismatch.
GroupoidFunction convolve(const GroupoidFunction& f, const GroupoidFunction& g);
/// f*(a) = conj f(a^-1).
GroupoidFunction involution(const GroupoidFunction& f);

/// Values drawn uniformly from the unit square, real and imaginary parts.
GroupoidFunction random_function(std::shared_ptr<const FiniteGroupoid> g, std::mt19937_64& rng);
/// Integer values in [-3, 3].
GroupoidFunction random_integer_function(std::shared_ptr<const FiniteGroupoid> g, std::mt19937_64& rng);

/// One block per unit u, indexed by the d-fiber G_u: block[c][b] = f(c b^-1).
struct RegularRepresentation {
  std::vector<Index> units;
  std::vector<std::vector<Index>> fibers;
  std::vector<std::vector<Complex>> blocks;  // row-major
};

RegularRepresentation regular_representation(const GroupoidFunction& f);

/// Largest singular value of a row-major n x n matrix.
double spectral_norm(std::size_t n, const std::vector<Complex>& m);

/// Max over units of the spectral norm of the regular representation block.
double reduced_norm(const GroupoidFunction& f);

/// An open, wide, normal group-bundle subgroupoid H of G.
struct Inclusion {
  std::shared_ptr<const FiniteGroupoid> ambient;
  std::shared_ptr<const FiniteGroupoid> sub;
  std::vector<Index> to_ambient;
};

/// Errors: kHypothesisFailed naming the first property that fails.
Inclusion make_inclusion(std::shared_ptr<const FiniteGroupoid> g, const ElementSet& h);

/// Extension by zero.
GroupoidFunction embed(const Inclusion& inc, const GroupoidFunction& f);
/// Restriction to H.
GroupoidFunction conditional_expectation(const Inclusion& inc, const GroupoidFunction& f);

}  // namespace isg
