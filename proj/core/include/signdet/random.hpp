#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "signdet/poly.hpp"
#include "signdet/signcond.hpp"

namespace signdet {

using Rng = std::mt19937_64;

/// Integer coefficients uniform in [-bound, bound], degree at most `degree`.
Poly random_poly(Rng& rng, int degree, long bound);

/// Like random_poly but never zero.
Poly random_nonzero_poly(Rng& rng, int degree, long bound);

struct RandomInstance {
  Poly p0;
  std::vector<Poly> polys;
};

/// P0 and P1..Ps all with uniform integer coefficients.
RandomInstance random_instance(Rng& rng, int degree, std::size_t num_polys, long bound);

/// P0 = (X - a_1)...(X - a_k) * h with small rational roots a_j (possibly
/// repeated) so that P0 has many real roots; some P_i share roots with P0.
/// Degrees stay <= degree.
RandomInstance random_rooted_instance(Rng& rng, int degree, std::size_t num_polys, long bound);

/// `size` distinct sign conditions of length `length` (size <= 3^length), lex-sorted.
SignList random_sign_list(Rng& rng, std::size_t length, std::size_t size);

}  // namespace signdet
