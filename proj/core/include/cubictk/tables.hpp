// Checksummed data tables shipped with the library: the two Aronhold
// invariants as polynomials in the ten cubic coefficients, the
// characteristic-2 split-test covariant, and the degree-72 Weierstrass
// B-coefficient of the family Jacobian used as an independent cross-check.
#pragma once

#include <array>
#include <string>
#include <vector>

#include "cubictk/polyring.hpp"

namespace ctk {

struct TableCorrupt : std::runtime_error {
  explicit TableCorrupt(const std::string& what) : std::runtime_error(what) {}
};

struct InvariantTable {
  // term = (exponents of a0..a9, integer coefficient)
  std::vector<std::pair<std::array<int, 10>, Int>> terms;

  // evaluate at a coefficient vector over any commutative ring
  template <class K>
  K eval(const std::array<K, 10>& a) const {
    K acc = ring_zero(a[0]);
    K one = ring_one(a[0]);
    for (const auto& [e, c] : terms) {
      K m = one;
      for (int i = 0; i < 10; ++i)
        for (int j = 0; j < e[static_cast<size_t>(i)]; ++j)
          m = m * a[static_cast<size_t>(i)];
      // integer coefficient times ring element, via binary decomposition
      K term = ring_zero(a[0]);
      Int n = c < 0 ? Int(-c) : c;
      K addend = m;
      for (long b = 0;
           b < static_cast<long>(mpz_sizeinbase(n.get_mpz_t(), 2)); ++b) {
        if (mpz_tstbit(n.get_mpz_t(), static_cast<mp_bitcnt_t>(b)))
          term = term + addend;
        addend = addend + addend;
      }
      if (c < 0) term = ring_zero(a[0]) - term;
      acc = acc + term;
    }
    return acc;
  }
};

// Aronhold S: degree 4 in the coefficients, isobaric weight (4,4,4).
const InvariantTable& aronhold_s_table();
// Aronhold T: degree 6 in the coefficients, isobaric weight (6,6,6).
const InvariantTable& aronhold_t_table();

// Characteristic-2 covariant rows (k, i, j, l): output bit k accumulates
// (XOR) the products c_i c_j c_l of the input coefficient bits.
const std::vector<std::array<int, 4>>& char2_split_covariant();

// B(t) of the family Jacobian y^2 = x^3 + A(t) x + B(t), degree 72.
const UniPoly<Int>& jacobian_b_of_t();

// directory the tables were loaded from (diagnostics)
const std::string& table_dir();

}  // namespace ctk
