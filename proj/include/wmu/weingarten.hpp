#pragma once

// The unitary Weingarten function Wg : S_L -> Q(n), i.e. the inverse of
// sigma -> n^{#cycles(sigma)} in the group ring Q(n)[S_L].
//
// wg_char uses the character expansion and is cached. wg_inversion solves the
// class-algebra system directly; tests and `wg --check` compare the two.

#include <map>
#include <utility>
#include <vector>

#include "wmu/perm.hpp"
#include "wmu/ratfn.hpp"

namespace wmu {

struct WeingartenTable {
  int L = 0;
  std::map<CycleType, RationalFunction> entries;  // one per partition of L
};

// Wg of any permutation with cycle type mu (L = |mu|). Cached per L.
RationalFunction wg_char(const CycleType& mu);

// The full table for L via the character formula.
WeingartenTable wg_table(int L);

inline constexpr int kDefaultInversionLimit = 8;

// Solves sum_mu g_mu * A(nu, mu) = [nu = id] over Q(n), where
// A(nu, mu) = sum over pi in class mu of n^{#cycles(pi^-1 sigma_nu)}.
// Throws LimitError when L > limit.
WeingartenTable wg_inversion(int L, int limit = kDefaultInversionLimit);

// (-(L + |mu|), Mob(mu)): the leading term of Wg(mu) at n = infinity.
std::pair<int, BigInt> wg_leading(const CycleType& mu);

// One entry u_{row,col} of the matrix; labels are abstract.
struct MatrixEntry {
  int row = 0;
  int col = 0;
};

// Integral of u_{e_1} ... u_{e_m} conj(u_{f_1}) ... conj(u_{f_m}) over Haar
// measure on U(n), for `entries` = e and `conj_entries` = f:
// the sum over label-compatible sigma, tau in S_m of Wg(sigma^-1 tau).
// Sizes must agree (DomainError otherwise); an empty sum gives 0.
RationalFunction moment(const std::vector<MatrixEntry>& entries,
                        const std::vector<MatrixEntry>& conj_entries);

}  // namespace wmu
