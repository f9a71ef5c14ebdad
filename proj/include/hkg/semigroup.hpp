#pragma once

#include "hkg/numeric.hpp"

#include <cstdint>
#include <vector>

namespace hkg {

/// A cofinite subsemigroup of the non-negative integers, given by generators
/// with gcd 1. Construction sieves membership past the conductor, so every
/// query afterwards is table lookup or the frobenius rule; values are
/// immutable and safe to share across threads.
class NumericalSemigroup {
  public:
    /// Sorts and dedupes `gens` but keeps the supplied set (no minimalization).
    /// The sieve covers at least a1*a2 (two smallest generators) and
    /// max(min_sieve_bound, ...), growing until the conductor is certified by
    /// a run of a1 consecutive members.
    static NumericalSemigroup from_generators(std::vector<Int> gens,
                                              std::int64_t min_sieve_bound = 0);

    const std::vector<Int>& generators() const { return generators_; }

    /// x >= 0 required; membership for x beyond the sieve follows from
    /// x > frobenius.
    bool contains(const Int& x) const;

    /// Largest non-member, -1 when the semigroup is all of Z_+.
    Int frobenius() const { return frobenius_; }
    Int conductor() const { return frobenius_ + 1; }
    bool is_full() const { return frobenius_ == -1; }

    /// Number of gaps.
    Int genus() const { return gap_count_; }
    std::vector<Int> gaps() const;

    /// Members x > 0 that are not sums of two smaller positive members.
    std::vector<Int> minimal_generators() const;

    /// x is a gap exactly when frobenius - x is a member, for all x in
    /// [0, frobenius].
    bool is_symmetric() const;

    /// Membership table 0..bound (frobenius rule past the internal sieve).
    std::vector<bool> sieve_upto(std::int64_t bound) const;

    std::vector<Int> members_upto(const Int& bound) const;
    Int count_members_upto(const Int& bound) const;

    bool operator==(const NumericalSemigroup& other) const;

  private:
    NumericalSemigroup() = default;

    std::vector<Int> generators_;       // sorted, deduped, gcd 1
    std::vector<std::int64_t> small_;   // generators usable as sieve offsets
    std::vector<bool> sieve_;           // membership for 0..extent
    std::int64_t frobenius_ = -1;
    std::int64_t gap_count_ = 0;
};

/// Semigroup generated by {q*s : s generator of S} and lam.
NumericalSemigroup scale_extend(const NumericalSemigroup& s, const Int& q, const Int& lam);

/// Generator sequence with its gcd tower d_i = gcd(a_1..a_i); telescopic when
/// each a_i/d_i lies in the semigroup of the previous generators scaled by
/// 1/d_{i-1}.
struct TelescopicChain {
    std::vector<Int> ordered_generators;
    std::vector<Int> gcd_tower;
    bool is_telescopic = false;
};

/// Runs the telescopic test on the generators in the supplied order.
TelescopicChain make_telescopic_chain(const std::vector<Int>& ordered_gens);

/// The unique exponent vector with x = sum nu_j * a_j and
/// 0 <= nu_j < d_{j-1}/d_j for j >= 2 (nu_1 unbounded).
std::vector<Int> unique_representation(const TelescopicChain& chain, const Int& x);

}  // namespace hkg
