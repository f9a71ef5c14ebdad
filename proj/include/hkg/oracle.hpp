#pragma once

#include <cstdint>
#include <set>
#include <vector>

// Brute-force reference implementations used as test oracles and by the CLI
// --verify flag. Deliberately simple and slow, and deliberately sharing no
// code with the semigroup module: membership here is found by enumerating
// combinations, not by the forward sieve.
namespace hkg::oracle {

struct OracleConfig {
    std::int64_t exhaustive_bound = 0;  // 0: derive 10*a1*a2 from the input
    std::int64_t max_coeff = 1 << 20;   // cap per generator coefficient
};

/// All members <= bound, by nested enumeration of coefficient vectors.
std::set<std::int64_t> oracle_members(const std::vector<std::int64_t>& gens, std::int64_t bound,
                                      const OracleConfig& cfg = {});

/// Membership table 0..bound grown by worklist closure (member + generator).
std::vector<bool> oracle_membership(const std::vector<std::int64_t>& gens, std::int64_t bound);

/// Smallest c such that c..c+a1-1 are all members; equals frobenius + 1.
std::int64_t oracle_conductor(const std::vector<std::int64_t>& gens);

std::vector<std::int64_t> oracle_gaps(const std::vector<std::int64_t>& gens);

/// Members x > 0 not expressible as a sum of two smaller positive members,
/// by direct double loop.
std::vector<std::int64_t> oracle_minimal_generators(const std::vector<std::int64_t>& gens);

bool oracle_is_symmetric(const std::vector<std::int64_t>& gens);

}  // namespace hkg::oracle
