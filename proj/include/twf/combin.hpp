// Index-set combinatorics shared by every module: increasing tuples, their
// lexicographic ranking, merge signs, and small binomial helpers.

#ifndef TWF_COMBIN_HPP
#define TWF_COMBIN_HPP

#include <vector>

#include "twf/rational.hpp"

namespace twf {

/// Strictly increasing index tuple. Form indices run over [1..n]; vertex id
/// sets over [0..n]. Empty tuple = degree-0 object.
using Tuple = std::vector<int>;

/// Binomial coefficient as long; zero for out-of-range arguments.
long binom(long n, long k);

/// All increasing k-tuples in {1,...,n}, lexicographically sorted.
/// k < 0 or k > n yields the empty list; k = 0 yields the single empty tuple.
/// The order fixed here is the basis order used by every matrix in the
/// library.
const std::vector<Tuple>& increasing_tuples(int n, int k);

/// All increasing k-subsets of an arbitrary sorted ground set.
std::vector<Tuple> subsets_of(const Tuple& ground, int k);

/// Lexicographic rank of a tuple within increasing_tuples(n, |t|).
int tuple_rank(int n, const Tuple& t);

/// true when x occurs in the (sorted) tuple.
bool tuple_contains(const Tuple& t, int x);

/// Set difference / union of sorted tuples.
Tuple tuple_minus(const Tuple& a, const Tuple& b);
Tuple tuple_union(const Tuple& a, const Tuple& b);
bool tuple_subset(const Tuple& a, const Tuple& b);

/// Inserts x into sorted tuple t, i.e. sorts the wedge dx^x ∧ dx^t.
/// Returns the permutation sign (+1/-1) and writes the merged tuple to out;
/// returns 0 if x already occurs.
int insert_sign(const Tuple& t, int x, Tuple& out);

/// Sign of merging two disjoint sorted tuples a, b into sorted(a ∪ b) by
/// counting inversions; 0 if they intersect.
int merge_sign(const Tuple& a, const Tuple& b);

/// n! as an exact integer.
Integer factorial(long n);

}  // namespace twf

#endif
